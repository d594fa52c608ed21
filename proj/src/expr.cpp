#include "k3cyclo/expr.hpp"

#include <cctype>
#include <sstream>

namespace k3cyclo {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool consume_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    std::uint64_t parse_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected an integer", i);
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (1ull << 62)) throw ParseError("integer too large", i);
            ++i;
        }
        return v;
    }
};

/// Dense polynomial: [+-] term ([+-] term)*, term = INT | INT x[^k] | x[^k].
IntPolynomial parse_dense(Cursor& c, char stop) {
    IntPolynomial acc = IntPolynomial::zero();
    bool first = true;
    for (;;) {
        c.skip_ws();
        int sign = 1;
        if (c.consume('+')) {
        } else if (c.consume('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        c.skip_ws();
        Int coef = 1;
        bool have_coef = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coef = Int(c.parse_uint());
            have_coef = true;
        }
        c.consume('*'); // optional 2*x
        std::size_t power = 0;
        if (c.consume_word("x")) {
            power = 1;
            if (c.consume('^')) power = static_cast<std::size_t>(c.parse_uint());
        } else if (!have_coef) {
            throw ParseError("expected a term", c.i);
        }
        acc = acc + IntPolynomial::monomial(sign * coef, power);
        first = false;
        c.skip_ws();
        if (c.i >= c.s.size() || c.s[c.i] == stop) break;
        if (c.s[c.i] != '+' && c.s[c.i] != '-') break;
    }
    return acc;
}

struct Atom {
    enum class Kind { Cyc, Salem, Dense } kind;
    std::uint64_t index = 0; // cyc/salem argument
    IntPolynomial dense;
};

Atom parse_atom(Cursor& c) {
    if (c.consume_word("cyc")) {
        if (!c.consume('(')) throw ParseError("expected '(' after cyc", c.i);
        std::uint64_t m = c.parse_uint();
        if (m < 1) throw ParseError("cyc(m) requires m >= 1", c.i);
        if (!c.consume(')')) throw ParseError("expected ')'", c.i);
        return Atom{Atom::Kind::Cyc, m, {}};
    }
    if (c.consume_word("salem")) {
        if (!c.consume('(')) throw ParseError("expected '(' after salem", c.i);
        std::uint64_t n = c.parse_uint();
        if (!c.consume(')')) throw ParseError("expected ')'", c.i);
        return Atom{Atom::Kind::Salem, n, {}};
    }
    if (c.consume('(')) {
        IntPolynomial d = parse_dense(c, ')');
        if (!c.consume(')')) throw ParseError("expected ')'", c.i);
        return Atom{Atom::Kind::Dense, 0, std::move(d)};
    }
    throw ParseError("expected cyc(...), salem(...) or a parenthesized polynomial", c.i);
}

bool looks_factored(std::string_view s) {
    return s.find("cyc") != std::string_view::npos ||
           s.find("salem") != std::string_view::npos || s.find('(') != std::string_view::npos;
}

} // namespace

ParsedPoly parse_poly_expr(std::string_view text) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty expression", 0);
    if (!looks_factored(text)) {
        IntPolynomial d = parse_dense(c, '\0');
        if (!c.done()) throw ParseError("trailing input after polynomial", c.i);
        if (d.is_zero()) throw ParseError("zero polynomial", 0);
        return d;
    }

    FactoredCharPoly f;
    bool factored_ok = true;
    IntPolynomial expanded = IntPolynomial::constant(1);
    for (;;) {
        Atom a = parse_atom(c);
        std::uint64_t e = 1;
        if (c.consume('^')) {
            e = c.parse_uint();
            if (e == 0) throw ParseError("zero exponent", c.i);
        }
        switch (a.kind) {
            case Atom::Kind::Cyc:
                if (a.index == 1)
                    f.n_plus += static_cast<unsigned>(e);
                else if (a.index == 2)
                    f.n_minus += static_cast<unsigned>(e);
                else
                    f.cyclotomic_factors[a.index] += static_cast<unsigned>(e);
                expanded = expanded * cyclotomic(a.index).pow(e);
                break;
            case Atom::Kind::Salem:
                if (e != 1) throw ParseError("salem factors carry exponent 1", c.i);
                if (f.salem_factor) throw ParseError("at most one salem factor", c.i);
                f.salem_factor = salem_family(a.index);
                f.salem_index = a.index;
                expanded = expanded * salem_family(a.index);
                break;
            case Atom::Kind::Dense: {
                if (a.dense.is_zero()) throw ParseError("zero factor", c.i);
                if (a.dense.coeffs() == std::vector<Int>{-1, 1})
                    f.n_plus += static_cast<unsigned>(e);
                else if (a.dense.coeffs() == std::vector<Int>{1, 1})
                    f.n_minus += static_cast<unsigned>(e);
                else
                    factored_ok = false;
                expanded = expanded * a.dense.pow(e);
                break;
            }
        }
        if (!c.consume('*')) break;
    }
    if (!c.done()) throw ParseError("trailing input", c.i);
    if (factored_ok) return f;
    return expanded;
}

std::string render(const FactoredCharPoly& f) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    if (f.salem_factor) {
        sep();
        if (f.salem_index)
            os << "salem(" << *f.salem_index << ")";
        else
            os << "(" << to_string(*f.salem_factor) << ")";
    }
    for (auto it = f.cyclotomic_factors.rbegin(); it != f.cyclotomic_factors.rend(); ++it) {
        sep();
        os << "cyc(" << it->first << ")";
        if (it->second > 1) os << "^" << it->second;
    }
    if (f.n_plus) {
        sep();
        os << "(x-1)";
        if (f.n_plus > 1) os << "^" << f.n_plus;
    }
    if (f.n_minus) {
        sep();
        os << "(x+1)";
        if (f.n_minus > 1) os << "^" << f.n_minus;
    }
    if (first) os << "1";
    return os.str();
}

std::string render(const IntPolynomial& p) { return to_string(p); }

std::string render(const ParsedPoly& p) {
    return std::visit([](const auto& v) { return render(v); }, p);
}

IntPolynomial expand(const ParsedPoly& p) {
    if (std::holds_alternative<IntPolynomial>(p)) return std::get<IntPolynomial>(p);
    return std::get<FactoredCharPoly>(p).expand();
}

} // namespace k3cyclo
