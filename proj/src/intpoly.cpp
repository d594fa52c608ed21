#include "k3cyclo/intpoly.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace k3cyclo {

namespace {
const Int kZero = 0;
}

IntPolynomial IntPolynomial::monomial(Int a, std::size_t k) {
    if (a == 0) return zero();
    std::vector<Int> c(k + 1);
    c[k] = std::move(a);
    return IntPolynomial{std::move(c)};
}

std::size_t IntPolynomial::deg() const {
    if (c_.empty()) throw std::domain_error("deg(): zero polynomial has degree -infinity");
    return c_.size() - 1;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
    return c_.back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial{std::move(c)};
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial{std::move(c)};
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial{std::move(c)};
}

IntPolynomial IntPolynomial::pow(unsigned long k) const {
    IntPolynomial r = IntPolynomial::constant(1);
    IntPolynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

IntPolynomial IntPolynomial::reciprocal() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return IntPolynomial{std::move(c)};
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::domain_error("euler_phi: m must be >= 1");
    std::uint64_t result = m;
    std::uint64_t n = m;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

IntPolynomial x_pow_minus_one(std::uint64_t m) {
    std::vector<Int> c(m + 1);
    c[0] = -1;
    c[m] = 1;
    return IntPolynomial{std::move(c)};
}

IntPolynomial cyclotomic_memo(std::uint64_t m, std::map<std::uint64_t, IntPolynomial>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    IntPolynomial f = x_pow_minus_one(m);
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        if (d < m) f = div_exact(f, cyclotomic_memo(d, memo));
        std::uint64_t e = m / d;
        if (e != d && e < m) f = div_exact(f, cyclotomic_memo(e, memo));
    }
    memo.emplace(m, f);
    return f;
}

} // namespace

IntPolynomial cyclotomic(std::uint64_t m) {
    if (m == 0) throw std::domain_error("cyclotomic: m must be >= 1");
    std::map<std::uint64_t, IntPolynomial> memo;
    return cyclotomic_memo(m, memo);
}

IntPolynomial salem_family(std::uint64_t n) {
    Int nn = n;
    return IntPolynomial{{1, -nn, -1, 2 * nn - 1, -1, -nn, 1}};
}

Int eval_int(const IntPolynomial& p, const Int& x) { return p.eval(x); }

SymmetryClass symmetry_class(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("symmetry_class: zero polynomial");
    std::size_t d = p.deg();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) plus = false;
        if (p.coeff(i) != -p.coeff(d - i)) minus = false;
    }
    if (plus) return SymmetryClass::Plus;
    if (minus) return SymmetryClass::Minus;
    return SymmetryClass::None;
}

namespace {

/// Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R with deg R < deg B.
/// The full power of lc(B) matters for the subresultant bookkeeping, so
/// skipped reduction steps are compensated at the end.
IntPolynomial pseudo_rem(IntPolynomial A, const IntPolynomial& B) {
    const std::size_t db = B.deg();
    const Int& lb = B.leading();
    unsigned long needed = static_cast<unsigned long>(A.deg() - db) + 1;
    unsigned long applied = 0;
    while (!A.is_zero() && A.deg() >= db) {
        std::size_t da = A.deg();
        IntPolynomial t = IntPolynomial::monomial(A.leading(), da - db) * B;
        std::vector<Int> c(A.coeffs());
        for (auto& v : c) v *= lb;
        A = IntPolynomial{std::move(c)} - t;
        ++applied;
    }
    if (applied < needed && !A.is_zero()) {
        Int scale = pow_int(lb, needed - applied);
        std::vector<Int> c(A.coeffs());
        for (auto& v : c) v *= scale;
        A = IntPolynomial{std::move(c)};
    }
    return A;
}

Int div_exact_int(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw internal_error("subresultant: non-exact interior division");
    return q;
}

} // namespace

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero input");
    IntPolynomial A = f, B = g;
    int s = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() % 2) && (B.deg() % 2)) s = -s;
        std::swap(A, B);
    }
    if (B.deg() == 0) {
        if (A.deg() == 0) return 1;
        return s * pow_int(B.leading(), static_cast<unsigned long>(A.deg()));
    }
    Int gg = 1, h = 1;
    for (;;) {
        std::size_t da = A.deg(), db = B.deg();
        std::size_t delta = da - db;
        if ((da % 2) && (db % 2)) s = -s;
        IntPolynomial R = pseudo_rem(A, B);
        if (R.is_zero()) return 0; // common factor of positive degree
        A = B;
        Int denom = gg * pow_int(h, static_cast<unsigned long>(delta));
        std::vector<Int> c(R.coeffs());
        for (auto& v : c) v = div_exact_int(v, denom);
        B = IntPolynomial{std::move(c)};
        gg = A.leading();
        if (delta > 0) {
            Int num = pow_int(gg, static_cast<unsigned long>(delta));
            h = div_exact_int(num, pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (B.deg() == 0) {
            std::size_t q = A.deg();
            Int num = pow_int(B.leading(), static_cast<unsigned long>(q));
            Int res = div_exact_int(num, pow_int(h, static_cast<unsigned long>(q - 1)));
            return s * res;
        }
    }
}

IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial::zero();
    if (a.deg() < b.deg()) throw std::domain_error("div_exact: not divisible (degree)");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.deg() - b.deg() + 1);
    const Int& lb = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& lead = rem[k + b.deg()];
        if (lead == 0) continue;
        Int step = lead / lb;
        if (step * lb != lead) throw std::domain_error("div_exact: not divisible");
        q[k] = step;
        for (std::size_t i = 0; i <= b.deg(); ++i) rem[k + i] -= step * b.coeff(i);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("div_exact: nonzero remainder");
    return IntPolynomial{std::move(q)};
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.deg() + 1; i-- > 0;) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.str();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace k3cyclo
