#include "k3cyclo/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace k3cyclo {

void FactoredCharPoly::validate() const {
    for (const auto& [m, e] : cyclotomic_factors) {
        if (m < 3) throw std::domain_error("FactoredCharPoly: cyclotomic index must be >= 3 (use the linear exponents)");
        if (e == 0) throw std::domain_error("FactoredCharPoly: zero multiplicity");
    }
    if (salem_factor && (salem_factor->is_zero() || !salem_factor->is_monic()))
        throw std::domain_error("FactoredCharPoly: Salem factor must be monic");
    if (degree() % 2 != 0)
        throw std::domain_error("FactoredCharPoly: total degree must be even");
}

std::size_t FactoredCharPoly::degree() const {
    std::size_t d = n_plus + n_minus;
    for (const auto& [m, e] : cyclotomic_factors) d += euler_phi(m) * e;
    if (salem_factor) d += salem_factor->deg();
    return d;
}

std::size_t FactoredCharPoly::half_degree() const {
    std::size_t d = degree();
    if (d % 2 != 0) throw std::domain_error("FactoredCharPoly: odd degree has no half");
    return d / 2;
}

IntPolynomial FactoredCharPoly::expand() const {
    IntPolynomial f = f1();
    f = f * IntPolynomial{{-1, 1}}.pow(n_plus);
    f = f * IntPolynomial{{1, 1}}.pow(n_minus);
    return f;
}

IntPolynomial FactoredCharPoly::f1() const {
    IntPolynomial f = IntPolynomial::constant(1);
    for (const auto& [m, e] : cyclotomic_factors) f = f * cyclotomic(m).pow(e);
    if (salem_factor) f = f * *salem_factor;
    return f;
}

Int FactoredCharPoly::eval(int x) const {
    Int v = f1_eval(x);
    v *= pow_int(Int(x) - 1, n_plus);
    v *= pow_int(Int(x) + 1, n_minus);
    return v;
}

Int FactoredCharPoly::f1_eval(int x) const {
    Int v = 1;
    for (const auto& [m, e] : cyclotomic_factors) v *= pow_int(cyclotomic(m).eval(x), e);
    if (salem_factor) v *= salem_factor->eval(x);
    return v;
}

Int FactoredCharPoly::d0() const {
    Int v = f1_eval(1) * f1_eval(-1);
    return half_degree() % 2 ? -v : v;
}

std::vector<Factor> factor_set(const FactoredCharPoly& f) {
    std::vector<Factor> out;
    for (const auto& [m, e] : f.cyclotomic_factors) {
        IntPolynomial p = cyclotomic(m);
        std::size_t d = p.deg();
        out.push_back(Factor{Factor::Kind::Cyclotomic, m, std::move(p), "cyc" + std::to_string(m), d});
    }
    if (f.salem_factor) {
        std::string name = f.salem_index ? "salem" + std::to_string(*f.salem_index) : "salem";
        out.push_back(Factor{Factor::Kind::Salem, f.salem_index.value_or(0), *f.salem_factor, name,
                             f.salem_factor->deg()});
    }
    if (f.n_plus > 0)
        out.push_back(Factor{Factor::Kind::XMinus1, 1, IntPolynomial{{-1, 1}}, "x-1", 1});
    if (f.n_minus > 0)
        out.push_back(Factor{Factor::Kind::XPlus1, 2, IntPolynomial{{1, 1}}, "x+1", 1});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.name < b.name;
    });
    return out;
}

DecomposeResult decompose(const FactoredCharPoly& f) {
    f.validate();
    return DecomposeResult{f.f1(), f.n_plus, f.n_minus, f.d0(), factor_set(f)};
}

namespace {

C1Report c1_from_values(const Int& at1, const Int& atm1, std::size_t n) {
    Int prod = at1 * atm1;
    if (n % 2) prod = -prod;
    bool holds = is_square_int(boost::multiprecision::abs(at1)) &&
                 is_square_int(boost::multiprecision::abs(atm1)) && is_square_int(prod);
    return C1Report{holds, at1, atm1, prod};
}

} // namespace

C1Report condition_c1(const FactoredCharPoly& f) {
    f.validate();
    return c1_from_values(f.eval(1), f.eval(-1), f.half_degree());
}

C1Report condition_c1(const IntPolynomial& f) {
    if (f.is_zero() || f.deg() % 2 != 0)
        throw std::domain_error("condition_c1: polynomial of even positive degree expected");
    return c1_from_values(f.eval(1), f.eval(-1), f.deg() / 2);
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool is_linear(const Factor& f) {
    return f.kind == Factor::Kind::XMinus1 || f.kind == Factor::Kind::XPlus1;
}

} // namespace

ObstructionGroup g_f(const FactoredCharPoly& f, std::uint64_t seed) {
    f.validate();
    ObstructionGroup out;
    out.factors = factor_set(f);
    const auto& I = out.factors;
    D0Context ctx{f.n_plus, f.n_minus, f.d0()};
    UnionFind uf(I.size());
    for (std::size_t i = 0; i < I.size(); ++i) {
        for (std::size_t j = i + 1; j < I.size(); ++j) {
            const Factor& a = I[i];
            const Factor& b = I[j];
            if (is_linear(a) && is_linear(b)) {
                out.skipped_pairs.emplace_back(i, j); // Pi_{x-1,x+1} is undefined
                continue;
            }
            bool salem_pair = a.kind == Factor::Kind::Salem || b.kind == Factor::Kind::Salem;
            if (salem_pair && (is_linear(a) || is_linear(b))) {
                out.skipped_pairs.emplace_back(i, j); // no Pi rule for Salem x linear
                continue;
            }
            SymmetryRequirement req =
                salem_pair ? SymmetryRequirement::PlusOnly : SymmetryRequirement::PlusOrMinus;
            auto certs = pi_set(a.poly, b.poly, ctx, req, seed);
            if (!certs.empty()) {
                out.edges.push_back(GfEdge{i, j, certs.front()});
                uf.unite(i, j);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < I.size(); ++i) comps[uf.find(i)].push_back(i);
    for (auto& [root, members] : comps) out.components.push_back(members);
    std::sort(out.components.begin(), out.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.rank = out.components.empty() ? 0 : out.components.size() - 1;
    return out;
}

bool check_mod8(unsigned r, unsigned s) { return r % 8 == s % 8; }

SignatureTable signature_book_keeping(std::size_t deg_c, unsigned rho, bool minus_part) {
    if (rho < 1 || rho > 20) throw std::domain_error("signature_book_keeping: rho out of range [1, 20]");
    if (deg_c + rho != 22)
        throw std::domain_error("signature_book_keeping: deg(C) + rho must equal 22");
    SignatureTable t;
    t.tau_linear = {1, rho - 1};
    t.linear_is_x_plus_1 = minus_part;
    t.tau_c = {2, static_cast<unsigned>(deg_c) - 2};
    t.maximum = {t.tau_linear.first + t.tau_c.first, t.tau_linear.second + t.tau_c.second};
    if (t.maximum != std::make_pair(3u, 19u))
        throw internal_error("signature_book_keeping: maximum is not (3,19)");
    return t;
}

SignatureTable signature_book_keeping(const FactoredCharPoly& c, unsigned rho, bool minus_part) {
    return signature_book_keeping(c.degree(), rho, minus_part);
}

} // namespace k3cyclo
