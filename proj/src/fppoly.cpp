#include "k3cyclo/fppoly.hpp"
#include "k3cyclo/numtheory.hpp"

#include <algorithm>
#include <random>

namespace k3cyclo {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s < a || s >= p) s -= p;
    return s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

} // namespace

FpPolynomial::FpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    if (!is_prime_u64(p)) throw std::domain_error("FpPolynomial: modulus is not prime");
    for (auto& v : c_) v %= p_;
    trim();
}

std::size_t FpPolynomial::deg() const {
    if (c_.empty()) throw std::domain_error("FpPolynomial::deg: zero polynomial");
    return c_.size() - 1;
}

std::uint64_t FpPolynomial::leading() const {
    if (c_.empty()) throw std::domain_error("FpPolynomial::leading: zero polynomial");
    return c_.back();
}

std::uint64_t FpPolynomial::eval(std::uint64_t x) const {
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x, p_), *it, p_);
    return acc;
}

FpPolynomial FpPolynomial::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    u64 inv = invmod(c_.back(), p_);
    std::vector<u64> c(c_);
    for (auto& v : c) v = mulmod(v, inv, p_);
    return FpPolynomial{p_, std::move(c)};
}

FpPolynomial FpPolynomial::derivative() const {
    if (c_.size() <= 1) return fp_zero(p_);
    std::vector<u64> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
    return FpPolynomial{p_, std::move(c)};
}

FpPolynomial FpPolynomial::reciprocal() const {
    std::vector<u64> c(c_.rbegin(), c_.rend());
    return FpPolynomial{p_, std::move(c)};
}

FpPolynomial FpPolynomial::reciprocal_monic() const {
    if (coeff(0) == 0) throw std::domain_error("reciprocal_monic: h(0) = 0");
    return reciprocal().monic();
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
    return FpPolynomial{a.p_, std::move(c)};
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) {
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(a.coeff(i), b.coeff(i), a.p_);
    return FpPolynomial{a.p_, std::move(c)};
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return fp_zero(a.p_);
    std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = addmod(c[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    return FpPolynomial{a.p_, std::move(c)};
}

bool operator<(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
}

FpPolynomial fp_zero(std::uint64_t p) { return FpPolynomial{p, {}}; }
FpPolynomial fp_one(std::uint64_t p) { return FpPolynomial{p, {1}}; }
FpPolynomial fp_x(std::uint64_t p) { return FpPolynomial{p, {0, 1}}; }

FpPolynomial divmod(const FpPolynomial& a, const FpPolynomial& b, FpPolynomial* quot) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    const u64 p = a.p_;
    std::vector<u64> rem(a.c_);
    std::vector<u64> q;
    if (!a.is_zero() && a.deg() >= b.deg()) {
        q.assign(a.deg() - b.deg() + 1, 0);
        u64 linv = invmod(b.leading(), p);
        for (std::size_t k = q.size(); k-- > 0;) {
            u64 lead = rem[k + b.deg()];
            if (lead == 0) continue;
            u64 step = mulmod(lead, linv, p);
            q[k] = step;
            for (std::size_t i = 0; i <= b.deg(); ++i)
                rem[k + i] = submod(rem[k + i], mulmod(step, b.coeff(i), p), p);
        }
    }
    if (quot) *quot = FpPolynomial{p, std::move(q)};
    return FpPolynomial{p, std::move(rem)};
}

FpPolynomial fp_gcd(FpPolynomial a, FpPolynomial b) {
    while (!b.is_zero()) {
        FpPolynomial r = divmod(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

FpPolynomial fp_powmod(const FpPolynomial& base, const Int& e, const FpPolynomial& mod) {
    FpPolynomial r = fp_one(base.modulus());
    FpPolynomial b = divmod(base, mod);
    Int k = e;
    while (k > 0) {
        if (mod2(k)) r = divmod(r * b, mod);
        b = divmod(b * b, mod);
        k >>= 1;
    }
    return r;
}

FpPolynomial reduce_mod_p(const IntPolynomial& f, std::uint64_t p) {
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        Int r = v % p;
        if (r < 0) r += p;
        c.push_back(static_cast<u64>(r));
    }
    return FpPolynomial{p, std::move(c)};
}

namespace {

/// p-th root of a polynomial whose exponents are all multiples of p
/// (over the prime field, coefficients are fixed by Frobenius).
FpPolynomial pth_root(const FpPolynomial& f) {
    const u64 p = f.modulus();
    std::vector<u64> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p))
        c.push_back(f.coeff(i));
    return FpPolynomial{p, std::move(c)};
}

void squarefree_decompose(const FpPolynomial& f, unsigned mult, std::vector<std::pair<FpPolynomial, unsigned>>& out) {
    const u64 p = f.modulus();
    FpPolynomial d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g(x)^p over F_p
        squarefree_decompose(pth_root(f), mult * static_cast<unsigned>(p), out);
        return;
    }
    FpPolynomial c = fp_gcd(f, d);
    FpPolynomial w = fp_zero(p);
    divmod(f, c, &w);
    unsigned i = 1;
    while (!(w.deg() == 0)) {
        FpPolynomial y = fp_gcd(w, c);
        FpPolynomial z = fp_zero(p);
        divmod(w, y, &z);
        if (z.deg() > 0) out.emplace_back(z.monic(), mult * i);
        w = y;
        FpPolynomial cq = fp_zero(p);
        divmod(c, y, &cq);
        c = cq;
        ++i;
    }
    if (c.deg() > 0) squarefree_decompose(pth_root(c), mult * static_cast<unsigned>(p), out);
}

/// Distinct-degree factorization of a monic squarefree f:
/// list of (product-of-irreducibles-of-degree-d, d).
std::vector<std::pair<FpPolynomial, unsigned>> distinct_degree(FpPolynomial f) {
    const u64 p = f.modulus();
    std::vector<std::pair<FpPolynomial, unsigned>> out;
    FpPolynomial h = divmod(fp_x(p), f); // x^(p^0) stepping below
    unsigned d = 0;
    while (f.deg() >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Int(p), f); // h = x^(p^d) mod f
        FpPolynomial g = fp_gcd(h - fp_x(p), f);
        if (!(g.deg() == 0)) {
            out.emplace_back(g, d);
            FpPolynomial q = fp_zero(p);
            divmod(f, g, &q);
            f = q;
            h = divmod(h, f);
        }
    }
    if (f.deg() > 0) out.emplace_back(f, static_cast<unsigned>(f.deg()));
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map for p = 2).
void equal_degree(const FpPolynomial& f, unsigned d, std::mt19937_64& rng, std::vector<FpPolynomial>& out) {
    const u64 p = f.modulus();
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (;;) {
        std::vector<u64> rc(f.deg());
        for (auto& v : rc) v = dist(rng);
        FpPolynomial r{p, std::move(rc)};
        if (r.is_zero()) continue;
        FpPolynomial g = fp_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            FpPolynomial q = fp_zero(p);
            divmod(f, g, &q);
            equal_degree(g, d, rng, out);
            equal_degree(q, d, rng, out);
            return;
        }
        FpPolynomial t = fp_zero(p);
        if (p == 2) {
            // trace map over F_{2^d}: r + r^2 + r^4 + ... + r^(2^(d-1))
            FpPolynomial acc = divmod(r, f);
            t = acc;
            for (unsigned i = 1; i < d; ++i) {
                acc = divmod(acc * acc, f);
                t = t + acc;
            }
        } else {
            Int e = (pow_int(Int(p), d) - 1) / 2;
            t = fp_powmod(r, e, f) - fp_one(p);
        }
        g = fp_gcd(t, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            FpPolynomial q = fp_zero(p);
            divmod(f, g, &q);
            equal_degree(g, d, rng, out);
            equal_degree(q, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpFactor> fp_factor(const FpPolynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("fp_factor: zero polynomial");
    std::vector<FpFactor> out;
    if (f.deg() == 0) return out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPolynomial, unsigned>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<FpPolynomial> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& q : irr) out.push_back(FpFactor{std::move(q), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.poly != b.poly) return a.poly < b.poly;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

SymmetryClass fp_symmetry_class(const FpPolynomial& h) {
    if (h.is_zero()) throw std::domain_error("fp_symmetry_class: zero polynomial");
    if (!h.is_monic()) throw std::domain_error("fp_symmetry_class: input must be monic");
    if (h.coeff(0) == 0) return SymmetryClass::None;
    const u64 p = h.modulus();
    FpPolynomial rev = h.reciprocal();
    if (rev == h) return SymmetryClass::Plus;
    std::vector<u64> neg(h.coeffs());
    for (auto& v : neg) v = v ? p - v : 0;
    if (rev == FpPolynomial(p, std::move(neg))) return SymmetryClass::Minus;
    return SymmetryClass::None;
}

} // namespace k3cyclo
