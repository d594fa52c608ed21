#include "k3cyclo/localforms.hpp"
#include "k3cyclo/modfactor.hpp"
#include "k3cyclo/numtheory.hpp"
#include "k3cyclo/obstruction.hpp"

#include <algorithm>
#include <sstream>

namespace k3cyclo {

Place Place::finite(Int prime) {
    if (!is_prime(prime)) throw std::domain_error("Place: modulus is not prime");
    return Place{false, std::move(prime)};
}

std::string to_string(const Place& v) { return v.real ? "REAL" : v.p.str(); }

namespace {

/// Signed squarefree part of a nonzero rational: the canonical square-class
/// representative (a and its representative differ by a rational square).
Int squarefree_class(const Rat& a) {
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    Int n = num * den; // a ~ num*den mod squares
    Int sign = n < 0 ? -1 : 1;
    n = boost::multiprecision::abs(n);
    Int out = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) out *= p;
    return sign * out;
}

int eps4(const Int& u) { return mod2((u - 1) / 2); }                 // (u-1)/2 mod 2
int omega8(const Int& u) { return mod2((u * u - 1) / 8); }           // (u^2-1)/8 mod 2
int leg_bit(const Int& u, const Int& p) { return legendre(u, p) == 1 ? 0 : 1; }

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero argument");
    if (v.real) return (a < 0 && b < 0) ? 1 : 0;
    const Int& p = v.p;
    Int sa = squarefree_class(a), sb = squarefree_class(b);
    long alpha = 0, beta = 0;
    Int u = sa, w = sb;
    while (u % p == 0) { u /= p; ++alpha; }
    while (w % p == 0) { w /= p; ++beta; }
    if (p == 2) {
        // (a,b)_2 = (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}
        return (eps4(u) * eps4(w) + static_cast<int>(alpha % 2) * omega8(w) +
                static_cast<int>(beta % 2) * omega8(u)) % 2;
    }
    int e = static_cast<int>((alpha % 2) * (beta % 2)) * mod2((p - 1) / 2);
    e += static_cast<int>(beta % 2) * leg_bit(u, p);
    e += static_cast<int>(alpha % 2) * leg_bit(w, p);
    return e % 2;
}

int hasse_witt_diag(const std::vector<Rat>& entries, const Place& v) {
    for (const auto& e : entries)
        if (e == 0) throw std::domain_error("hasse_witt_diag: zero entry");
    int acc = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            acc ^= hilbert_symbol(entries[i], entries[j], v);
    return acc;
}

bool product_formula_check(const std::vector<LocalInvariantProfile>& profiles) {
    bool has_real = false;
    int sum = 0;
    for (const auto& pr : profiles) {
        if (pr.place.real) has_real = true;
        sum ^= pr.hasse_witt & 1;
    }
    if (!has_real) throw std::domain_error("product_formula_check: REAL profile missing");
    return sum == 0;
}

Lemma602Report lemma602_verify(std::uint64_t seed) {
    Lemma602Report rep{};
    auto fail = [](int step, const std::string& what) {
        throw internal_error("lemma602_verify: step " + std::to_string(step) + " failed: " + what);
    };

    // (1) resultant
    rep.resultant_value = resultant(cyclotomic(60), cyclotomic(12));
    bool ok1 = rep.resultant_value == 625;
    rep.steps.push_back({1, "res(Phi_60, Phi_12) = 5^4", rep.resultant_value.str(), ok1});
    if (!ok1) fail(1, rep.resultant_value.str());

    // (2) Phi_12 mod 5 = f f* with f != f*
    auto factors = factor_mod_p(cyclotomic(12), 5, seed);
    bool ok2 = factors.size() == 2 && factors[0].multiplicity == 1 && factors[1].multiplicity == 1 &&
               factors[0].poly.deg() == 2 && factors[1].poly.deg() == 2 &&
               factors[0].poly != factors[1].poly &&
               factors[0].poly.reciprocal_monic() == factors[1].poly;
    {
        std::ostringstream os;
        for (const auto& f : factors) {
            os << "{";
            for (std::size_t i = 0; i < f.poly.coeffs().size(); ++i)
                os << (i ? "," : "") << f.poly.coeffs()[i];
            os << "} ";
        }
        rep.steps.push_back({2, "Phi_12 = f f* (mod 5), f != f*", os.str(), ok2});
        for (const auto& f : factors) rep.mod5_factors.push_back(f.poly);
    }
    if (!ok2) fail(2, "unexpected factorization of Phi_12 mod 5");

    // (3) away from {2, 5} both pieces are unimodular over Z_p, so w2 = 0
    auto primes = prime_divisors(rep.resultant_value);
    bool ok3 = primes.size() == 1 && primes[0] == 5;
    rep.steps.push_back({3, "prime support of the resultant is {5}; w2(q2) = 0 at odd p != 5",
                         "{5}", ok3});
    if (!ok3) fail(3, "resultant has unexpected prime support");

    // (4) exact chain of w2(q2) values
    std::vector<Rat> u2 = {1, -1, 1, -1};          // U^2 diagonalized over Q
    std::vector<Rat> neg4 = {-1, -1, -1, -1};      // signature (0,4)
    rep.w2_q2_at_2 = hasse_witt_diag(u2, Place::finite(2));
    rep.w2_q2_at_5 = hasse_witt_diag(u2, Place::finite(5));
    rep.w2_q2_at_real = hasse_witt_diag(neg4, Place::real_place());
    bool ok4 = rep.w2_q2_at_2 == 1 && rep.w2_q2_at_5 == 0 && rep.w2_q2_at_real == 0;
    {
        std::ostringstream os;
        os << "w2(q2): at 2 = " << rep.w2_q2_at_2 << " (U^2 over Z_2), at 5 = " << rep.w2_q2_at_5
           << " (hyperbolic via f f*), at REAL = " << rep.w2_q2_at_real << " (signature (0,4))";
        rep.steps.push_back({4, "local Hasse-Witt chain", os.str(), ok4});
    }
    if (!ok4) fail(4, "local invariant chain mismatch");

    // (5) product formula violation
    std::vector<LocalInvariantProfile> profile = {
        {Place::real_place(), 4, rep.w2_q2_at_real, std::make_pair(0u, 4u), 1},
        {Place::finite(2), 4, rep.w2_q2_at_2, std::nullopt, 1},
        {Place::finite(5), 4, rep.w2_q2_at_5, std::nullopt, 1},
    };
    rep.contradiction = !product_formula_check(profile);
    rep.steps.push_back({5, "product formula fails on the q2 profile",
                         rep.contradiction ? "sum of bits = 1" : "sum of bits = 0",
                         rep.contradiction});
    if (!rep.contradiction) fail(5, "no contradiction reached");
    return rep;
}

namespace {

void degree6_multisets(std::vector<std::vector<std::uint64_t>>& out) {
    // indices with phi <= 6: 1 and 2 stand for x-1 and x+1
    const std::uint64_t pool[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < std::size(pool); ++i) {
            std::uint64_t d = euler_phi(pool[i]);
            if (d > remaining) continue;
            cur.push_back(pool[i]);
            self(self, i, remaining - d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 6);
}

IntPolynomial expand_multiset(const std::vector<std::uint64_t>& ms) {
    IntPolynomial f = IntPolynomial::constant(1);
    for (auto m : ms) f = f * cyclotomic(m);
    return f;
}

} // namespace

Prop601Report prop601_scan(std::uint64_t seed) {
    Prop601Report rep{};
    Lemma602Report lemma = lemma602_verify(seed); // the with-Phi_12 cases reduce to this
    std::vector<std::vector<std::uint64_t>> multisets;
    degree6_multisets(multisets);
    rep.total = multisets.size();
    IntPolynomial c60 = cyclotomic(60);
    for (const auto& ms : multisets) {
        bool has12 = std::find(ms.begin(), ms.end(), 12) != ms.end();
        Prop601Case cs{ms, ""};
        if (!has12) {
            Int r = resultant(c60, expand_multiset(ms));
            if (boost::multiprecision::abs(r) != 1)
                throw internal_error("prop601_scan: complement without Phi_12 is not coprime to Phi_60");
            if (check_mod8(2, 14))
                throw internal_error("prop601_scan: (2,14) unexpectedly satisfies the mod-8 constraint");
            cs.reason = "unimodular-splitting/mod-8";
            ++rep.rejected_splitting;
        } else {
            std::vector<std::uint64_t> rest;
            for (auto m : ms)
                if (m != 12) rest.push_back(m);
            bool linear_only = std::all_of(rest.begin(), rest.end(),
                                           [](std::uint64_t m) { return m <= 2; });
            if (linear_only) {
                if (!lemma.contradiction)
                    throw internal_error("prop601_scan: Lemma step did not provide the contradiction");
                cs.reason = "lemma-7.3";
                ++rep.rejected_lemma;
            } else {
                IntPolynomial f = c60 * cyclotomic(12) * expand_multiset(rest);
                if (condition_c1(f).holds)
                    throw internal_error("prop601_scan: expected a (C 1) violation");
                cs.reason = "condition (C 1)";
                ++rep.rejected_c1;
            }
        }
        rep.cases.push_back(std::move(cs));
    }
    rep.exhaustive = rep.rejected_splitting + rep.rejected_c1 + rep.rejected_lemma == rep.total;
    return rep;
}

} // namespace k3cyclo
