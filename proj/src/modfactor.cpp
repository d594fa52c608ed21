#include "k3cyclo/modfactor.hpp"
#include "k3cyclo/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace k3cyclo {

namespace {

bool is_x_minus_1(const IntPolynomial& f) {
    return f.coeffs() == std::vector<Int>{-1, 1};
}
bool is_x_plus_1(const IntPolynomial& f) {
    return f.coeffs() == std::vector<Int>{1, 1};
}

std::uint64_t to_u64_prime(const Int& p) {
    if (p > Int(~0ULL))
        throw std::domain_error("prime exceeds the 2^64 modulus bound of the mod-p kernel: " + p.str());
    return static_cast<std::uint64_t>(p);
}

} // namespace

std::vector<FpFactor> factor_mod_p(const IntPolynomial& f, std::uint64_t p, std::uint64_t seed) {
    FpPolynomial r = reduce_mod_p(f, p); // validates primality of p
    if (r.is_zero()) throw std::domain_error("factor_mod_p: f vanishes mod p");
    return fp_factor(r, seed);
}

std::vector<Int> candidate_primes(const IntPolynomial& f, const IntPolynomial& g) {
    const bool f_lin = is_x_minus_1(f) || is_x_plus_1(f);
    const bool g_lin = is_x_minus_1(g) || is_x_plus_1(g);
    if (f_lin && g_lin)
        throw std::domain_error("candidate_primes: Pi is not defined for the pair (x-1, x+1)");
    Int bound;
    if (g_lin || f_lin) {
        const IntPolynomial& poly = g_lin ? f : g;
        const IntPolynomial& lin = g_lin ? g : f;
        bound = poly.eval(is_x_minus_1(lin) ? Int(1) : Int(-1));
        if (bound == 0) throw std::domain_error("candidate_primes: inputs share a root");
    } else {
        bound = resultant(f, g);
        if (bound == 0) throw std::domain_error("candidate_primes: inputs share a factor (resultant 0)");
    }
    return prime_divisors(bound);
}

bool padic_is_square(const Rat& a, const Int& p) {
    if (a == 0) throw std::domain_error("padic_is_square: zero argument");
    if (!is_prime(p)) throw std::domain_error("padic_is_square: p is not prime");
    long v = valuation(a, p);
    if (v % 2 != 0) return false;
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    while (num % p == 0) num /= p;
    while (den % p == 0) den /= p;
    if (p == 2) {
        // u = num/den with both odd; den^2 = 1 mod 8, so u = num*den mod 8.
        Int u = num * den % 8;
        if (u < 0) u += 8;
        return u == 1;
    }
    Int u = num % p * (den % p) % p; // legendre(num/den) = legendre(num*den)
    return legendre(u, p) == 1;
}

bool real_is_square(const Rat& a) {
    if (a == 0) throw std::domain_error("real_is_square: zero argument");
    return a > 0;
}

std::vector<PiCertificate> pi_set(const IntPolynomial& f, const IntPolynomial& g,
                                  const D0Context& ctx, SymmetryRequirement req,
                                  std::uint64_t seed) {
    const bool f_lin = is_x_minus_1(f) || is_x_plus_1(f);
    const bool g_lin = is_x_minus_1(g) || is_x_plus_1(g);
    if (f_lin && g_lin)
        throw std::domain_error("pi_set: Pi is not defined for the pair (x-1, x+1)");
    if (f_lin) return pi_set(g, f, ctx, req, seed);

    if (f.is_zero() || f.deg() < 2)
        throw std::domain_error("pi_set: first argument must have degree >= 2");

    std::vector<PiCertificate> certs;
    if (g_lin) {
        const bool at_plus_one = is_x_minus_1(g); // g = x-1 looks at f(1)
        for (const Int& p : candidate_primes(f, g)) {
            unsigned n_pm = at_plus_one ? ctx.n_plus : ctx.n_minus;
            std::optional<bool> d0_ok;
            std::string trace;
            if (n_pm == 2) {
                // D0 != -1 in Qp*/Qp*^2  <=>  -D0 is not a square in Qp.
                bool neg_d0_square = padic_is_square(Rat(-ctx.d0), p);
                d0_ok = !neg_d0_square;
                std::ostringstream os;
                os << "n" << (at_plus_one ? "+" : "-") << " = 2: -D0 = " << Int(-ctx.d0).str()
                   << (neg_d0_square ? " is" : " is not") << " a square in Q_" << p.str()
                   << (neg_d0_square ? "; D0 = -1 in Q_p^x/(Q_p^x)^2, p excluded"
                                     : "; D0 != -1 in Q_p^x/(Q_p^x)^2, p admitted");
                trace = os.str();
                if (neg_d0_square) continue;
            }
            // p | f(-+1) is equivalent to (x-+1) | f mod p; record the witness.
            std::uint64_t pu = to_u64_prime(p);
            FpPolynomial w(pu, {at_plus_one ? pu - 1 : 1, 1});
            PiCertificate cert{p, w, fp_symmetry_class(w), d0_ok, trace};
            certs.push_back(std::move(cert));
        }
        return certs;
    }

    if (g.is_zero() || g.deg() < 2)
        throw std::domain_error("pi_set: second argument must be x-1, x+1, or of degree >= 2");

    for (const Int& p : candidate_primes(f, g)) {
        std::uint64_t pu = to_u64_prime(p);
        FpPolynomial fr = reduce_mod_p(f, pu);
        FpPolynomial gr = reduce_mod_p(g, pu);
        if (fr.is_zero() || gr.is_zero()) continue; // monic inputs never reduce to zero
        FpPolynomial common = fp_gcd(fr, gr);
        if (common.is_zero() || common.deg() == 0) continue;
        for (const FpFactor& fac : fp_factor(common, seed)) {
            SymmetryClass s = fp_symmetry_class(fac.poly);
            bool ok = req == SymmetryRequirement::PlusOnly
                          ? s == SymmetryClass::Plus
                          : (s == SymmetryClass::Plus || s == SymmetryClass::Minus);
            if (ok) {
                certs.push_back(PiCertificate{p, fac.poly, s, std::nullopt, ""});
                break; // one witness per prime
            }
        }
    }
    return certs;
}

} // namespace k3cyclo
