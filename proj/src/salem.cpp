#include "k3cyclo/salem.hpp"
#include "k3cyclo/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace k3cyclo {

std::string to_string(SalemVerdict v) {
    switch (v) {
        case SalemVerdict::Salem: return "SALEM";
        case SalemVerdict::NotSalem: return "NOT_SALEM";
        case SalemVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p) {
    using C = std::complex<double>;
    if (p.is_zero() || p.deg() == 0) return {};
    std::size_t n = p.deg();
    std::vector<C> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double v = p.coeff(i).convert_to<double>();
        if (!std::isfinite(v)) throw std::domain_error("polynomial_roots: coefficient exceeds binary64 range");
        a[i] = C(v, 0);
    }
    for (auto& c : a) c /= a[n];

    auto eval = [&](C z, C& deriv) {
        C f = a[n], d = 0;
        for (std::size_t i = n; i-- > 0;) {
            d = d * z + f;
            f = f * z + a[i];
        }
        deriv = d;
        return f;
    };

    double radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;

    std::vector<C> z(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t k = 0; k < n; ++k) {
        double th = 2 * pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.45;
        z[k] = radius * C(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C d;
            C f = eval(z[k], d);
            if (std::abs(f) == 0) continue;
            C w = d == C(0) ? C(0) : f / d;
            C sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += C(1) / (z[k] - z[j]);
            C denom = C(1) - w * sum;
            C corr = denom == C(0) ? w : w / denom;
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[k])));
        }
        if (worst < 1e-14) break;
    }
    // Newton polish
    for (std::size_t k = 0; k < n; ++k) {
        for (int it = 0; it < 3; ++it) {
            C d;
            C f = eval(z[k], d);
            if (std::abs(d) == 0) break;
            z[k] -= f / d;
        }
    }
    return z;
}

namespace {

RootProfile profile_roots(const std::vector<std::complex<double>>& roots, double eps) {
    RootProfile pr;
    pr.epsilon = eps;
    pr.roots = roots;
    for (const auto& z : roots) {
        double r = std::abs(z);
        pr.lambda = std::max(pr.lambda, r);
        if (r > 1 + eps)
            ++pr.outside;
        else if (r < 1 - eps)
            ++pr.inside;
        else
            ++pr.on_circle;
    }
    return pr;
}

/// Irreducibility certificate from mod-p factor degree patterns: any monic
/// divisor over Z reduces to a subset of the irreducible factors mod a prime
/// of squarefree reduction, so its degree is a subset sum of the pattern.
/// Rational-root pruning (a monic linear factor must be x -+ 1) seeds the
/// candidate set for self-reciprocal inputs.
IrreducibilityCertificate certify_irreducible(const IntPolynomial& p, std::uint64_t seed) {
    IrreducibilityCertificate cert;
    std::size_t n = p.deg();
    std::set<std::size_t> candidates;
    for (std::size_t d = 1; d < n; ++d) candidates.insert(d);
    if (p.eval(1) != 0 && p.eval(-1) != 0 && boost::multiprecision::abs(p.coeff(0)) == 1) {
        candidates.erase(1);
        candidates.erase(n - 1);
    }
    for (std::uint64_t q = 2; q < 200 && !candidates.empty(); ++q) {
        if (!is_prime_u64(q)) continue;
        FpPolynomial r = reduce_mod_p(p, q);
        if (r.is_zero() || r.deg() != n) continue;
        if (fp_gcd(r, r.derivative()).deg() != 0) continue; // need squarefree reduction
        std::vector<unsigned> degs;
        for (const auto& f : fp_factor(r, seed)) degs.push_back(static_cast<unsigned>(f.poly.deg()));
        std::set<std::size_t> sums{0};
        for (unsigned d : degs) {
            std::set<std::size_t> next = sums;
            for (std::size_t s : sums) next.insert(s + d);
            sums = std::move(next);
        }
        std::set<std::size_t> achievable;
        for (std::size_t c : candidates)
            if (sums.count(c)) achievable.insert(c);
        if (achievable.size() < candidates.size()) {
            candidates = std::move(achievable);
            cert.primes.emplace_back(q, degs);
        }
    }
    cert.certified = candidates.empty();
    if (!cert.certified) cert.primes.clear();
    return cert;
}

} // namespace

SalemReport verify_salem(const IntPolynomial& p, double epsilon) {
    if (p.is_zero() || !p.is_monic()) throw std::domain_error("verify_salem: monic input required");
    if (p.deg() < 4) throw std::domain_error("verify_salem: degree >= 4 required");
    if (epsilon <= 0) throw std::domain_error("verify_salem: epsilon must be positive");

    SalemReport rep;
    rep.symmetry = symmetry_class(p);
    rep.profile = profile_roots(polynomial_roots(p), epsilon);
    if (rep.symmetry != SymmetryClass::Plus) {
        rep.verdict = SalemVerdict::NotSalem;
        rep.reason = "not (+)-symmetric";
        return rep;
    }

    const auto& roots = rep.profile.roots;
    std::vector<std::complex<double>> off;
    for (const auto& z : roots)
        if (std::abs(std::abs(z) - 1.0) > epsilon) off.push_back(z);
    if (off.size() != 2 || rep.profile.outside != 1 || rep.profile.inside != 1) {
        rep.verdict = SalemVerdict::NotSalem;
        rep.reason = "root profile: expected exactly one reciprocal pair off the unit circle";
        return rep;
    }
    bool real_pos = true;
    for (const auto& z : off)
        if (std::abs(z.imag()) > epsilon || z.real() <= 0) real_pos = false;
    rep.profile.real_outside_positive = real_pos;
    if (!real_pos) {
        rep.verdict = SalemVerdict::NotSalem;
        rep.reason = "off-circle roots are not positive reals";
        return rep;
    }
    double prod = std::abs(off[0] * off[1]);
    if (std::abs(prod - 1.0) > 10 * epsilon) {
        rep.verdict = SalemVerdict::NotSalem;
        rep.reason = "off-circle roots are not mutually reciprocal";
        return rep;
    }

    rep.irreducibility = certify_irreducible(p, kDefaultSeed);
    if (!rep.irreducibility.certified) {
        rep.verdict = SalemVerdict::Inconclusive;
        rep.reason = "no irreducibility certificate from primes below 200";
        return rep;
    }
    rep.verdict = SalemVerdict::Salem;
    return rep;
}

SalemCycloGf salem_cyclo_gf(const IntPolynomial& s, std::uint64_t m, std::uint64_t seed) {
    SalemReport sr = verify_salem(s);
    if (sr.verdict != SalemVerdict::Salem)
        throw std::domain_error("salem_cyclo_gf: input is not a certified Salem polynomial (" +
                                to_string(sr.verdict) + ")");
    if (s.eval(1) != -1 || s.eval(-1) != 1)
        throw std::domain_error("salem_cyclo_gf: S(1) = -1 and S(-1) = 1 required");
    if (m < 3) throw std::domain_error("salem_cyclo_gf: m >= 3 required");
    IntPolynomial c = cyclotomic(m);
    SalemCycloGf out;
    out.resultant_value = resultant(s, c);
    if (out.resultant_value == 0)
        throw std::domain_error("salem_cyclo_gf: S shares a root with Phi_m");
    D0Context ctx; // unused by the degree >= 2 rule
    out.certificates = pi_set(s, c, ctx, SymmetryRequirement::PlusOnly, seed);
    out.rank = out.certificates.empty() ? 1 : 0;
    return out;
}

Example56Report example56_check(std::uint64_t seed) {
    FactoredCharPoly f;
    f.cyclotomic_factors[60] = 1;
    f.salem_factor = salem_family(2);
    f.salem_index = 2;
    Example56Report rep{};
    rep.degree = f.degree();
    rep.c1 = condition_c1(f);
    rep.holds_c1 = rep.c1.holds;
    rep.gf = salem_cyclo_gf(salem_family(2), 60, seed);
    rep.gf_rank = rep.gf.rank;
    if (rep.degree != 22 || !rep.holds_c1 || rep.gf_rank != 0)
        throw internal_error("example56_check: a verified gate failed");
    return rep;
}

} // namespace k3cyclo
