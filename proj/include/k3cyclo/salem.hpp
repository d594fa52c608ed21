#ifndef K3CYCLO_SALEM_HPP
#define K3CYCLO_SALEM_HPP

#include "k3cyclo/modfactor.hpp"
#include "k3cyclo/obstruction.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace k3cyclo {

struct RootProfile {
    std::size_t outside = 0;   // |z| > 1 + eps
    std::size_t inside = 0;    // |z| < 1 - eps
    std::size_t on_circle = 0; // within eps of |z| = 1
    bool real_outside_positive = false;
    double epsilon = 0;
    double lambda = 0; // largest |root|
    std::vector<std::complex<double>> roots;
};

enum class SalemVerdict { Salem, NotSalem, Inconclusive };

std::string to_string(SalemVerdict v);

struct IrreducibilityCertificate {
    bool certified = false;
    /// Primes used with their mod-p irreducible-factor degree patterns; the
    /// intersection of the achievable proper-divisor degrees is empty.
    std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primes;
};

struct SalemReport {
    SalemVerdict verdict;
    SymmetryClass symmetry;
    RootProfile profile;
    IrreducibilityCertificate irreducibility;
    std::string reason;
};

/// SALEM iff p is (+)-symmetric, has exactly one root outside and one inside
/// the unit circle (a reciprocal pair of positive reals) with everything
/// else on the circle, and irreducibility is certified from mod-p factor
/// degree patterns (primes below 200). Without a certificate the verdict is
/// INCONCLUSIVE, never a guess. Requires monic input of degree >= 4.
SalemReport verify_salem(const IntPolynomial& p, double epsilon = 1e-8);

/// Roots at binary64 via Aberth-Ehrlich iteration.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

struct SalemCycloGf {
    std::size_t rank; // 0 iff Pi_{S,C} is nonempty
    std::vector<PiCertificate> certificates;
    Int resultant_value;
};

/// Pi_{S, Phi_m} over the primes dividing res(S, Phi_m), demanding a common
/// irreducible PLUS-symmetric factor. Requires S with verdict SALEM and
/// S(1) = -1, S(-1) = 1.
SalemCycloGf salem_cyclo_gf(const IntPolynomial& s, std::uint64_t m,
                            std::uint64_t seed = kDefaultSeed);

struct Example56Report {
    bool holds_c1;
    std::size_t gf_rank;
    std::size_t degree;
    C1Report c1;
    SalemCycloGf gf;
};

/// F = S_2 Phi_60: degree 22, condition (C 1), and G_F = 0 via p = 359.
Example56Report example56_check(std::uint64_t seed = kDefaultSeed);

} // namespace k3cyclo

#endif
