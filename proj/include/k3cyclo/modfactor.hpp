#ifndef K3CYCLO_MODFACTOR_HPP
#define K3CYCLO_MODFACTOR_HPP

#include "k3cyclo/fppoly.hpp"
#include "k3cyclo/int_types.hpp"
#include "k3cyclo/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3cyclo {

/// Default seed for the equal-degree splitting RNG; CLI --seed and the
/// K3CYCLO_SEED environment variable override it.
inline constexpr std::uint64_t kDefaultSeed = 0x6b336379636c6f31ULL;

/// Factor f mod p into monic irreducibles with multiplicities, canonically
/// sorted. Rejects composite p and zero reduction.
std::vector<FpFactor> factor_mod_p(const IntPolynomial& f, std::uint64_t p,
                                   std::uint64_t seed = kDefaultSeed);

/// Primes p that can possibly carry a common factor of f and g mod p: the
/// prime divisors of |res(f, g)| (a common factor mod p forces p | res), or
/// of |f(1)| / |f(-1)| when the other argument is x-1 / x+1. Rejects pairs
/// sharing a factor (resultant 0) and the linear-linear pair.
std::vector<Int> candidate_primes(const IntPolynomial& f, const IntPolynomial& g);

/// Exponents of (x-1), (x+1) in the ambient F together with
/// D_0 = (-1)^n F_1(1) F_1(-1); the linear cases of the Pi rule read these.
struct D0Context {
    unsigned n_plus = 0;
    unsigned n_minus = 0;
    Int d0 = 1;
};

enum class SymmetryRequirement {
    PlusOrMinus, // pairs of factors of degree >= 2
    PlusOnly     // Salem x cyclotomic rule
};

struct PiCertificate {
    Int p;
    /// Shared irreducible factor mod p (the linear cases store x-+1 here).
    FpPolynomial witness;
    SymmetryClass witness_symmetry;
    /// Present only when the n+- = 2 square-class condition was evaluated.
    std::optional<bool> d0_check;
    std::string d0_trace;
};

/// The set Pi_{f,g}. Both degrees >= 2: primes with a common irreducible
/// (+-)-symmetric factor mod p. g = x-+1: primes p | f(-+1), filtered by
/// "D_0 != -1 in Q_p^x / (Q_p^x)^2" exactly when the matching exponent in
/// ctx equals 2. The pair (x-1, x+1) is rejected (never defined).
std::vector<PiCertificate> pi_set(const IntPolynomial& f, const IntPolynomial& g,
                                  const D0Context& ctx,
                                  SymmetryRequirement req = SymmetryRequirement::PlusOrMinus,
                                  std::uint64_t seed = kDefaultSeed);

/// Square test in Q_p: for odd p, even valuation and a residue unit part;
/// for p = 2, even valuation and unit part = 1 mod 8.
bool padic_is_square(const Rat& a, const Int& p);
/// Square test in R.
bool real_is_square(const Rat& a);

} // namespace k3cyclo

#endif
