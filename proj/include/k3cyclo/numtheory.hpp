#ifndef K3CYCLO_NUMTHEORY_HPP
#define K3CYCLO_NUMTHEORY_HPP

#include "k3cyclo/int_types.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace k3cyclo {

/// Deterministic Miller-Rabin (witness set proven exact below 3.3e24,
/// which covers the full uint64 range).
bool is_prime_u64(std::uint64_t n);

/// Deterministic below 3.3e24 via the same witness set; above that, 64
/// fixed pseudo-random witnesses (no composite is known to pass them).
bool is_prime(const Int& n);

/// Prime factorization, trial division then Pollard-Brent rho.
std::map<Int, unsigned> factorize(Int n);

/// Distinct prime divisors of |n|, sorted; empty for |n| <= 1.
std::vector<Int> prime_divisors(const Int& n);

/// Legendre symbol (a/p) for odd prime p; 0 when p | a.
int legendre(const Int& a, const Int& p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rat& a, const Int& p);

} // namespace k3cyclo

#endif
