#ifndef K3CYCLO_FPPOLY_HPP
#define K3CYCLO_FPPOLY_HPP

#include "k3cyclo/int_types.hpp"
#include "k3cyclo/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace k3cyclo {

/// Dense polynomial over F_p, p a prime below 2^64 (validated by a
/// deterministic Miller-Rabin test). Residues live in [0, p).
class FpPolynomial {
public:
    FpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t deg() const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t eval(std::uint64_t x) const;

    FpPolynomial monic() const;
    FpPolynomial derivative() const;
    /// x^deg * h(1/x), coefficient reversal (no normalization).
    FpPolynomial reciprocal() const;
    /// Monic normalization of the reciprocal; requires h(0) != 0.
    FpPolynomial reciprocal_monic() const;

    friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
    friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FpPolynomial& a, const FpPolynomial& b) { return !(a == b); }
    /// Canonical order: degree, then coefficient sequence.
    friend bool operator<(const FpPolynomial& a, const FpPolynomial& b);

private:
    friend FpPolynomial divmod(const FpPolynomial& a, const FpPolynomial& b, FpPolynomial* quot);
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

FpPolynomial fp_zero(std::uint64_t p);
FpPolynomial fp_one(std::uint64_t p);
FpPolynomial fp_x(std::uint64_t p);

/// Remainder of a by b; quotient optionally returned through quot.
FpPolynomial divmod(const FpPolynomial& a, const FpPolynomial& b, FpPolynomial* quot = nullptr);
FpPolynomial fp_gcd(FpPolynomial a, FpPolynomial b); // monic
FpPolynomial fp_powmod(const FpPolynomial& base, const Int& e, const FpPolynomial& mod);

/// Reduce an integer polynomial mod p (may be zero).
FpPolynomial reduce_mod_p(const IntPolynomial& f, std::uint64_t p);

struct FpFactor {
    FpPolynomial poly;
    unsigned multiplicity;
};

/// Complete factorization of a nonzero f into monic irreducibles with
/// multiplicities: squarefree decomposition, then distinct-degree, then
/// Cantor-Zassenhaus equal-degree splitting (trace map for p = 2). The
/// splitting is randomized from `seed`; the output is canonically sorted,
/// so it does not depend on the seed.
std::vector<FpFactor> fp_factor(const FpPolynomial& f, std::uint64_t seed);

/// PLUS iff x^deg h(1/x) == h, MINUS iff == -h, else NONE. Requires h monic;
/// h(0) == 0 yields NONE. Over F_2 the two signs coincide and PLUS is
/// reported.
SymmetryClass fp_symmetry_class(const FpPolynomial& h);

} // namespace k3cyclo

#endif
