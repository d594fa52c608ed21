#ifndef K3CYCLO_INTPOLY_HPP
#define K3CYCLO_INTPOLY_HPP

#include "k3cyclo/int_types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3cyclo {

/// h(x) = +x^deg h(1/x), h(x) = -x^deg h(1/x), or neither.
enum class SymmetryClass { Plus, Minus, None };

/// Dense univariate polynomial over Z. coeff(i) is the coefficient of x^i;
/// the zero polynomial has an empty coefficient vector and degree() == nullopt
/// (degree -infinity; it is never reported as -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial constant(Int a) { return IntPolynomial{{std::move(a)}}; }
    /// a * x^k
    static IntPolynomial monomial(Int a, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const;

    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of x^i (0 beyond the degree).
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int eval(const Int& x) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    IntPolynomial pow(unsigned long k) const;

    /// x^deg * p(1/x): coefficient reversal.
    IntPolynomial reciprocal() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// Number of 1 <= k <= m coprime to m. Rejects m = 0.
std::uint64_t euler_phi(std::uint64_t m);

/// m-th cyclotomic polynomial, by exact division of x^m - 1 by the Phi_d for
/// proper divisors d of m. Monic, degree phi(m). m >= 1.
IntPolynomial cyclotomic(std::uint64_t m);

/// S_n(x) = x^6 - n x^5 - x^4 + (2n-1) x^3 - x^2 - n x + 1.
IntPolynomial salem_family(std::uint64_t n);

/// Exact Horner evaluation.
Int eval_int(const IntPolynomial& p, const Int& x);

/// Rejects the zero polynomial.
SymmetryClass symmetry_class(const IntPolynomial& p);

/// Exact resultant via the subresultant polynomial remainder sequence,
/// sign included. Rejects zero inputs. res(f, f) = 0 for nonconstant f.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Exact quotient; throws std::domain_error when b does not divide a over Z.
IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

/// "x^6 - 2x^5 - x^4 + 3x^3 - x^2 - 2x + 1" style rendering.
std::string to_string(const IntPolynomial& p);

} // namespace k3cyclo

#endif
