#ifndef K3CYCLO_OBSTRUCTION_HPP
#define K3CYCLO_OBSTRUCTION_HPP

#include "k3cyclo/int_types.hpp"
#include "k3cyclo/intpoly.hpp"
#include "k3cyclo/modfactor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3cyclo {

/// F = prod Phi_m^mult * S * (x-1)^n_plus * (x+1)^n_minus, kept factored.
/// Linear factors are carried by the exponents, so cyclotomic indices are
/// always >= 3. A Salem factor appears at most once.
struct FactoredCharPoly {
    std::map<std::uint64_t, unsigned> cyclotomic_factors; // m -> multiplicity
    std::optional<IntPolynomial> salem_factor;
    std::optional<std::uint64_t> salem_index; // set when the factor is salem(n)
    unsigned n_plus = 0;
    unsigned n_minus = 0;

    /// Degree-even and index bounds; throws on violation.
    void validate() const;
    std::size_t degree() const;
    std::size_t half_degree() const; // n, degree must be even
    IntPolynomial expand() const;
    /// The part without the roots +-1 (cyclotomic m >= 3 and Salem factors).
    IntPolynomial f1() const;
    /// Factorwise exact evaluation of the full F.
    Int eval(int x) const;
    /// F_1(+-1), never zero.
    Int f1_eval(int x) const;
    /// D_0 = (-1)^n F_1(1) F_1(-1).
    Int d0() const;

    friend bool operator==(const FactoredCharPoly& a, const FactoredCharPoly& b) {
        return a.cyclotomic_factors == b.cyclotomic_factors && a.salem_factor == b.salem_factor &&
               a.n_plus == b.n_plus && a.n_minus == b.n_minus;
    }
};

/// One element of the factor set I.
struct Factor {
    enum class Kind { Cyclotomic, Salem, XMinus1, XPlus1 };
    Kind kind;
    std::uint64_t m = 0; // cyclotomic index or salem family index (when known)
    IntPolynomial poly;
    std::string name; // "cyc60", "salem2", "x-1", "x+1"
    std::size_t degree;
};

/// The set I of distinct irreducible factors (multiplicities dropped),
/// canonical order: degree descending, then name.
std::vector<Factor> factor_set(const FactoredCharPoly& f);

struct DecomposeResult {
    IntPolynomial f1;
    unsigned n_plus;
    unsigned n_minus;
    Int d0;
    std::vector<Factor> factors; // I
};

DecomposeResult decompose(const FactoredCharPoly& f);

struct C1Report {
    bool holds;
    Int at_1;
    Int at_minus1;
    Int signed_product; // (-1)^n F(1) F(-1)
};

/// Condition (C 1): |F(1)|, |F(-1)| and (-1)^n F(1) F(-1) all squares.
C1Report condition_c1(const FactoredCharPoly& f);
/// Same test on an expanded polynomial (degree must be even).
C1Report condition_c1(const IntPolynomial& f);

struct GfEdge {
    std::size_t a, b; // indices into factors
    PiCertificate certificate;
};

/// G_F reported as the partition of I into Pi-connected components plus the
/// F_2-rank (#components - 1); G_F = (Z/2)^rank.
struct ObstructionGroup {
    std::vector<Factor> factors;
    std::vector<std::vector<std::size_t>> components;
    std::size_t rank;
    std::vector<GfEdge> edges;
    /// Pairs with no Pi rule (linear-linear, Salem-linear).
    std::vector<std::pair<std::size_t, std::size_t>> skipped_pairs;
};

ObstructionGroup g_f(const FactoredCharPoly& f, std::uint64_t seed = kDefaultSeed);

/// Signature constraint of even unimodular lattices.
bool check_mod8(unsigned r, unsigned s);

struct SignatureTable {
    std::pair<unsigned, unsigned> tau_linear;
    bool linear_is_x_plus_1;
    std::pair<unsigned, unsigned> tau_c;
    std::pair<unsigned, unsigned> maximum; // always (3,19)
};

/// tau(x-+1) = (1, rho-1), tau(C) = (2, deg C - 2) with deg C + rho = 22.
SignatureTable signature_book_keeping(std::size_t deg_c, unsigned rho, bool minus_part = false);
SignatureTable signature_book_keeping(const FactoredCharPoly& c, unsigned rho, bool minus_part = false);

} // namespace k3cyclo

#endif
