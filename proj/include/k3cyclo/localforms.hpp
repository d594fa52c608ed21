#ifndef K3CYCLO_LOCALFORMS_HPP
#define K3CYCLO_LOCALFORMS_HPP

#include "k3cyclo/int_types.hpp"
#include "k3cyclo/intpoly.hpp"
#include "k3cyclo/fppoly.hpp"
#include "k3cyclo/modfactor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3cyclo {

/// A place of Q: the real place or a finite prime.
struct Place {
    bool real;
    Int p; // prime when finite

    static Place real_place() { return Place{true, 0}; }
    static Place finite(Int prime);

    friend bool operator==(const Place& a, const Place& b) {
        return a.real == b.real && (a.real || a.p == b.p);
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.real != b.real) return a.real; // REAL sorts first
        return a.p < b.p;
    }
};

std::string to_string(const Place& v);

/// Local Hilbert symbol, encoded 0 (split) / 1 (nonsplit). REAL: 1 iff both
/// arguments negative; finite places by the classical valuation/residue
/// formulas on squarefree square-class representatives.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Hasse-Witt invariant of the diagonal form <a_1, ..., a_k> at v: the sum
/// of the pairwise Hilbert symbols mod 2. Empty and singleton forms give 0.
int hasse_witt_diag(const std::vector<Rat>& entries, const Place& v);

struct LocalInvariantProfile {
    Place place;
    unsigned dim = 0;
    int hasse_witt = 0;
    std::optional<std::pair<unsigned, unsigned>> signature; // REAL only
    Rat det_class = 1;
};

/// Necessary global condition: the Hasse-Witt bits listed (all other finite
/// places implicitly 0) must sum to 0. Requires a REAL profile.
bool product_formula_check(const std::vector<LocalInvariantProfile>& profiles);

struct Lemma602Step {
    int index;
    std::string name;
    std::string value;
    bool pass;
};

struct Lemma602Report {
    std::vector<Lemma602Step> steps;
    Int resultant_value;
    std::vector<FpPolynomial> mod5_factors;
    int w2_q2_at_2, w2_q2_at_5, w2_q2_at_real;
    bool contradiction; // product formula violated, as required
};

/// Mechanical verification of the Phi_60 Phi_12 impossibility on the
/// signature-(2,18) lattice: resultant 5^4; the two quadratic factors of
/// Phi_12 mod 5 are mutually reciprocal and distinct; odd places away from 5
/// are unimodular hence Hasse-Witt 0; the exact chain w2(q2) = 1 at 2
/// (U^2 over Z_2), 0 at 5 (hyperbolic split via f f*), 0 at REAL
/// (signature (0,4)); the product formula then fails. Throws internal_error
/// naming the first failing step (none fails).
Lemma602Report lemma602_verify(std::uint64_t seed = kDefaultSeed);

struct Prop601Case {
    std::vector<std::uint64_t> complement; // cyclotomic index multiset (1 = x-1, 2 = x+1)
    std::string reason; // "unimodular-splitting/mod-8" | "condition (C 1)" | "lemma-7.3"
};

struct Prop601Report {
    std::size_t total;
    std::size_t rejected_splitting;
    std::size_t rejected_c1;
    std::size_t rejected_lemma;
    std::vector<Prop601Case> cases;
    bool exhaustive; // every candidate rejected
};

/// Exhaustive scan over the degree-6 products of cyclotomic polynomials C'
/// for an isometry of the (3,19) lattice with characteristic polynomial
/// Phi_60 C' and tau(Phi_60) = (2,14). Without Phi_12 the resultant with
/// Phi_60 is a unit and the unimodular orthogonal splitting contradicts the
/// mod-8 signature constraint; with Phi_12 the residual degree-2 part either
/// violates condition (C 1) or runs into the Lemma602 contradiction.
Prop601Report prop601_scan(std::uint64_t seed = kDefaultSeed);

} // namespace k3cyclo

#endif
