#ifndef K3CYCLO_REALIZABILITY_HPP
#define K3CYCLO_REALIZABILITY_HPP

#include "k3cyclo/obstruction.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3cyclo {

/// Closed form for (Phi_m(1), Phi_m(-1)), m >= 3: power of 2 -> (2,2);
/// p^k odd p -> (p,1); 2p^k -> (1,p); else (1,1).
std::pair<Int, Int> phi_values(std::uint64_t m);

enum class Route { Kondo, AntiKondo, Prop8Complement, Prop8Salem };

std::string to_string(Route r);

struct Condition {
    std::string name;
    bool holds;
    std::string witness;
};

struct RealizabilityReport {
    std::uint64_t m = 0;
    unsigned r = 0;
    bool yes = false;
    std::optional<Route> route;
    std::vector<Condition> conditions;
    /// C' for the Prop8 routes (the Salem route stores S_2 here).
    std::optional<FactoredCharPoly> complement;
    /// G_F certificates for F = C * C'.
    std::optional<ObstructionGroup> certificates;
    std::optional<C1Report> c1;
    bool unimodular_t = false; // C(1) = 1 forces T_X unimodular
    bool unique_surface = false;
};

/// Trivial-Picard-action decision (the n_X question): YES iff C(-1) is a
/// square and (C(1) = 1 implies deg C = 4 mod 8), C = Phi_m^r.
/// Degree-bound violations (r phi(m) > 20) are errors, not NO verdicts.
RealizabilityReport prop2_trivial_picard(std::uint64_t m, unsigned r);

/// Mirrored conditions with C(1) and C(-1) exchanged.
RealizabilityReport anti_kondo(std::uint64_t m, unsigned r);

/// Complement route: requires C(1) = C(-1) (the value is then a power of 2;
/// the stated hypothesis covers 1 and 2, and the same construction is the
/// only available route for 2^r with odd r, so equal values are accepted).
/// For C = Phi_60 the Salem route F = S_2 Phi_60 is taken. Otherwise a
/// bounded deterministic search finds C' with deg(CC') = 22, condition (C 1)
/// and G_{CC'} = 0. Throws internal_error when the search exhausts (this
/// happens exactly for C = Phi_4^9 and Phi_8^5, where no product of
/// cyclotomics completes C to degree 22 under condition (C 1)).
RealizabilityReport prop8(std::uint64_t m, unsigned r, std::uint64_t seed = kDefaultSeed);

/// Routing decision procedure: first applicable of Kondo, anti-Kondo, Prop8.
RealizabilityReport prop1(std::uint64_t m, unsigned r, std::uint64_t seed = kDefaultSeed);

/// m realizable as m_X iff m = 1 or m even (phi(m) <= 20 required).
bool corollary1_mx(std::uint64_t m);

/// Three-case r-criterion; agrees with prop2_trivial_picard's verdict.
bool lemma_r_cases(std::uint64_t m, unsigned r);

struct ClassTable {
    std::vector<std::uint64_t> A, B, C;
    /// r -> admissible m for (n_X = m, rank T_X = r phi(m)), derived from
    /// the r-criterion + degree bound + the unimodular-forces-even-order
    /// exactness condition.
    std::map<unsigned, std::vector<std::uint64_t>> characterization;
    /// The classification rows as published, kept for regression comparison.
    std::map<unsigned, std::vector<std::uint64_t>> published;
    /// Row-by-row differences between characterization and published.
    std::vector<std::string> flags;
};

ClassTable tables();

struct DetConstraint {
    enum class Kind { UnimodularOnly, PPrimary, Either };
    Kind kind;
    Int p; // set for PPrimary
};

/// Phi_m(1) = 1 -> UnimodularOnly; Phi_m(1) = p -> PPrimary(p), p <= 19
/// whenever phi(m) <= 20.
DetConstraint det_constraint(std::uint64_t m);

struct PairLogic {
    std::uint64_t m;
    bool in_A; // otherwise in B
    std::uint64_t m_x; // m for A (unimodular), 2m for B
};

/// Requires m in A union B.
PairLogic pair_logic(std::uint64_t m);

/// All (m, t) with m even, m >= 4, t >= 1, t phi(m) <= 20.
std::vector<std::pair<std::uint64_t, unsigned>> mt_pairs();

/// Every m_X value cited in the finite-subgroup remark passes corollary1_mx.
bool mo_remark_check();

} // namespace k3cyclo

#endif
