#include "k3cyclo/realizability.hpp"
#include "k3cyclo/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace k3cyclo {

namespace {

constexpr unsigned kRankBound = 20;
constexpr std::uint64_t kMaxIndex = 66; // largest m with phi(m) <= 20

bool is_power_of_two(std::uint64_t m) { return m && (m & (m - 1)) == 0; }

/// m = p^k for odd p -> p, else 0.
std::uint64_t odd_prime_power_base(std::uint64_t m) {
    if (m % 2 == 0 || m < 3) return 0;
    std::uint64_t p = 0, n = m;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) { p = q; break; }
    if (p == 0) p = n;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

void require_bound(std::uint64_t m, unsigned r) {
    if (m < 3) throw std::domain_error("m must be >= 3");
    if (r < 1) throw std::domain_error("r must be >= 1");
    if (r * euler_phi(m) > kRankBound)
        throw std::domain_error("degree bound violated: r*phi(m) > 20 (the statements are silent beyond it)");
}

std::string sq_witness(const char* what, const Int& v, bool holds) {
    std::ostringstream os;
    os << what << " = " << v.str() << (holds ? " is a square" : " is not a square");
    return os.str();
}

} // namespace

std::pair<Int, Int> phi_values(std::uint64_t m) {
    if (m < 3) throw std::domain_error("phi_values: m must be >= 3");
    if (is_power_of_two(m)) return {2, 2};
    if (std::uint64_t p = odd_prime_power_base(m)) return {Int(p), 1};
    if (m % 2 == 0) {
        if (std::uint64_t p = odd_prime_power_base(m / 2)) return {1, Int(p)};
    }
    return {1, 1};
}

std::string to_string(Route r) {
    switch (r) {
        case Route::Kondo: return "KONDO";
        case Route::AntiKondo: return "ANTI_KONDO";
        case Route::Prop8Complement: return "PROP8_COMPLEMENT";
        case Route::Prop8Salem: return "PROP8_SALEM";
    }
    return "?";
}

RealizabilityReport prop2_trivial_picard(std::uint64_t m, unsigned r) {
    require_bound(m, r);
    auto [v1, vm1] = phi_values(m);
    Int c1 = pow_int(v1, r), cm1 = pow_int(vm1, r);
    std::size_t deg = r * euler_phi(m);

    RealizabilityReport rep;
    rep.m = m;
    rep.r = r;
    bool cond_i = is_square_int(cm1);
    rep.conditions.push_back({"C(-1) is a square", cond_i, sq_witness("C(-1)", cm1, cond_i)});
    bool cond_ii = c1 != 1 || deg % 8 == 4;
    std::ostringstream w2;
    if (c1 != 1)
        w2 << "C(1) = " << c1.str() << " != 1, condition vacuous";
    else
        w2 << "C(1) = 1 and deg(C) = " << deg << (deg % 8 == 4 ? " = 4 (mod 8)" : " != 4 (mod 8)");
    rep.conditions.push_back({"if C(1) = 1 then deg(C) = 4 (mod 8)", cond_ii, w2.str()});
    rep.yes = cond_i && cond_ii;
    if (rep.yes) rep.route = Route::Kondo;
    rep.unimodular_t = rep.yes && c1 == 1;
    rep.unique_surface = rep.yes && r == 1;
    return rep;
}

RealizabilityReport anti_kondo(std::uint64_t m, unsigned r) {
    require_bound(m, r);
    auto [v1, vm1] = phi_values(m);
    Int c1 = pow_int(v1, r), cm1 = pow_int(vm1, r);
    std::size_t deg = r * euler_phi(m);

    RealizabilityReport rep;
    rep.m = m;
    rep.r = r;
    bool cond_i = is_square_int(c1);
    rep.conditions.push_back({"C(1) is a square", cond_i, sq_witness("C(1)", c1, cond_i)});
    bool cond_ii = cm1 != 1 || deg % 8 == 4;
    std::ostringstream w2;
    if (cm1 != 1)
        w2 << "C(-1) = " << cm1.str() << " != 1, condition vacuous";
    else
        w2 << "C(-1) = 1 and deg(C) = " << deg << (deg % 8 == 4 ? " = 4 (mod 8)" : " != 4 (mod 8)");
    rep.conditions.push_back({"if C(-1) = 1 then deg(C) = 4 (mod 8)", cond_ii, w2.str()});
    rep.yes = cond_i && cond_ii;
    if (rep.yes) rep.route = Route::AntiKondo;
    rep.unique_surface = false;
    return rep;
}

namespace {

/// Multisets of cyclotomic indices (3 <= m' <= 66, m' != exclude) with total
/// phi-degree <= target, in the fixed candidate order.
void collect_multisets(std::size_t target, std::uint64_t exclude,
                       std::vector<std::vector<std::uint64_t>>& out) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t mm = 3; mm <= kMaxIndex; ++mm)
        if (mm != exclude && euler_phi(mm) <= target) pool.push_back(mm);
    out.push_back({});
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            std::uint64_t mm = pool[i];
            std::uint64_t d = euler_phi(mm);
            if (d > remaining) continue;
            cur.push_back(mm);
            out.push_back(cur);
            self(self, i, remaining - d);
            cur.pop_back();
        }
    };
    rec(rec, 0, target);
}

struct Candidate {
    unsigned b;
    std::vector<std::uint64_t> cyclo;
    unsigned a;
};

/// Deterministic complement candidate order: number of (x+1) factors
/// ascending, then number of cyclotomic factors ascending, then the index
/// multiset lexicographically. This reproduces the three worked complements
/// Phi_3 (x-1)^12, Phi_4 (x-1)^4 and Phi_5 (x-1)^2.
std::vector<Candidate> complement_candidates(std::size_t target, std::uint64_t exclude) {
    std::vector<std::vector<std::uint64_t>> multisets;
    collect_multisets(target, exclude, multisets);
    std::vector<Candidate> cands;
    for (const auto& ms : multisets) {
        std::size_t used = 0;
        for (auto mm : ms) used += euler_phi(mm);
        std::size_t dlin = target - used;
        // (x-1)^a keeps F (+)-symmetric only for even a; parity makes b even too.
        for (unsigned b = 0; b <= dlin; b += 2)
            cands.push_back(Candidate{b, ms, static_cast<unsigned>(dlin - b)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.b != y.b) return x.b < y.b;
        if (x.cyclo.size() != y.cyclo.size()) return x.cyclo.size() < y.cyclo.size();
        return x.cyclo < y.cyclo;
    });
    return cands;
}

FactoredCharPoly merge_complement(std::uint64_t m, unsigned r, const Candidate& c) {
    FactoredCharPoly f;
    f.cyclotomic_factors[m] = r;
    for (auto mm : c.cyclo) ++f.cyclotomic_factors[mm];
    f.n_plus = c.a;
    f.n_minus = c.b;
    return f;
}

RealizabilityReport prop8_salem_route(std::uint64_t m, unsigned r, std::uint64_t seed) {
    RealizabilityReport rep;
    rep.m = m;
    rep.r = r;
    FactoredCharPoly full;
    full.cyclotomic_factors[60] = 1;
    full.salem_factor = salem_family(2);
    full.salem_index = 2;
    C1Report c1 = condition_c1(full);
    ObstructionGroup gf = g_f(full, seed);
    if (!c1.holds || gf.rank != 0)
        throw internal_error("prop8: the Salem completion of Phi_60 failed verification");
    rep.yes = true;
    rep.route = Route::Prop8Salem;
    rep.conditions.push_back({"deg(S_2 Phi_60) = 22", full.degree() == 22, "degree 22"});
    rep.conditions.push_back({"condition (C 1) for S_2 Phi_60", c1.holds, "holds"});
    rep.conditions.push_back({"G_F = 0 for S_2 Phi_60", gf.rank == 0, "rank 0"});
    FactoredCharPoly comp;
    comp.salem_factor = salem_family(2);
    comp.salem_index = 2;
    rep.complement = comp;
    rep.certificates = gf;
    rep.c1 = c1;
    return rep;
}

} // namespace

RealizabilityReport prop8(std::uint64_t m, unsigned r, std::uint64_t seed) {
    require_bound(m, r);
    auto [v1, vm1] = phi_values(m);
    Int c1v = pow_int(v1, r), cm1v = pow_int(vm1, r);
    if (c1v != cm1v)
        throw std::domain_error("prop8: value condition unmet (C(1) != C(-1))");

    if (m == 60 && r == 1) return prop8_salem_route(m, r, seed);

    std::size_t degc = r * euler_phi(m);
    std::size_t target = 22 - degc;
    for (const Candidate& cand : complement_candidates(target, m)) {
        FactoredCharPoly full = merge_complement(m, r, cand);
        C1Report c1 = condition_c1(full);
        if (!c1.holds) continue;
        ObstructionGroup gf = g_f(full, seed);
        if (gf.rank != 0) continue;
        RealizabilityReport rep;
        rep.m = m;
        rep.r = r;
        rep.yes = true;
        rep.route = Route::Prop8Complement;
        FactoredCharPoly comp;
        for (auto mm : cand.cyclo) ++comp.cyclotomic_factors[mm];
        comp.n_plus = cand.a;
        comp.n_minus = cand.b;
        rep.complement = comp;
        rep.certificates = gf;
        rep.c1 = c1;
        rep.conditions.push_back({"C(1) = C(-1)", true, "value " + c1v.str()});
        rep.conditions.push_back({"deg(C C') = 22", full.degree() == 22, "degree 22"});
        rep.conditions.push_back({"condition (C 1) for C C'", true, "holds"});
        rep.conditions.push_back({"G_{CC'} = 0", true, "rank 0"});
        return rep;
    }
    std::ostringstream os;
    os << "prop8: complement search exhausted for (m, r) = (" << m << ", " << r
       << "): no product of cyclotomic polynomials of degree " << target
       << " completes C to a degree-22 polynomial satisfying condition (C 1) with G_F = 0";
    throw internal_error(os.str());
}

RealizabilityReport prop1(std::uint64_t m, unsigned r, std::uint64_t seed) {
    require_bound(m, r);
    RealizabilityReport rep = prop2_trivial_picard(m, r);
    if (rep.yes) return rep;
    rep = anti_kondo(m, r);
    if (rep.yes) return rep;
    auto [v1, vm1] = phi_values(m);
    if (pow_int(v1, r) == pow_int(vm1, r)) return prop8(m, r, seed); // may throw internal_error
    throw internal_error("prop1: no route applies (contradicts the realizability statement)");
}

bool corollary1_mx(std::uint64_t m) {
    if (m < 1) throw std::domain_error("corollary1_mx: m must be >= 1");
    if (euler_phi(m) > kRankBound) throw std::domain_error("corollary1_mx: phi(m) > 20");
    return m == 1 || m % 2 == 0;
}

bool lemma_r_cases(std::uint64_t m, unsigned r) {
    if (m < 3 || r < 1) throw std::domain_error("lemma_r_cases: m >= 3 and r >= 1 required");
    auto [v1, vm1] = phi_values(m);
    std::uint64_t phi = euler_phi(m);
    if (r % 2 == 1) // case (i)
        return vm1 == 1 && (v1 != 1 || phi % 8 == 4);
    if (r % 4 == 2) // case (ii)
        return v1 != 1 || phi % 4 == 2;
    return v1 > 1; // case (iii), r = 0 (mod 4)
}

ClassTable tables() {
    ClassTable t;
    for (std::uint64_t m = 3; m <= kMaxIndex; ++m) {
        std::uint64_t phi = euler_phi(m);
        auto [v1, vm1] = phi_values(m);
        if (phi <= 20 && v1 == 1 && vm1 == 1 && m % 2 == 0 && phi % 8 == 4) t.A.push_back(m);
        if (phi <= 20 && vm1 == 1 && v1 > 1) t.B.push_back(m);
        if (phi <= 10 && m % 2 == 0 && (v1 != 1 || phi % 4 == 2)) t.C.push_back(m);
    }
    for (unsigned r = 1; r <= 10; ++r) {
        std::vector<std::uint64_t> row;
        for (std::uint64_t m = 3; m <= kMaxIndex; ++m) {
            std::uint64_t phi = euler_phi(m);
            if (r * phi > kRankBound) continue;
            if (!lemma_r_cases(m, r)) continue;
            // Exactness of n_X = m: a unimodular T_X admits -id glued with the
            // identity of S_X, so the order is even.
            auto [v1, vm1] = phi_values(m);
            if (v1 == 1 && m % 2 != 0) continue;
            row.push_back(m);
        }
        t.characterization[r] = std::move(row);
    }
    t.published = {
        {1, {3, 5, 7, 9, 11, 12, 13, 17, 19, 25, 27, 28, 36, 42, 44, 66}},
        {2, {3, 4, 5, 6, 7, 8, 11, 14, 16, 18, 22}},
        {3, {3, 5, 7, 9, 12}},
        {4, {3, 4, 5, 8}},
        {5, {3, 5, 8}},
        {6, {3, 4, 6}},
        {7, {3}},
        {8, {3, 4}},
        {9, {3}},
        {10, {3, 4, 6}},
    };
    for (unsigned r = 1; r <= 10; ++r) {
        const auto& derived = t.characterization[r];
        const auto& published = t.published[r];
        if (derived == published) continue;
        std::ostringstream os;
        os << "r = " << r << ": derived {";
        for (std::size_t i = 0; i < derived.size(); ++i) os << (i ? "," : "") << derived[i];
        os << "} differs from published {";
        for (std::size_t i = 0; i < published.size(); ++i) os << (i ? "," : "") << published[i];
        os << "}";
        if (r == 5)
            os << "; the published row contains 8, but Phi_8(-1)^5 = 32 is not a square, so"
                  " the trivial-Picard conditions fail for Phi_8^5; (12,5) satisfies them"
                  " and n_X = 12 is forced by the phi-divisibility of rank 20";
        if (r == 2)
            os << "; the r-criterion plus the evenness condition admits 9 (Phi_9(1) = 3,"
                  " T_X 3-primary); the published row omits it without a stated reason";
        t.flags.push_back(os.str());
    }
    return t;
}

DetConstraint det_constraint(std::uint64_t m) {
    auto [v1, vm1] = phi_values(m);
    if (v1 == 1) return DetConstraint{DetConstraint::Kind::UnimodularOnly, 0};
    if (!is_prime(v1)) throw internal_error("det_constraint: Phi_m(1) neither 1 nor prime");
    if (euler_phi(m) <= kRankBound && v1 > 19)
        throw internal_error("det_constraint: prime bound p <= 19 violated");
    return DetConstraint{DetConstraint::Kind::PPrimary, v1};
}

PairLogic pair_logic(std::uint64_t m) {
    ClassTable t = tables();
    bool in_a = std::find(t.A.begin(), t.A.end(), m) != t.A.end();
    bool in_b = std::find(t.B.begin(), t.B.end(), m) != t.B.end();
    if (!in_a && !in_b) throw std::domain_error("pair_logic: m is not in A union B");
    return PairLogic{m, in_a, in_a ? m : 2 * m};
}

std::vector<std::pair<std::uint64_t, unsigned>> mt_pairs() {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t m = 4; m <= kMaxIndex; m += 2) {
        std::uint64_t phi = euler_phi(m);
        if (phi > kRankBound) continue;
        for (unsigned t = 1; t * phi <= kRankBound; ++t) out.emplace_back(m, t);
    }
    return out;
}

bool mo_remark_check() {
    for (std::uint64_t m : {28, 30, 32, 34, 38, 40, 42, 44, 48, 54, 66})
        if (!corollary1_mx(m)) return false;
    return true;
}

} // namespace k3cyclo
