#include "k3cyclo/expr.hpp"
#include "k3cyclo/realizability.hpp"

#include <doctest.h>

using namespace k3cyclo;

TEST_CASE("phi_values: closed form") {
    CHECK(phi_values(9) == std::make_pair(Int(3), Int(1)));
    CHECK(phi_values(14) == std::make_pair(Int(1), Int(7)));
    CHECK(phi_values(60) == std::make_pair(Int(1), Int(1)));
    CHECK(phi_values(4) == std::make_pair(Int(2), Int(2)));
    CHECK(phi_values(25) == std::make_pair(Int(5), Int(1)));
    CHECK_THROWS_AS(phi_values(2), std::domain_error);
}

TEST_CASE("phi_values: dual path against direct evaluation") {
    for (std::uint64_t m = 3; m <= 100; ++m) {
        auto [v1, vm1] = phi_values(m);
        CHECK(v1 == eval_int(cyclotomic(m), 1));
        CHECK(vm1 == eval_int(cyclotomic(m), -1));
    }
}

TEST_CASE("prop2_trivial_picard") {
    CHECK(prop2_trivial_picard(12, 1).yes);
    CHECK_FALSE(prop2_trivial_picard(8, 1).yes);
    CHECK(prop2_trivial_picard(4, 2).yes);
    CHECK(prop2_trivial_picard(12, 1).unimodular_t);
    CHECK(prop2_trivial_picard(12, 1).unique_surface);
    CHECK_FALSE(prop2_trivial_picard(4, 2).unimodular_t);
    CHECK_THROWS_AS(prop2_trivial_picard(3, 11), std::domain_error); // bound
    CHECK_THROWS_AS(prop2_trivial_picard(2, 1), std::domain_error);
}

TEST_CASE("anti_kondo") {
    CHECK(anti_kondo(14, 2).yes);
    CHECK(anti_kondo(3, 2).yes);
    CHECK_FALSE(anti_kondo(15, 1).yes);
}

TEST_CASE("prop8: the worked complements are reproduced") {
    auto r15 = prop8(15, 1);
    CHECK(r15.yes);
    CHECK(r15.route == Route::Prop8Complement);
    CHECK(render(*r15.complement) == "cyc(3)*(x-1)^12");

    auto r32 = prop8(32, 1);
    CHECK(render(*r32.complement) == "cyc(4)*(x-1)^4");

    auto r40 = prop8(40, 1);
    CHECK(render(*r40.complement) == "cyc(5)*(x-1)^2");

    auto r60 = prop8(60, 1);
    CHECK(r60.route == Route::Prop8Salem);
    CHECK(render(*r60.complement) == "salem(2)");

    CHECK_THROWS_AS(prop8(3, 1), std::domain_error); // C(1) != C(-1)
}

TEST_CASE("prop1 routing") {
    CHECK(prop1(3, 1).route == Route::Kondo);
    CHECK(prop1(4, 1).route == Route::Prop8Complement);
    CHECK(prop1(60, 1).route == Route::Prop8Salem);
    CHECK(prop1(34, 1).route == Route::AntiKondo);
    CHECK_THROWS_AS(prop1(4, 9), internal_error);
    CHECK_THROWS_AS(prop1(8, 5), internal_error);
}

TEST_CASE("corollary1_mx") {
    CHECK(corollary1_mx(1));
    CHECK(corollary1_mx(60));
    CHECK_FALSE(corollary1_mx(15));
    CHECK_THROWS_AS(corollary1_mx(47), std::domain_error); // phi = 46 > 20
}

TEST_CASE("lemma_r_cases") {
    CHECK(lemma_r_cases(3, 3));
    CHECK_FALSE(lemma_r_cases(12, 2));
    CHECK(lemma_r_cases(3, 4));
    CHECK(lemma_r_cases(12, 5));
    CHECK_FALSE(lemma_r_cases(8, 5));
}

TEST_CASE("lemma_r_cases agrees with the trivial-Picard verdict") {
    for (std::uint64_t m = 3; m <= 66; ++m) {
        std::uint64_t phi = euler_phi(m);
        if (phi > 20) continue;
        for (unsigned r = 1; r * phi <= 20; ++r)
            CHECK(lemma_r_cases(m, r) == prop2_trivial_picard(m, r).yes);
    }
}

TEST_CASE("tables") {
    ClassTable t = tables();
    CHECK(t.A == std::vector<std::uint64_t>{12, 28, 36, 42, 44, 66});
    CHECK(t.B == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 25, 27});
    CHECK(t.C == std::vector<std::uint64_t>{4, 6, 8, 14, 16, 18, 22});
    CHECK(t.characterization.at(4) == std::vector<std::uint64_t>{3, 4, 5, 8});
    CHECK(t.characterization.at(3) == std::vector<std::uint64_t>{3, 5, 7, 9, 12});
    CHECK(t.characterization.at(7) == std::vector<std::uint64_t>{3});
    // row 1 is exactly A union B
    std::vector<std::uint64_t> ab;
    ab.insert(ab.end(), t.A.begin(), t.A.end());
    ab.insert(ab.end(), t.B.begin(), t.B.end());
    std::sort(ab.begin(), ab.end());
    CHECK(t.characterization.at(1) == ab);
    // the two known divergences from the published rows are flagged
    CHECK(t.flags.size() == 2);
}

TEST_CASE("A, B, C are pairwise disjoint") {
    ClassTable t = tables();
    for (auto a : t.A) {
        CHECK(std::find(t.B.begin(), t.B.end(), a) == t.B.end());
        CHECK(std::find(t.C.begin(), t.C.end(), a) == t.C.end());
    }
    for (auto b : t.B) CHECK(std::find(t.C.begin(), t.C.end(), b) == t.C.end());
}

TEST_CASE("det_constraint: P-primary values agree with phi_values") {
    for (std::uint64_t m = 3; m <= 66; ++m) {
        if (euler_phi(m) > 20) continue;
        auto dc = det_constraint(m);
        auto [v1, vm1] = phi_values(m);
        if (dc.kind == DetConstraint::Kind::PPrimary) {
            CHECK(dc.p == v1);
            CHECK(dc.p <= 19);
        } else {
            CHECK(v1 == 1);
        }
    }
}

TEST_CASE("det_constraint") {
    auto d19 = det_constraint(19);
    CHECK(d19.kind == DetConstraint::Kind::PPrimary);
    CHECK(d19.p == 19);
    CHECK(det_constraint(12).kind == DetConstraint::Kind::UnimodularOnly);
    auto d25 = det_constraint(25);
    CHECK(d25.kind == DetConstraint::Kind::PPrimary);
    CHECK(d25.p == 5);
}

TEST_CASE("pair_logic") {
    CHECK(pair_logic(7).m_x == 14);
    CHECK(pair_logic(12).m_x == 12);
    CHECK(pair_logic(27).m_x == 54);
    CHECK_THROWS_AS(pair_logic(15), std::domain_error);
}

TEST_CASE("mt_pairs") {
    auto pairs = mt_pairs();
    auto has = [&](std::uint64_t m, unsigned t) {
        return std::find(pairs.begin(), pairs.end(), std::make_pair(m, t)) != pairs.end();
    };
    CHECK(has(4, 10));
    CHECK(has(66, 1));
    CHECK_FALSE(has(3, 1));
    CHECK_FALSE(has(4, 11));
    for (auto [m, t] : pairs) {
        CHECK(m % 2 == 0);
        CHECK(m >= 4);
        CHECK(t * euler_phi(m) <= 20);
    }
}

TEST_CASE("mo_remark_check") { CHECK(mo_remark_check()); }
