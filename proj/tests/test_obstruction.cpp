#include "k3cyclo/obstruction.hpp"
#include "k3cyclo/realizability.hpp"

#include <doctest.h>

using namespace k3cyclo;

namespace {

FactoredCharPoly ex34() {
    FactoredCharPoly f;
    f.cyclotomic_factors = {{15, 2}, {3, 1}};
    f.n_plus = 2;
    return f;
}

FactoredCharPoly ex36() {
    FactoredCharPoly f;
    f.cyclotomic_factors = {{60, 1}, {12, 1}};
    return f;
}

FactoredCharPoly ex56() {
    FactoredCharPoly f;
    f.cyclotomic_factors = {{60, 1}};
    f.salem_factor = salem_family(2);
    f.salem_index = 2;
    return f;
}

} // namespace

TEST_CASE("decompose") {
    auto d = decompose(ex34());
    CHECK(d.n_plus == 2);
    CHECK(d.n_minus == 0);
    CHECK(d.d0 == 3);
    REQUIRE(d.factors.size() == 3);
    CHECK(d.factors[0].name == "cyc15");
    CHECK(d.factors[1].name == "cyc3");
    CHECK(d.factors[2].name == "x-1");

    auto d36 = decompose(ex36());
    CHECK(d36.d0 == 1);
    CHECK(d36.factors.size() == 2);
    CHECK(d36.n_plus == 0);
    CHECK(d36.n_minus == 0);

    FactoredCharPoly c4;
    c4.cyclotomic_factors = {{4, 1}};
    CHECK(decompose(c4).d0 == -4);

    FactoredCharPoly odd;
    odd.cyclotomic_factors = {{3, 1}};
    odd.n_plus = 1;
    CHECK_THROWS_AS(decompose(odd), std::domain_error);

    FactoredCharPoly bad_index;
    bad_index.cyclotomic_factors = {{2, 2}};
    CHECK_THROWS_AS(decompose(bad_index), std::domain_error);
}

TEST_CASE("D0 from expanded F1 equals the factorwise product") {
    for (auto f : {ex34(), ex36(), ex56()}) {
        IntPolynomial f1 = f.f1();
        std::size_t n = f.half_degree();
        Int direct = f1.eval(1) * f1.eval(-1);
        if (n % 2) direct = -direct;
        CHECK(direct == f.d0());
    }
}

TEST_CASE("condition_c1") {
    CHECK(condition_c1(ex36()).holds);
    CHECK(condition_c1(ex56()).holds);

    FactoredCharPoly bad;
    bad.cyclotomic_factors = {{4, 1}};
    bad.n_plus = 20;
    auto rep = condition_c1(bad);
    CHECK_FALSE(rep.holds);
    CHECK(rep.at_minus1 == pow_int(Int(2), 21));

    // factorwise evaluation equals expansion
    for (auto f : {ex34(), ex36(), ex56(), bad}) {
        IntPolynomial e = f.expand();
        CHECK(f.eval(1) == e.eval(1));
        CHECK(f.eval(-1) == e.eval(-1));
    }
}

TEST_CASE("g_f: worked examples") {
    auto g34 = g_f(ex34());
    CHECK(g34.rank == 0);
    REQUIRE(g34.components.size() == 1);
    CHECK(g34.edges.size() >= 2);

    auto g36 = g_f(ex36());
    CHECK(g36.rank == 1);
    CHECK(g36.components.size() == 2);
    CHECK(g36.edges.empty());

    auto g56 = g_f(ex56());
    CHECK(g56.rank == 0);
    REQUIRE(g56.edges.size() == 1);
    CHECK(g56.edges[0].certificate.p == 359);
}

TEST_CASE("g_f: single irreducible factor has trivial group") {
    for (std::uint64_t m : {3, 12, 60, 66}) {
        FactoredCharPoly f;
        f.cyclotomic_factors = {{m, 1}};
        CHECK(g_f(f).rank == 0);
    }
}

TEST_CASE("g_f: rank does not increase when an edge-creating factor joins") {
    // Phi_15^2 Phi_3 alone: connected through p = 5.
    FactoredCharPoly base;
    base.cyclotomic_factors = {{15, 2}, {3, 1}};
    auto r0 = g_f(base).rank;
    CHECK(r0 == 0);
    // adding the (x-1)^2 block keeps rank 0 (edge via p = 3)
    CHECK(g_f(ex34()).rank <= r0);

    // Phi_60 Phi_12 rank 1; adding Phi_3 creates the edge Phi_12 -- Phi_3
    FactoredCharPoly bigger = ex36();
    bigger.cyclotomic_factors[3] = 1;
    CHECK(g_f(bigger).rank <= g_f(ex36()).rank);

    // Salem-linear pairs are skipped, not edges
    FactoredCharPoly sl = ex56();
    sl.n_plus = 2;
    auto g = g_f(sl);
    bool has_salem_linear_skip = false;
    for (auto [a, b] : g.skipped_pairs) {
        auto ka = g.factors[a].kind, kb = g.factors[b].kind;
        if ((ka == Factor::Kind::Salem && kb == Factor::Kind::XMinus1) ||
            (kb == Factor::Kind::Salem && ka == Factor::Kind::XMinus1))
            has_salem_linear_skip = true;
    }
    CHECK(has_salem_linear_skip);
}

TEST_CASE("check_mod8") {
    CHECK(check_mod8(3, 19));
    CHECK_FALSE(check_mod8(2, 14));
    CHECK(check_mod8(0, 0));
    CHECK(check_mod8(1, 1));
    CHECK_FALSE(check_mod8(2, 0));
}

TEST_CASE("signature bookkeeping") {
    auto t = signature_book_keeping(16, 6);
    CHECK(t.tau_c == std::make_pair(2u, 14u));
    CHECK(t.tau_linear == std::make_pair(1u, 5u));
    CHECK(t.maximum == std::make_pair(3u, 19u));
    CHECK(signature_book_keeping(20, 2).tau_c == std::make_pair(2u, 18u));
    CHECK(signature_book_keeping(4, 18).tau_c == std::make_pair(2u, 2u));
    CHECK_THROWS_AS(signature_book_keeping(16, 7), std::domain_error);
    CHECK_THROWS_AS(signature_book_keeping(2, 0), std::domain_error);
}
