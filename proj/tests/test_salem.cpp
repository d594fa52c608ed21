#include "k3cyclo/salem.hpp"

#include <doctest.h>

#include <complex>

using namespace k3cyclo;

TEST_CASE("verify_salem: family members") {
    auto rep = verify_salem(salem_family(2));
    CHECK(rep.verdict == SalemVerdict::Salem);
    CHECK(rep.profile.outside == 1);
    CHECK(rep.profile.inside == 1);
    CHECK(rep.profile.on_circle == 4);
    CHECK(rep.profile.real_outside_positive);
    CHECK(rep.irreducibility.certified);

    auto rep3 = verify_salem(salem_family(3));
    CHECK(rep3.verdict == SalemVerdict::Salem);
}

TEST_CASE("verify_salem: cyclotomic input is not Salem") {
    auto rep = verify_salem(cyclotomic(12));
    CHECK(rep.verdict == SalemVerdict::NotSalem);
    CHECK(rep.profile.on_circle == 4);
    CHECK(rep.profile.outside == 0);
}

TEST_CASE("verify_salem: preconditions") {
    CHECK_THROWS_AS(verify_salem(IntPolynomial{{1, 2, 1}}), std::domain_error); // degree < 4
    CHECK_THROWS_AS(verify_salem(IntPolynomial{{1, 0, 0, 0, 0, 0, 2}}), std::domain_error);
    CHECK_THROWS_AS(verify_salem(salem_family(2), 0.0), std::domain_error);
}

TEST_CASE("verify_salem: non-symmetric and reducible inputs") {
    // x^6 + x + 1 is not (+-)-symmetric
    CHECK(verify_salem(IntPolynomial{{1, 1, 0, 0, 0, 0, 1}}).verdict == SalemVerdict::NotSalem);
    // (x^2-3x+1)(x^2+x+1): symmetric, off-circle pair positive reals, but
    // visibly reducible; its degree patterns can never certify irreducibility.
    IntPolynomial prod = IntPolynomial{{1, -3, 1}} * cyclotomic(3);
    prod = prod * cyclotomic(4); // degree 6, keeps symmetry
    auto rep = verify_salem(prod);
    CHECK(rep.verdict != SalemVerdict::Salem);
}

TEST_CASE("root profile invariants over the family") {
    for (std::uint64_t n = 0; n <= 50; ++n) {
        auto rep = verify_salem(salem_family(n));
        CHECK(rep.profile.outside + rep.profile.inside + rep.profile.on_circle == 6);
        CHECK(rep.verdict != SalemVerdict::NotSalem);
        // reciprocal off-circle pair
        std::complex<double> prod{1.0, 0.0};
        for (const auto& z : rep.profile.roots)
            if (std::abs(std::abs(z) - 1.0) > rep.profile.epsilon) prod *= z;
        CHECK(std::abs(prod - std::complex<double>{1.0, 0.0}) < 10 * rep.profile.epsilon);
    }
}

TEST_CASE("salem_cyclo_gf: the 359 certificate") {
    auto gf = salem_cyclo_gf(salem_family(2), 60);
    CHECK(gf.rank == 0);
    REQUIRE(gf.certificates.size() == 1);
    CHECK(gf.certificates[0].p == 359);
    // witness x^2 - 15x + 1
    CHECK(gf.certificates[0].witness ==
          FpPolynomial(359, {1, 359 - 15, 1}));
    CHECK(gf.certificates[0].witness_symmetry == SymmetryClass::Plus);
    CHECK(gf.resultant_value == 128881);
}

TEST_CASE("salem_cyclo_gf: S_2 against Phi_3") {
    auto gf = salem_cyclo_gf(salem_family(2), 3);
    // res(S_2, Phi_3) = 64; the common factor of S_2 and Phi_3 mod 2 is
    // x^2 + x + 1, which is symmetric, so the rank is 0.
    CHECK(gf.resultant_value == 64);
    CHECK(gf.rank == 0);
    REQUIRE(gf.certificates.size() == 1);
    CHECK(gf.certificates[0].p == 2);
    CHECK(gf.certificates[0].witness == FpPolynomial(2, {1, 1, 1}));
}

TEST_CASE("salem_cyclo_gf: certificates divide both reductions re-checked through modfactor") {
    for (std::uint64_t m : {3, 60}) {
        auto gf = salem_cyclo_gf(salem_family(2), m);
        for (const auto& cert : gf.certificates) {
            std::uint64_t p = static_cast<std::uint64_t>(cert.p);
            CHECK(divmod(reduce_mod_p(salem_family(2), p), cert.witness).is_zero());
            CHECK(divmod(reduce_mod_p(cyclotomic(m), p), cert.witness).is_zero());
            CHECK(fp_symmetry_class(cert.witness) == SymmetryClass::Plus);
        }
    }
}

TEST_CASE("salem_cyclo_gf: preconditions") {
    CHECK_THROWS_AS(salem_cyclo_gf(cyclotomic(12), 60), std::domain_error);
    // x^4 - x^3 - 2x^2 - x + 1 is Salem but has S(1) = -2
    IntPolynomial s4{{1, -1, -2, -1, 1}};
    CHECK(verify_salem(s4).verdict == SalemVerdict::Salem);
    CHECK_THROWS_AS(salem_cyclo_gf(s4, 60), std::domain_error);
}

TEST_CASE("example56_check") {
    auto rep = example56_check();
    CHECK(rep.holds_c1);
    CHECK(rep.gf_rank == 0);
    CHECK(rep.degree == 22);
}
