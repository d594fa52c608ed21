#include "k3cyclo/modfactor.hpp"
#include "k3cyclo/numtheory.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace k3cyclo;

namespace {

FpPolynomial fp(std::uint64_t p, std::initializer_list<std::uint64_t> lowfirst) {
    return FpPolynomial{p, std::vector<std::uint64_t>(lowfirst)};
}

FpPolynomial reassemble(const std::vector<FpFactor>& factors, std::uint64_t p) {
    FpPolynomial prod = fp_one(p);
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.poly;
    return prod;
}

} // namespace

TEST_CASE("factor_mod_p: pinned examples") {
    auto f12 = factor_mod_p(cyclotomic(12), 5);
    REQUIRE(f12.size() == 2);
    CHECK(f12[0].poly == fp(5, {4, 2, 1})); // x^2 + 2x + 4
    CHECK(f12[1].poly == fp(5, {4, 3, 1})); // x^2 + 3x + 4
    CHECK(f12[0].multiplicity == 1);
    CHECK(f12[1].multiplicity == 1);

    auto f3 = factor_mod_p(cyclotomic(3), 3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].poly == fp(3, {2, 1})); // x + 2 = x - 1
    CHECK(f3[0].multiplicity == 2);

    auto sq = factor_mod_p(IntPolynomial{{-1, 0, 1}}, 7);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].poly == fp(7, {1, 1}));
    CHECK(sq[1].poly == fp(7, {6, 1}));
}

TEST_CASE("factor_mod_p: errors") {
    CHECK_THROWS_AS(factor_mod_p(cyclotomic(3), 4), std::domain_error);
    CHECK_THROWS_AS(factor_mod_p(IntPolynomial::constant(5), 5), std::domain_error);
}

TEST_CASE("factor_mod_p: reconstruction property") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_m(1, 80);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 359};
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t m = static_cast<std::uint64_t>(pick_m(rng));
        for (std::uint64_t p : primes) {
            IntPolynomial f = cyclotomic(m);
            auto factors = factor_mod_p(f, p);
            CHECK(reassemble(factors, p) == reduce_mod_p(f, p).monic());
            for (const auto& fac : factors) CHECK(fac.poly.is_monic());
        }
    }
    // seeds do not change the canonical output
    auto a = factor_mod_p(cyclotomic(60), 5, 1);
    auto b = factor_mod_p(cyclotomic(60), 5, 99999);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].poly == b[i].poly);
}

TEST_CASE("fp_symmetry_class") {
    CHECK(fp_symmetry_class(fp(359, {1, 359 - 15, 1})) == SymmetryClass::Plus); // x^2 - 15x + 1
    CHECK(fp_symmetry_class(fp(5, {4, 2, 1})) == SymmetryClass::None);
    CHECK(fp_symmetry_class(fp(7, {0, 1})) == SymmetryClass::None); // h(0) = 0
    CHECK(fp_symmetry_class(fp(7, {6, 1})) == SymmetryClass::Minus); // x - 1
    CHECK(fp_symmetry_class(fp(7, {1, 1})) == SymmetryClass::Plus);  // x + 1
    CHECK(fp_symmetry_class(fp(2, {1, 1})) == SymmetryClass::Plus);  // signs coincide over F_2
}

TEST_CASE("candidate_primes") {
    auto ps = candidate_primes(cyclotomic(60), cyclotomic(12));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == 5);
    ps = candidate_primes(cyclotomic(15), cyclotomic(3));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == 5);
    ps = candidate_primes(cyclotomic(3), IntPolynomial{{-1, 1}});
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == 3);
    CHECK_THROWS_AS(candidate_primes(cyclotomic(12), cyclotomic(12)), std::domain_error);
    CHECK_THROWS_AS(candidate_primes(IntPolynomial{{-1, 1}}, IntPolynomial{{1, 1}}),
                    std::domain_error);
}

TEST_CASE("pi_set: worked examples") {
    D0Context none{};
    auto c = pi_set(cyclotomic(15), cyclotomic(3), none);
    REQUIRE(c.size() == 1);
    CHECK(c[0].p == 5);
    CHECK(c[0].witness_symmetry == SymmetryClass::Plus);

    // Example: F = Phi_15^2 Phi_3 (x-1)^2, so n+ = 2 and D0 = 3.
    D0Context ex34{2, 0, 3};
    auto lin = pi_set(cyclotomic(3), IntPolynomial{{-1, 1}}, ex34);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].p == 3);
    REQUIRE(lin[0].d0_check.has_value());
    CHECK(*lin[0].d0_check);

    CHECK(pi_set(cyclotomic(60), cyclotomic(12), none).empty());
}

TEST_CASE("pi_set: D0 square-class filter can exclude a prime") {
    // F = Phi_4^9 Phi_8 (x-1)^2: D0 = -(2^9*2)(2^9*2) = -2^20, and -D0 is a
    // square in Q_2, so D0 = -1 there and p = 2 is excluded.
    D0Context ctx{2, 0, -pow_int(Int(2), 20)};
    auto certs = pi_set(cyclotomic(8), IntPolynomial{{-1, 1}}, ctx);
    CHECK(certs.empty());
    // With n+ != 2 the same pair admits p = 2.
    D0Context free_ctx{4, 0, -pow_int(Int(2), 20)};
    certs = pi_set(cyclotomic(8), IntPolynomial{{-1, 1}}, free_ctx);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].p == 2);
    CHECK_FALSE(certs[0].d0_check.has_value());
}

TEST_CASE("pi_set: witnesses divide both reductions") {
    D0Context none{};
    for (auto [a, b] : {std::pair<int, int>{15, 3}, {12, 3}, {30, 10}, {40, 5}, {48, 3}}) {
        for (const auto& cert : pi_set(cyclotomic(a), cyclotomic(b), none)) {
            std::uint64_t p = static_cast<std::uint64_t>(cert.p);
            FpPolynomial fr = reduce_mod_p(cyclotomic(a), p);
            FpPolynomial gr = reduce_mod_p(cyclotomic(b), p);
            CHECK(divmod(fr, cert.witness).is_zero());
            CHECK(divmod(gr, cert.witness).is_zero());
            auto s = fp_symmetry_class(cert.witness);
            CHECK((s == SymmetryClass::Plus || s == SymmetryClass::Minus));
        }
    }
}

TEST_CASE("pi_set: symmetric in its arguments, rejects linear-linear") {
    D0Context none{};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(3, 40);
    int done = 0;
    while (done < 25) {
        std::uint64_t a = static_cast<std::uint64_t>(pick(rng));
        std::uint64_t b = static_cast<std::uint64_t>(pick(rng));
        if (a == b) continue;
        ++done;
        auto ab = pi_set(cyclotomic(a), cyclotomic(b), none);
        auto ba = pi_set(cyclotomic(b), cyclotomic(a), none);
        REQUIRE(ab.size() == ba.size());
        for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i].p == ba[i].p);
    }
    CHECK_THROWS_AS(pi_set(IntPolynomial{{-1, 1}}, IntPolynomial{{1, 1}}, none),
                    std::domain_error);
}

TEST_CASE("candidate_primes soundness: scanning all p < 1000 finds nothing extra") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick(3, 60);
    std::vector<std::uint64_t> small_primes;
    for (std::uint64_t p = 2; p < 1000; ++p)
        if (is_prime_u64(p)) small_primes.push_back(p);

    int done = 0;
    while (done < 200) {
        std::uint64_t a = static_cast<std::uint64_t>(pick(rng));
        std::uint64_t b = static_cast<std::uint64_t>(pick(rng));
        if (a == b) continue;
        ++done;
        IntPolynomial f = cyclotomic(a), g = cyclotomic(b);
        std::set<Int> cands;
        for (const Int& p : candidate_primes(f, g)) cands.insert(p);
        D0Context none{};
        std::set<Int> from_pi;
        for (const auto& cert : pi_set(f, g, none)) from_pi.insert(cert.p);
        std::set<Int> brute;
        for (std::uint64_t p : small_primes) {
            FpPolynomial fr = reduce_mod_p(f, p), gr = reduce_mod_p(g, p);
            FpPolynomial h = fp_gcd(fr, gr);
            if (h.is_zero() || h.deg() == 0) continue;
            CHECK(cands.count(Int(p))); // any common factor forces p | resultant
            for (const auto& fac : fp_factor(h, kDefaultSeed)) {
                auto s = fp_symmetry_class(fac.poly);
                if (s == SymmetryClass::Plus || s == SymmetryClass::Minus) {
                    brute.insert(Int(p));
                    break;
                }
            }
        }
        for (const Int& p : brute)
            if (p < 1000) CHECK(from_pi.count(p));
        for (const Int& p : from_pi)
            if (p < 1000) CHECK(brute.count(p));
    }
}

TEST_CASE("primality at the Miller-Rabin witness values") {
    // regression: a witness equal to n must not report composite
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u})
        CHECK(is_prime_u64(p));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(41 * 43));
    CHECK(is_prime(Int(128881) / 359)); // 359
    CHECK(is_prime(Int("2305843009213693951")));     // 2^61 - 1
    CHECK_FALSE(is_prime(Int("2305843009213693953")));
    auto f = factorize(Int(-1804));
    REQUIRE(f.size() == 3);
    CHECK(f.at(2) == 2);
    CHECK(f.at(11) == 1);
    CHECK(f.at(41) == 1);
}

TEST_CASE("padic_is_square") {
    CHECK_FALSE(padic_is_square(Rat(-3), 3));
    CHECK(padic_is_square(Rat(9), 3));
    CHECK(padic_is_square(Rat(17), 2));
    CHECK_FALSE(padic_is_square(Rat(2), 2));
    CHECK_FALSE(padic_is_square(Rat(3), 2)); // 3 != 1 mod 8
    CHECK(padic_is_square(Rat(1, 4), 2));
    CHECK_FALSE(padic_is_square(Rat(1, 2), 2));
    CHECK(real_is_square(Rat(5, 3)));
    CHECK_FALSE(real_is_square(Rat(-2)));
    CHECK_THROWS_AS(padic_is_square(Rat(0), 3), std::domain_error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-50, 50);
    for (std::uint64_t p = 2; p <= 50; ++p) {
        if (!is_prime_u64(p)) continue;
        for (int i = 0; i < 40; ++i) {
            int a = num(rng);
            if (a == 0) continue;
            CHECK(padic_is_square(Rat(a) * Rat(a), p));
        }
    }
}
