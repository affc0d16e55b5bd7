#include "mhs/error.hpp"
#include "mhs/gallery.hpp"
#include "mhs/oracle.hpp"
#include "mhs/sweep.hpp"

#include <doctest.h>

using namespace mhs;

TEST_CASE("gallery-a: harmonic sum mod p^2") {
    const Prime five(5);
    CHECK(inv_sq(ResidueSq{3}, five) == ResidueSq{17});
    CHECK(inv_sq(ResidueSq{4}, five) == ResidueSq{19});
    CHECK(harmonic_sum_mod_sq(five) == ResidueSq{0}); // 1 + 13 + 17 + 19 = 50
    CHECK(check_wolstenholme(five).passed());
    CHECK(check_wolstenholme(Prime(7)).passed());
    CHECK_THROWS_AS(check_wolstenholme(Prime(3)), Error);
    // at p = 3 the harmonic sum 3/2 is not 0 mod 9
    CHECK(harmonic_sum_mod_sq(Prime(3)) != ResidueSq{0});
}

TEST_CASE("gallery-a reduced mod p matches the n = 1 complete sum") {
    for (std::uint64_t p : primes_in_range(5, 300)) {
        const Prime ctx(p);
        REQUIRE(check_wolstenholme(ctx).passed());
        REQUIRE(harmonic_sum_mod_sq(ctx).value % p == full_mhs(build_tables(ctx, 1), 1).value);
        const auto exact = oracle::exact_harmonic(p - 1);
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), exact.numerator.get_mpz_t(), p * p);
        REQUIRE(r == 0);
    }
}

TEST_CASE("gallery-b") {
    CHECK(check_sun_halves(Prime(7)).passed());
    CHECK(check_sun_halves(Prime(5)).passed());
    CHECK(check_sun_halves(Prime(11)).passed());
    CHECK_THROWS_AS(check_sun_halves(Prime(3)), Error);
    for (std::uint64_t p : primes_in_range(5, 300)) REQUIRE(check_sun_halves(Prime(p)).passed());
}

TEST_CASE("gallery-b against a direct evaluation at p = 11") {
    // 3^k/k for k < 5.5 and (-1)^k/k for k < 11/6, reduced with pow(k, -1, 11)
    const std::uint64_t p = 11;
    std::uint64_t lhs = 0;
    std::uint64_t pw = 1;
    for (std::uint64_t k = 1; 2 * k < p; ++k) {
        pw = pw * 3 % p;
        std::uint64_t inv = 1;
        while (inv * k % p != 1) ++inv;
        lhs = (lhs + pw * inv) % p;
    }
    CHECK(lhs == p - 1); // rhs is -1/1
}

TEST_CASE("gallery-d") {
    const Prime five(5);
    CHECK(central_binomial_sum_mod_sq(five, 1) == ResidueSq{24}); // 99 mod 25
    CHECK(check_sun_tauraso(five, 1).passed());
    CHECK(central_binomial_sum_mod_sq(Prime(7), 1) == ResidueSq{1}); // 1275 mod 49
    CHECK(check_sun_tauraso(Prime(7), 1).passed());
    CHECK(central_binomial_sum_mod_sq(Prime(3), 2) == ResidueSq{0}); // 17577 = 9 * 1953
    CHECK(check_sun_tauraso(Prime(3), 2).passed());
    CHECK(check_sun_tauraso(Prime(3), 2).n == 2);
    try {
        check_sun_tauraso(Prime(317), 2);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("gallery-d passes across primes and small exponents") {
    for (std::uint64_t p : primes_in_range(3, 300)) {
        REQUIRE(check_sun_tauraso(Prime(p), 1).passed());
    }
    for (auto [p, a] : {std::pair{3ull, 5u}, std::pair{5ull, 3u}, std::pair{7ull, 3u}, std::pair{31ull, 2u}}) {
        CHECK(check_sun_tauraso(Prime(p), a).passed());
    }
}
