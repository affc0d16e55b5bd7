#include "mhs/error.hpp"
#include "mhs/oracle.hpp"
#include "mhs/sweep.hpp"

#include <doctest.h>

using namespace mhs;
using oracle::ExactSum;

namespace {

ExactSum q(long num, long den) { return ExactSum::from(mpq_class(num, den)); }

// Sums 1/(i_1 ... i_n) with n nested loops written out by hand, no recursion.
mpq_class triple_sum(std::uint64_t p, const FirstIndexWeight& w) {
    mpq_class acc = 0;
    for (std::uint64_t i = 1; i < p; ++i)
        for (std::uint64_t j = i + 1; j < p; ++j)
            for (std::uint64_t k = j + 1; k < p; ++k)
                acc += mpq_class(static_cast<long>(w(i)), static_cast<unsigned long>(i * j * k));
    return acc;
}

} // namespace

TEST_CASE("exact_nested_sum examples") {
    CHECK(oracle::exact_nested_sum(5, 3, weights::one) == q(5, 12));
    CHECK(oracle::exact_nested_sum(7, 1, weights::one) == q(49, 20));
    CHECK(oracle::exact_nested_sum(7, 2, weights::one) == q(203, 90));
    CHECK(oracle::exact_nested_sum(5, 3, weights::chi3_alternating) == q(-5, 12));
}

TEST_CASE("exact_nested_sum agrees with hand-written loops") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull}) {
        CHECK(oracle::exact_nested_sum(p, 3, weights::one).value() == triple_sum(p, weights::one));
        CHECK(oracle::exact_nested_sum(p, 3, weights::chi3_alternating).value() ==
              triple_sum(p, weights::chi3_alternating));
    }
}

TEST_CASE("exact_nested_sum has an enumeration budget") {
    CHECK(oracle::tuple_count(30, 8) == 5852925);
    CHECK(oracle::tuple_count(4, 5) == 0);
    CHECK(oracle::tuple_count(12, 6) == 924);
    CHECK_THROWS_AS(oracle::exact_nested_sum(31, 8, weights::one), Error);
    try {
        oracle::exact_nested_sum(31, 8, weights::one);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_NOTHROW(oracle::exact_nested_sum(31, 4, weights::one));
    CHECK_THROWS_AS(oracle::exact_nested_sum(9, 2, weights::one), Error);
}

TEST_CASE("reduce_mod") {
    const Prime five(5);
    const Prime seven(7);
    CHECK(oracle::reduce_mod(q(5, 12), five) == Residue{0});
    CHECK(oracle::reduce_mod(q(49, 20), seven) == Residue{0});
    CHECK(oracle::reduce_mod(q(203, 90), seven) == Residue{0});
    CHECK(oracle::reduce_mod(q(-1, 2), seven) == Residue{3});
    try {
        oracle::reduce_mod(q(1, 5), five);
        FAIL("expected DenominatorDivisible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DenominatorDivisible);
    }
}

TEST_CASE("exact_poly_fn") {
    const auto f1 = oracle::exact_poly_fn(5, 1);
    REQUIRE(f1.size() == 5);
    CHECK(f1[0] == q(0, 1));
    CHECK(f1[1] == q(1, 1));
    CHECK(f1[2] == q(1, 2));
    CHECK(f1[3] == q(1, 3));
    CHECK(f1[4] == q(1, 4));

    const auto f2 = oracle::exact_poly_fn(5, 2);
    CHECK(f2[1] == q(13, 12));
    CHECK(f2[4] == q(0, 1));
}

TEST_CASE("exact coefficients sum to the complete sum") {
    for (std::uint64_t p : primes_in_range(3, 13)) {
        for (int n = 1; n <= static_cast<int>(p - 1); ++n) {
            mpq_class total = 0;
            for (const auto& c : oracle::exact_poly_fn(p, n)) total += c.value();
            REQUIRE(total == oracle::exact_nested_sum(p, n, weights::one).value());
        }
    }
}

TEST_CASE("Wolstenholme: numerator of H_{p-1} is divisible by p^2") {
    for (std::uint64_t p : primes_in_range(5, 31)) {
        const ExactSum h = oracle::exact_harmonic(p - 1);
        REQUIRE(mpz_divisible_ui_p(h.numerator.get_mpz_t(), p * p) != 0);
    }
    CHECK(oracle::exact_harmonic(6) == q(49, 20));
}
