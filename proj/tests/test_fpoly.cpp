#include "mhs/error.hpp"
#include "mhs/fpoly.hpp"
#include "mhs/oracle.hpp"
#include "mhs/sweep.hpp"

#include <doctest.h>

#include <random>

using namespace mhs;

namespace {

FpPoly poly(std::uint32_t p, std::initializer_list<std::uint32_t> c) {
    FpPoly f{p, {}};
    for (auto v : c) f.coeffs.push_back(Residue{v});
    return f;
}

FpPoly random_poly(std::mt19937_64& rng, const Prime& ctx, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> d(0, ctx.modulus() - 1);
    FpPoly f{ctx.modulus(), std::vector<Residue>(len)};
    for (auto& c : f.coeffs) c = Residue{d(rng)};
    return f;
}

// f(1 - x) by repeated multiplication with (1 - x), a route independent of
// the Pascal-row transform.
FpPoly expand_reflection(const FpPoly& f, const Prime& ctx) {
    const FpPoly one_minus_x = poly(ctx.modulus(), {1, ctx.modulus() - 1});
    FpPoly power = poly(ctx.modulus(), {1});
    FpPoly acc{ctx.modulus(), {}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        acc = add(acc, scale(power, f.coeffs[i], ctx), ctx);
        power = mul(power, one_minus_x, ctx);
    }
    return acc;
}

} // namespace

TEST_CASE("build_fn at p = 5") {
    const Prime ctx(5);
    const MhsTables t = build_tables(ctx, 3);
    const FpPoly f1 = build_fn(t, 1);
    CHECK(f1 == poly(5, {0, 1, 3, 2, 4}));
    CHECK(f1.size() == 5);
    CHECK(f1.coeff(0) == Residue{0});

    // n = p - 1: the single tuple (1,2,3,4) sits at x^1
    const MhsTables edge = build_tables(ctx, 4, true);
    CHECK(build_fn(edge, 4) == poly(5, {0, 4}));
    CHECK_THROWS_AS(build_fn(t, 4), Error);
}

TEST_CASE("formal_derivative") {
    const Prime ctx(5);
    CHECK(formal_derivative(poly(5, {0, 1, 3, 2, 4}), ctx) == poly(5, {1, 1, 1, 1}));
    CHECK(formal_derivative(poly(5, {3}), ctx).size() == 0);
    // x^5 has derivative 5x^4 = 0
    CHECK(formal_derivative(poly(5, {0, 0, 0, 0, 0, 1}), ctx) == FpPoly{5, {}});
}

TEST_CASE("subst_one_minus_x") {
    const Prime ctx(5);
    CHECK(subst_one_minus_x(poly(5, {0, 1, 3, 2, 4}), ctx) == poly(5, {0, 1, 3, 2, 4}));
    CHECK(subst_one_minus_x(poly(5, {3}), ctx) == poly(5, {3}));
    CHECK(subst_one_minus_x(poly(5, {0, 1}), ctx) == poly(5, {1, 4}));
    CHECK(subst_one_minus_x(FpPoly{5, {}}, ctx) == FpPoly{5, {}});
    CHECK_THROWS_AS(subst_one_minus_x(poly(5, {0, 0, 0, 0, 0, 1}), ctx), Error);
}

TEST_CASE("subst_one_minus_x matches repeated multiplication by 1 - x") {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {3ull, 5ull, 7ull, 31ull, 101ull}) {
        const Prime ctx(p);
        for (int trial = 0; trial < 10; ++trial) {
            const FpPoly f = random_poly(rng, ctx, 1 + rng() % p);
            REQUIRE(subst_one_minus_x(f, ctx) == expand_reflection(f, ctx));
        }
    }
}

TEST_CASE("property: x -> 1 - x is an involution") {
    std::mt19937_64 rng(1001);
    const auto primes = primes_in_range(3, 101);
    for (int trial = 0; trial < 150; ++trial) {
        const Prime ctx(primes[rng() % primes.size()]);
        const FpPoly f = random_poly(rng, ctx, 1 + rng() % ctx.modulus());
        REQUIRE(subst_one_minus_x(subst_one_minus_x(f, ctx), ctx) == f);
    }
}

TEST_CASE("property: reflected coefficients agree with reflected evaluation") {
    std::mt19937_64 rng(2002);
    const auto primes = primes_in_range(3, 101);
    for (int trial = 0; trial < 120; ++trial) {
        const Prime ctx(primes[rng() % primes.size()]);
        const FpPoly f = random_poly(rng, ctx, ctx.modulus());
        const FpPoly g = subst_one_minus_x(f, ctx);
        std::vector<Residue> values(ctx.modulus());
        for (std::uint32_t a = 0; a < ctx.modulus(); ++a) {
            REQUIRE(eval(g, Residue{a}, ctx) == eval(f, ctx.sub(Residue{1}, Residue{a}), ctx));
            values[a] = eval(f, ctx.sub(Residue{1}, Residue{a}), ctx);
        }
        // and back: the p values pin down g's coefficients
        REQUIRE(interpolate_all_points(values, ctx) == g);
    }
}

TEST_CASE("eval") {
    const Prime ctx(5);
    const FpPoly f1 = poly(5, {0, 1, 3, 2, 4});
    CHECK(eval(f1, Residue{1}, ctx) == Residue{0});
    CHECK(eval(f1, Residue{0}, ctx) == Residue{0});
    CHECK(eval(poly(5, {2, 1}), Residue{0}, ctx) == Residue{2});
    CHECK(eval(poly(5, {1, 1}), Residue{4}, ctx) == Residue{0});
}

TEST_CASE("eval over the omega ring") {
    const Prime ctx(7);
    // 1 + x + x^2 vanishes at omega
    const FpPoly cyclo = poly(7, {1, 1, 1});
    CHECK(eval(cyclo, OmegaElem::omega(), ctx) == OmegaElem::zero());
    // x^3 - 1 vanishes at omega
    CHECK(eval(poly(7, {6, 0, 0, 1}), OmegaElem::omega(), ctx) == OmegaElem::zero());
    const FpPoly ident = poly(7, {0, 1});
    const OmegaElem z{Residue{3}, Residue{5}};
    CHECK(eval(ident, z, ctx) == z);
}

TEST_CASE("f1_closed_form") {
    CHECK(f1_closed_form(Prime(5)) == poly(5, {0, 1, 3, 2, 4}));
    CHECK(f1_closed_form(Prime(3)) == poly(3, {0, 1, 2}));
    CHECK(f1_closed_form(Prime(101)).coeff(0) == Residue{0});
}

TEST_CASE("f1_closed_form matches the exact expansion of (1 - x^p - (1 - x)^p)/p") {
    for (std::uint64_t p : primes_in_range(3, 61)) {
        const Prime ctx(p);
        const FpPoly closed = f1_closed_form(ctx);
        for (std::uint64_t i = 1; i < p; ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), p, i);
            mpz_class c = binom / static_cast<unsigned long>(p);
            if (i % 2 == 0) c = -c;
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
            REQUIRE(closed.coeff(i).value == r.get_ui());
        }
    }
}

TEST_CASE("F_1 equals its closed form for 5 <= p <= 500") {
    for (std::uint64_t p : primes_in_range(5, 500)) {
        const Prime ctx(p);
        REQUIRE(build_fn(build_tables(ctx, 1), 1) == f1_closed_form(ctx));
    }
}

TEST_CASE("F_n coefficients agree with the exact oracle for p <= 13") {
    for (std::uint64_t p : primes_in_range(3, 13)) {
        const Prime ctx(p);
        const MhsTables t = build_tables(ctx, static_cast<int>(p - 2));
        for (int n = 1; n <= static_cast<int>(p - 2); ++n) {
            const auto exact = oracle::exact_poly_fn(p, n);
            const FpPoly f = build_fn(t, n);
            for (std::uint32_t m = 0; m < p; ++m) REQUIRE(oracle::reduce_mod(exact[m], ctx) == f.coeff(m));
        }
    }
}

TEST_CASE("derivative identity x(x-1)F_n' = F_{n-1} - x G[n-1][0]") {
    for (std::uint64_t p : primes_in_range(5, 113)) {
        const Prime ctx(p);
        const int depth = static_cast<int>(std::min<std::uint64_t>(8, p - 2));
        const MhsTables t = build_tables(ctx, depth);
        const FpPoly x_x_minus_1 = poly(static_cast<std::uint32_t>(p), {0, static_cast<std::uint32_t>(p - 1), 1});
        for (int n = 2; n <= depth; ++n) {
            const FpPoly lhs = mul(x_x_minus_1, formal_derivative(build_fn(t, n), ctx), ctx);
            FpPoly rhs = build_fn(t, n - 1);
            rhs.coeffs[1] = ctx.sub(rhs.coeffs[1], t.at(n - 1, 0));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("F_n(1) is the complete sum") {
    for (std::uint64_t p : {5ull, 7ull, 13ull, 97ull}) {
        const Prime ctx(p);
        const int depth = static_cast<int>(std::min<std::uint64_t>(6, p - 2));
        const MhsTables t = build_tables(ctx, depth);
        for (int n = 1; n <= depth; ++n) CHECK(eval(build_fn(t, n), Residue{1}, ctx) == full_mhs(t, n));
    }
}

TEST_CASE("x^{p-1} - 1 factors as the product of (x - j)") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 31ull, 97ull}) {
        const Prime ctx(p);
        FpPoly prod = poly(static_cast<std::uint32_t>(p), {1});
        FpPoly prod_inv = prod;
        for (std::uint64_t j = 1; j < p; ++j) {
            prod = mul(prod, FpPoly{ctx.modulus(), {ctx.neg(ctx.reduce_unsigned(j)), Residue{1}}}, ctx);
            prod_inv = mul(prod_inv, FpPoly{ctx.modulus(), {ctx.neg(ctx.inv(j)), Residue{1}}}, ctx);
        }
        FpPoly target{ctx.modulus(), std::vector<Residue>(p)};
        target.coeffs[0] = Residue{ctx.modulus() - 1};
        target.coeffs[p - 1] = Residue{1};
        CHECK(prod == target);
        CHECK(prod_inv == target);
    }
}

TEST_CASE("trailing zeros are ignored on comparison only") {
    const FpPoly a = poly(7, {1, 2, 0, 0});
    const FpPoly b = poly(7, {1, 2});
    CHECK(a == b);
    CHECK(a.size() == 4);
    CHECK(a.trimmed_size() == 2);
    CHECK(first_difference(a, poly(7, {1, 3})) == std::optional<std::size_t>{1});
}
