#include "mhs/oracle.hpp"

#include "mhs/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mhs::oracle {

namespace {

void require_enumerable(std::uint64_t p, int n) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::CompositeModulus, "oracle: " + std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw Error(ErrorKind::RangeError, "oracle: n must be positive");
    }
    const std::uint64_t count = tuple_count(p - 1, static_cast<std::uint64_t>(n));
    if (count > kEnumerationBudget) {
        throw Error(ErrorKind::BudgetExceeded, "oracle: C(" + std::to_string(p - 1) + ", " +
                                                   std::to_string(n) + ") tuples exceed budget");
    }
}

// Calls visit(i_1, i_1 * ... * i_n) for every increasing n-tuple in [1, p-1].
template <typename Visit>
void enumerate_tuples(std::uint64_t p, int n, Visit&& visit) {
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(n));
    std::vector<mpz_class> prefix(static_cast<std::size_t>(n) + 1);
    prefix[0] = 1;

    auto rec = [&](auto&& self, int depth, std::uint64_t lo) -> void {
        if (depth == n) {
            visit(idx[0], prefix[static_cast<std::size_t>(n)]);
            return;
        }
        // leave room for the remaining n - depth - 1 indices
        const std::uint64_t hi = p - 1 - static_cast<std::uint64_t>(n - depth - 1);
        for (std::uint64_t i = lo; i <= hi; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            prefix[static_cast<std::size_t>(depth) + 1] =
                prefix[static_cast<std::size_t>(depth)] * static_cast<unsigned long>(i);
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
}

} // namespace

ExactSum ExactSum::from(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return ExactSum{c.get_num(), c.get_den()};
}

mpq_class ExactSum::value() const {
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::uint64_t tuple_count(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i; // exact: c * (n-k+i) is i * C(n-k+i, i)
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(c);
}

ExactSum exact_nested_sum(std::uint64_t p, int n, const FirstIndexWeight& weight) {
    require_enumerable(p, n);
    mpq_class total = 0;
    enumerate_tuples(p, n, [&](std::uint64_t first, const mpz_class& product) {
        const std::int64_t w = weight(first);
        if (w == 0) return;
        total += mpq_class(mpz_class(static_cast<long>(w)), product);
    });
    return ExactSum::from(total);
}

std::vector<ExactSum> exact_poly_fn(std::uint64_t p, int n) {
    require_enumerable(p, n);
    std::vector<mpq_class> acc(p, mpq_class(0));
    enumerate_tuples(p, n, [&](std::uint64_t first, const mpz_class& product) {
        acc[first] += mpq_class(mpz_class(1), product);
    });
    std::vector<ExactSum> out;
    out.reserve(p);
    for (const auto& q : acc) out.push_back(ExactSum::from(q));
    return out;
}

Residue reduce_mod(const ExactSum& s, const Prime& ctx) {
    const unsigned long p = ctx.modulus();
    const unsigned long den = mpz_fdiv_ui(s.denominator.get_mpz_t(), p);
    if (den == 0) {
        throw Error(ErrorKind::DenominatorDivisible,
                    "reduce_mod: denominator divisible by " + std::to_string(p));
    }
    const unsigned long num = mpz_fdiv_ui(s.numerator.get_mpz_t(), p);
    return ctx.mul(Residue{static_cast<std::uint32_t>(num)}, ctx.inv(den));
}

ExactSum exact_harmonic(std::uint64_t n) {
    mpq_class total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        total += mpq_class(mpz_class(1), mpz_class(static_cast<unsigned long>(k)));
    }
    return ExactSum::from(total);
}

} // namespace mhs::oracle
