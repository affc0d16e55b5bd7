#ifndef MHS_ORACLE_HPP
#define MHS_ORACLE_HPP

// Brute-force evaluation of the nested sums over Q with exact rationals.
// Nothing here touches the suffix tables; it is the ground truth the fast
// path is compared against at small p.

#include "mhs/mhs_engine.hpp"
#include "mhs/modring.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace mhs::oracle {

// Largest number of index tuples an enumeration may visit.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

// A rational in lowest terms with positive denominator.
struct ExactSum {
    mpz_class numerator;
    mpz_class denominator{1};

    static ExactSum from(const mpq_class& q);
    mpq_class value() const;

    friend bool operator==(const ExactSum& x, const ExactSum& y) {
        return x.numerator == y.numerator && x.denominator == y.denominator;
    }
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t tuple_count(std::uint64_t n, std::uint64_t k) noexcept;

// sum over 0 < i_1 < ... < i_n < p of w(i_1) / (i_1 ... i_n).
// Throws BudgetExceeded when C(p-1, n) > kEnumerationBudget and
// CompositeModulus when p is not prime.
ExactSum exact_nested_sum(std::uint64_t p, int n, const FirstIndexWeight& weight);

// Exact coefficients of F_n: entry m collects the tuples with i_1 = m.
// Returns p entries. Same budget rule as exact_nested_sum.
std::vector<ExactSum> exact_poly_fn(std::uint64_t p, int n);

// numerator * denominator^-1 mod p. Throws DenominatorDivisible.
Residue reduce_mod(const ExactSum& s, const Prime& ctx);

// 1 + 1/2 + ... + 1/n.
ExactSum exact_harmonic(std::uint64_t n);

} // namespace mhs::oracle

#endif
