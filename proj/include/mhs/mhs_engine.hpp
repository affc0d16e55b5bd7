#ifndef MHS_MHS_ENGINE_HPP
#define MHS_MHS_ENGINE_HPP

#include "mhs/modring.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mhs {

class MhsTables;

// O(n_max * p). Requires 1 <= n_max <= p-2; allow_edge relaxes the upper
// bound to p-1 so the Wilson boundary case can be inspected. Throws RangeError.
MhsTables build_tables(const Prime& ctx, int n_max, bool allow_edge = false);

// Suffix multiple-harmonic-sum tables over Z/p:
//
//   G[j][m] = sum over m < i_1 < ... < i_j < p of 1/(i_1 ... i_j)
//
// with G[0][m] = 1. Row j is filled right to left from row j-1 via
// G[j][m] = G[j][m+1] + (m+1)^-1 G[j-1][m+1].
class MhsTables {
public:
    const Prime& ctx() const noexcept { return ctx_; }
    int n_max() const noexcept { return n_max_; }

    Residue at(int j, std::uint32_t m) const noexcept {
        return Residue{cells_[static_cast<std::size_t>(j) * ctx_.modulus() + m]};
    }
    std::span<const std::uint32_t> row(int j) const noexcept {
        return {cells_.data() + static_cast<std::size_t>(j) * ctx_.modulus(), ctx_.modulus()};
    }

private:
    MhsTables(const Prime& ctx, int n_max);
    friend MhsTables build_tables(const Prime& ctx, int n_max, bool allow_edge);

    Prime ctx_;
    int n_max_;
    std::vector<std::uint32_t> cells_; // row-major, (n_max + 1) x p
};

// G[n][0], the complete n-fold sum.
Residue full_mhs(const MhsTables& tables, int n);

// Complete n-fold sum split by the class of the first index mod 6.
struct ClassSums {
    std::uint32_t p = 0;
    int n = 0;
    std::array<Residue, 6> S{};
};

ClassSums class_sums(const MhsTables& tables, int n);

// Integer weight on the first index; reduced mod p by the fast path and
// used exactly by the oracle.
using FirstIndexWeight = std::function<std::int64_t(std::uint64_t)>;

// sum over 0 < i_1 < p of w(i_1) i_1^-1 G[n-1][i_1].
Residue weighted_first_index_sum(const MhsTables& tables, int n, const FirstIndexWeight& weight);

// e_0..e_k of {1^-1, ..., (p-1)^-1}, accumulated left to right by expanding
// prod (1 + y/i). Independent of the suffix tables.
std::vector<Residue> elementary_symmetric_of_inverses(const Prime& ctx, int k);

namespace weights {

inline std::int64_t one(std::uint64_t) { return 1; }
inline std::int64_t alternating(std::uint64_t i) { return (i & 1) ? -1 : 1; }
// (i/3) (-1)^i
inline std::int64_t chi3_alternating(std::uint64_t i) {
    return chi3(static_cast<std::int64_t>(i % 3)) * alternating(i);
}
// (-1)^i [3 | i]
inline std::int64_t alternating_multiple_of_3(std::uint64_t i) {
    return (i % 3 == 0) ? alternating(i) : 0;
}
inline FirstIndexWeight residue_class_mod6(std::uint64_t r) {
    return [r](std::uint64_t i) -> std::int64_t { return i % 6 == r % 6 ? 1 : 0; };
}

} // namespace weights

} // namespace mhs

#endif
