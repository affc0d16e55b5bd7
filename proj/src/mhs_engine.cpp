#include "mhs/mhs_engine.hpp"

#include "mhs/error.hpp"

#include <algorithm>
#include <string>

namespace mhs {

namespace {

void require_depth(const MhsTables& tables, int n, const char* op) {
    if (n < 1 || n > tables.n_max()) {
        throw Error(ErrorKind::RangeError, std::string(op) + ": n = " + std::to_string(n) +
                                               " outside 1.." + std::to_string(tables.n_max()));
    }
}

} // namespace

MhsTables::MhsTables(const Prime& ctx, int n_max)
    : ctx_(ctx), n_max_(n_max),
      cells_(static_cast<std::size_t>(n_max + 1) * ctx.modulus(), 0) {}

MhsTables build_tables(const Prime& ctx, int n_max, bool allow_edge) {
    const std::int64_t p = ctx.modulus();
    const std::int64_t limit = allow_edge ? p - 1 : p - 2;
    if (n_max < 1 || n_max > limit) {
        throw Error(ErrorKind::RangeError, "build_tables: n_max = " + std::to_string(n_max) +
                                               " outside 1.." + std::to_string(limit) +
                                               " for p = " + std::to_string(p));
    }

    MhsTables t(ctx, n_max);
    const std::uint32_t width = ctx.modulus();
    const auto inv = ctx.inverse_table();
    std::fill_n(t.cells_.begin(), width, 1u);

    for (int j = 1; j <= n_max; ++j) {
        const std::uint32_t* prev = t.cells_.data() + static_cast<std::size_t>(j - 1) * width;
        std::uint32_t* cur = t.cells_.data() + static_cast<std::size_t>(j) * width;
        cur[width - 1] = 0;
        for (std::uint32_t m = width - 1; m-- > 0;) {
            std::uint64_t term = std::uint64_t{inv[m + 1]} * prev[m + 1] % width;
            std::uint64_t s = cur[m + 1] + term;
            if (s >= width) s -= width;
            cur[m] = static_cast<std::uint32_t>(s);
        }
    }
    return t;
}

Residue full_mhs(const MhsTables& tables, int n) {
    require_depth(tables, n, "full_mhs");
    return tables.at(n, 0);
}

ClassSums class_sums(const MhsTables& tables, int n) {
    require_depth(tables, n, "class_sums");
    const Prime& ctx = tables.ctx();
    const std::uint32_t p = ctx.modulus();
    if (static_cast<std::int64_t>(n) > std::int64_t{p} - 2) {
        throw Error(ErrorKind::RangeError, "class_sums: n = " + std::to_string(n) +
                                               " requires p > n + 1");
    }
    const auto inv = ctx.inverse_table();
    const auto below = tables.row(n - 1);

    ClassSums out;
    out.p = p;
    out.n = n;
    for (std::uint32_t i = 1; i < p; ++i) {
        Residue& slot = out.S[i % 6];
        slot = ctx.add(slot, ctx.mul(Residue{inv[i]}, Residue{below[i]}));
    }
    return out;
}

Residue weighted_first_index_sum(const MhsTables& tables, int n, const FirstIndexWeight& weight) {
    require_depth(tables, n, "weighted_first_index_sum");
    const Prime& ctx = tables.ctx();
    const std::uint32_t p = ctx.modulus();
    const auto inv = ctx.inverse_table();
    const auto below = tables.row(n - 1);

    Residue acc{0};
    for (std::uint32_t i = 1; i < p; ++i) {
        const std::int64_t w = weight(i);
        if (w == 0) continue;
        Residue term = ctx.mul(Residue{inv[i]}, Residue{below[i]});
        acc = ctx.add(acc, ctx.mul(ctx.reduce(w), term));
    }
    return acc;
}

std::vector<Residue> elementary_symmetric_of_inverses(const Prime& ctx, int k) {
    const std::uint32_t p = ctx.modulus();
    if (k < 0 || static_cast<std::int64_t>(k) > std::int64_t{p} - 1) {
        throw Error(ErrorKind::RangeError, "elementary_symmetric_of_inverses: k out of range");
    }
    std::vector<Residue> e(static_cast<std::size_t>(k) + 1);
    e[0] = Residue{1};
    const auto inv = ctx.inverse_table();
    for (std::uint32_t i = 1; i < p; ++i) {
        const Residue r{inv[i]};
        const auto top = static_cast<std::size_t>(std::min<std::int64_t>(k, i));
        for (std::size_t d = top; d >= 1; --d) {
            e[d] = ctx.add(e[d], ctx.mul(e[d - 1], r));
        }
    }
    return e;
}

} // namespace mhs
