#include "mhs/fpoly.hpp"

#include "mhs/error.hpp"

#include <algorithm>
#include <string>

namespace mhs {

std::size_t FpPoly::trimmed_size() const noexcept {
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1].value == 0) --n;
    return n;
}

bool operator==(const FpPoly& f, const FpPoly& g) noexcept {
    return f.p == g.p && !first_difference(f, g).has_value();
}

std::optional<std::size_t> first_difference(const FpPoly& f, const FpPoly& g) noexcept {
    const std::size_t n = std::max(f.size(), g.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeff(i) != g.coeff(i)) return i;
    }
    return std::nullopt;
}

FpPoly build_fn(const MhsTables& tables, int n) {
    if (n < 1 || n > tables.n_max()) {
        throw Error(ErrorKind::RangeError, "build_fn: n = " + std::to_string(n) +
                                               " outside 1.." + std::to_string(tables.n_max()));
    }
    const Prime& ctx = tables.ctx();
    const std::uint32_t p = ctx.modulus();
    const auto inv = ctx.inverse_table();
    const auto below = tables.row(n - 1);

    FpPoly f{p, std::vector<Residue>(p)};
    for (std::uint32_t m = 1; m < p; ++m) {
        f.coeffs[m] = ctx.mul(Residue{inv[m]}, Residue{below[m]});
    }
    return f;
}

FpPoly formal_derivative(const FpPoly& f, const Prime& ctx) {
    FpPoly d{ctx.modulus(), {}};
    if (f.size() <= 1) return d;
    d.coeffs.resize(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
        d.coeffs[i - 1] = ctx.mul(ctx.reduce_unsigned(i), f.coeffs[i]);
    }
    return d;
}

FpPoly subst_one_minus_x(const FpPoly& f, const Prime& ctx) {
    const std::size_t len = f.trimmed_size();
    if (len > ctx.modulus()) {
        throw Error(ErrorKind::RangeError, "subst_one_minus_x: degree exceeds p-1");
    }
    FpPoly g{ctx.modulus(), std::vector<Residue>(std::max<std::size_t>(f.size(), 1))};
    if (len == 0) return g;

    std::vector<Residue> pascal(len); // pascal[k] = C(i, k) mod p for the current i
    pascal[0] = Residue{1};
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) {
            for (std::size_t k = i; k >= 1; --k) {
                pascal[k] = ctx.add(pascal[k], pascal[k - 1]);
            }
        }
        const Residue fi = f.coeffs[i];
        if (fi.value == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) {
            g.coeffs[k] = ctx.add(g.coeffs[k], ctx.mul(fi, pascal[k]));
        }
    }
    for (std::size_t k = 1; k < len; k += 2) {
        g.coeffs[k] = ctx.neg(g.coeffs[k]);
    }
    return g;
}

Residue eval(const FpPoly& f, Residue a, const Prime& ctx) noexcept {
    Residue acc{0};
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = ctx.add(ctx.mul(acc, a), f.coeffs[i]);
    }
    return acc;
}

OmegaElem eval(const FpPoly& f, OmegaElem a, const Prime& ctx) noexcept {
    OmegaElem acc = OmegaElem::zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = omega_mul(acc, a, ctx);
        acc.a = ctx.add(acc.a, f.coeffs[i]);
    }
    return acc;
}

FpPoly f1_closed_form(const Prime& ctx) {
    const std::uint32_t p = ctx.modulus();
    const auto inv = ctx.inverse_table();
    FpPoly f{p, std::vector<Residue>(p)};
    Residue binom{1}; // C(p-1, i-1)
    for (std::uint32_t i = 1; i < p; ++i) {
        if (i > 1) {
            // C(p-1, j) = C(p-1, j-1) (p - j) / j with j = i-1
            const std::uint32_t j = i - 1;
            binom = ctx.mul(ctx.mul(binom, Residue{p - j}), Residue{inv[j]});
        }
        Residue c = ctx.mul(binom, Residue{inv[i]});
        f.coeffs[i] = (i % 2 == 1) ? c : ctx.neg(c);
    }
    return f;
}

FpPoly scale(const FpPoly& f, Residue c, const Prime& ctx) {
    FpPoly out{ctx.modulus(), f.coeffs};
    for (auto& x : out.coeffs) x = ctx.mul(x, c);
    return out;
}

FpPoly add(const FpPoly& f, const FpPoly& g, const Prime& ctx) {
    FpPoly out{ctx.modulus(), std::vector<Residue>(std::max(f.size(), g.size()))};
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] = ctx.add(f.coeff(i), g.coeff(i));
    return out;
}

FpPoly sub(const FpPoly& f, const FpPoly& g, const Prime& ctx) {
    FpPoly out{ctx.modulus(), std::vector<Residue>(std::max(f.size(), g.size()))};
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] = ctx.sub(f.coeff(i), g.coeff(i));
    return out;
}

FpPoly mul(const FpPoly& f, const FpPoly& g, const Prime& ctx) {
    FpPoly out{ctx.modulus(), {}};
    if (f.size() == 0 || g.size() == 0) return out;
    out.coeffs.resize(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.coeffs[i].value == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            out.coeffs[i + j] = ctx.add(out.coeffs[i + j], ctx.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

FpPoly interpolate_all_points(const std::vector<Residue>& values, const Prime& ctx) {
    const std::uint32_t p = ctx.modulus();
    if (values.size() != p) {
        throw Error(ErrorKind::RangeError, "interpolate_all_points: need exactly p values");
    }
    // sum_a a^j over Z/p is -1 when j > 0 and (p-1) | j, else 0 (with 0^0 = 1). So
    //   c_0     = v(0)
    //   c_k     = -sum_{a != 0} v(a) a^{-k}   for 1 <= k <= p-2
    //   c_{p-1} = -sum_a v(a)
    FpPoly c{p, std::vector<Residue>(p)};
    const auto inv = ctx.inverse_table();
    c.coeffs[0] = values[0];
    Residue total = values[0];
    for (std::uint32_t a = 1; a < p; ++a) {
        const Residue va = values[a];
        total = ctx.add(total, va);
        if (va.value == 0) continue;
        Residue term = va;
        for (std::uint32_t k = 1; k + 1 < p; ++k) {
            term = ctx.mul(term, Residue{inv[a]});
            c.coeffs[k] = ctx.sub(c.coeffs[k], term);
        }
    }
    c.coeffs[p - 1] = ctx.add(c.coeffs[p - 1], ctx.neg(total));
    return c;
}

} // namespace mhs
