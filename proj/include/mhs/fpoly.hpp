#ifndef MHS_FPOLY_HPP
#define MHS_FPOLY_HPP

#include "mhs/mhs_engine.hpp"
#include "mhs/modring.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mhs {

// Dense polynomial over Z/p, coeffs[i] is the coefficient of x^i. Trailing
// zeros are allowed and only ignored when comparing.
struct FpPoly {
    std::uint32_t p = 0;
    std::vector<Residue> coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    Residue coeff(std::size_t i) const noexcept {
        return i < coeffs.size() ? coeffs[i] : Residue{0};
    }
    // Index of the highest nonzero coefficient + 1.
    std::size_t trimmed_size() const noexcept;
};

bool operator==(const FpPoly& f, const FpPoly& g) noexcept;

// First index where f and g differ, treating missing coefficients as 0.
std::optional<std::size_t> first_difference(const FpPoly& f, const FpPoly& g) noexcept;

// F_n(x) = sum over 0 < i_1 < ... < i_n < p of x^{i_1} / (i_1 ... i_n): the
// coefficient of x^m is m^-1 G[n-1][m]. Always p slots.
FpPoly build_fn(const MhsTables& tables, int n);

FpPoly formal_derivative(const FpPoly& f, const Prime& ctx);

// g(x) = f(1 - x) through g_k = (-1)^k sum_{i >= k} f_i C(i, k), one Pascal
// row at a time. O(deg^2) time, O(deg) memory. Requires deg f <= p-1.
FpPoly subst_one_minus_x(const FpPoly& f, const Prime& ctx);

Residue eval(const FpPoly& f, Residue a, const Prime& ctx) noexcept;
OmegaElem eval(const FpPoly& f, OmegaElem a, const Prime& ctx) noexcept;

// (1 - x^p - (1 - x)^p) / p reduced mod p, coefficientwise
// (-1)^{i-1} C(p-1, i-1) / i.
FpPoly f1_closed_form(const Prime& ctx);

FpPoly scale(const FpPoly& f, Residue c, const Prime& ctx);
FpPoly add(const FpPoly& f, const FpPoly& g, const Prime& ctx);
FpPoly sub(const FpPoly& f, const FpPoly& g, const Prime& ctx);
FpPoly mul(const FpPoly& f, const FpPoly& g, const Prime& ctx);

// Recovers the unique polynomial of degree <= p-1 taking values[a] at each
// a in Z/p, using the power sums of Z/p. O(p^2).
FpPoly interpolate_all_points(const std::vector<Residue>& values, const Prime& ctx);

} // namespace mhs

#endif
