#ifndef MHS_VERIFIERS_HPP
#define MHS_VERIFIERS_HPP

#include "mhs/check_result.hpp"
#include "mhs/fpoly.hpp"
#include "mhs/mhs_engine.hpp"
#include "mhs/modring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mhs {

namespace check_id {
inline constexpr std::string_view kEq11 = "eq1.1";
inline constexpr std::string_view kEq12 = "eq1.2";
inline constexpr std::string_view kThm11Odd = "thm1.1-odd";
inline constexpr std::string_view kThm11Even = "thm1.1-even";
inline constexpr std::string_view kThm12 = "thm1.2";
inline constexpr std::string_view kEq21 = "eq2.1";
inline constexpr std::string_view kEq25 = "eq2.5";
inline constexpr std::string_view kF1Closed = "f1-closed";
inline constexpr std::string_view kDerivIdentity = "deriv-identity";
inline constexpr std::string_view kGalleryA = "gallery-a";
inline constexpr std::string_view kGalleryB = "gallery-b";
inline constexpr std::string_view kGalleryD = "gallery-d";
// Not selectable; emitted when oracle cross-checking is enabled.
inline constexpr std::string_view kOracle = "oracle";
} // namespace check_id

// Every selectable id, in ascending order.
std::span<const std::string_view> all_check_ids() noexcept;

// How the x -> 1-x symmetry of a polynomial is decided.
enum class SymmetryMethod {
    Transform, // binomial transform, compare coefficients
    Pointwise, // compare values at all of Z/p, interpolate the defect on failure
    Auto,      // Transform, cross-checked by Pointwise when p <= kPointwiseCrossCheckMaxP
};

inline constexpr std::uint32_t kPointwiseCrossCheckMaxP = 101;

// First coefficient index where f(1-x) and sign * f(x) differ, or nullopt.
// Both methods return the same index for any f of degree <= p-1.
std::optional<std::size_t> symmetry_defect(const FpPoly& f, bool negate, SymmetryMethod method,
                                           const Prime& ctx);

// The checks below throw Error{HypothesisUnmet} when p <= n + 1 (or the
// check's own bound on p), and Error{RangeError} when n exceeds the depth of
// the tables or has the wrong parity.

// n = 3 alternating character sum vanishes.
CheckResult check_eq_1_1(const MhsTables& tables);
CheckResult check_eq_1_1(const Prime& ctx);
// Same statement as two class sums, computed through class-indicator weights.
CheckResult check_eq_1_2(const MhsTables& tables);
CheckResult check_eq_1_2(const Prime& ctx);

CheckResult check_thm_1_1_odd(const MhsTables& tables, int n);
CheckResult check_thm_1_1_even(const MhsTables& tables, int n);
CheckResult check_thm_1_2(const MhsTables& tables, int n,
                          SymmetryMethod method = SymmetryMethod::Auto);
CheckResult check_eq_2_1(const MhsTables& tables, int n);
CheckResult check_eq_2_5(const MhsTables& tables, int n);
CheckResult check_f1_closed(const MhsTables& tables);
// x(x-1) F_n'(x) = F_{n-1}(x) - x G[n-1][0], for n >= 2.
CheckResult check_deriv_identity(const MhsTables& tables, int n);
// Every fast-path quantity at depth n against exact enumeration. Throws
// BudgetExceeded when the enumeration is too large.
CheckResult check_oracle_agreement(const MhsTables& tables, int n);

struct SuiteOptions {
    // Oracle entries are added when p <= oracle_max_p (0 disables).
    std::uint32_t oracle_max_p = 0;
    // gallery-d runs every exponent a with p^a <= this bound (a = 1 always
    // when p^1 is within the enumeration budget).
    std::uint64_t sun_tauraso_max_power = 10'000;
};

// Runs the selected checks (all when selection is empty) for n = 1..n_max.
// Depths the hypothesis excludes are reported as Unmet. Output is sorted by
// (check_id, n). Throws UnknownCheckId.
std::vector<CheckResult> run_suite(const Prime& ctx, int n_max,
                                   std::span<const std::string> selection,
                                   const SuiteOptions& options = {});

// Throws UnknownCheckId for the first unrecognised id.
void validate_selection(std::span<const std::string> selection);

} // namespace mhs

#endif
