#ifndef MHS_GALLERY_HPP
#define MHS_GALLERY_HPP

// Classical harmonic and binomial congruences, two of them modulo p^2.

#include "mhs/check_result.hpp"
#include "mhs/modring.hpp"

#include <cstdint>

namespace mhs {

inline constexpr std::uint64_t kSunTaurasoBudget = 100'000;

// sum_{k=1}^{p-1} k^-1 mod p^2.
ResidueSq harmonic_sum_mod_sq(const Prime& ctx);

// sum_{k=0}^{N-1} C(2k, k) mod p^2 with N = p^a. The binomials are carried
// exactly; only the running sum is reduced. Throws BudgetExceeded when
// p^a > kSunTaurasoBudget.
ResidueSq central_binomial_sum_mod_sq(const Prime& ctx, unsigned a);

// Harmonic sum vanishes mod p^2 for p > 3. Throws HypothesisUnmet.
CheckResult check_wolstenholme(const Prime& ctx);

// sum_{0<k<p/2} 3^k/k = sum_{0<k<p/6} (-1)^k/k mod p for p > 3.
CheckResult check_sun_halves(const Prime& ctx);

// sum_{k<p^a} C(2k, k) = (p^a / 3) mod p^2. Reports a in the n field.
CheckResult check_sun_tauraso(const Prime& ctx, unsigned a);

} // namespace mhs

#endif
