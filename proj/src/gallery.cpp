#include "mhs/gallery.hpp"

#include "mhs/error.hpp"
#include "mhs/verifiers.hpp"

#include <gmpxx.h>

#include <string>

namespace mhs {

namespace {

void require_above_three(const Prime& ctx, std::string_view id) {
    if (ctx.modulus() <= 3) {
        throw Error(ErrorKind::HypothesisUnmet, std::string(id) + " needs p > 3");
    }
}

std::uint64_t checked_power(std::uint64_t p, unsigned a) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < a; ++i) {
        if (n > kSunTaurasoBudget / p) {
            throw Error(ErrorKind::BudgetExceeded, "p^a exceeds " + std::to_string(kSunTaurasoBudget));
        }
        n *= p;
    }
    return n;
}

} // namespace

ResidueSq harmonic_sum_mod_sq(const Prime& ctx) {
    ResidueSq acc{0};
    for (std::uint64_t k = 1; k < ctx.modulus(); ++k) {
        acc = ctx.add_sq(acc, inv_sq(ResidueSq{k}, ctx));
    }
    return acc;
}

ResidueSq central_binomial_sum_mod_sq(const Prime& ctx, unsigned a) {
    if (a == 0) throw Error(ErrorKind::RangeError, "central_binomial_sum_mod_sq: a must be positive");
    const std::uint64_t terms = checked_power(ctx.modulus(), a);
    const unsigned long m = static_cast<unsigned long>(ctx.modulus_sq());

    mpz_class binom = 1; // C(2k, k)
    unsigned long sum = 0;
    for (std::uint64_t k = 0; k < terms; ++k) {
        sum = (sum + mpz_fdiv_ui(binom.get_mpz_t(), m)) % m;
        // C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)
        binom *= static_cast<unsigned long>(2 * (2 * k + 1));
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return ResidueSq{sum};
}

CheckResult check_wolstenholme(const Prime& ctx) {
    require_above_three(ctx, check_id::kGalleryA);
    const ResidueSq s = harmonic_sum_mod_sq(ctx);
    if (s.value != 0) return CheckResult::fail(check_id::kGalleryA, ctx.modulus(), 0, s.value, "harmonic sum mod p^2");
    return CheckResult::pass(check_id::kGalleryA, ctx.modulus(), 0);
}

CheckResult check_sun_halves(const Prime& ctx) {
    require_above_three(ctx, check_id::kGalleryB);
    const std::uint32_t p = ctx.modulus();
    Residue lhs{0};
    Residue three_pow{1};
    for (std::uint64_t k = 1; 2 * k < p; ++k) {
        three_pow = ctx.mul(three_pow, Residue{3});
        lhs = ctx.add(lhs, ctx.mul(three_pow, ctx.inv(k)));
    }
    Residue rhs{0};
    for (std::uint64_t k = 1; 6 * k < p; ++k) {
        const Residue term = ctx.inv(k);
        rhs = (k % 2 == 0) ? ctx.add(rhs, term) : ctx.sub(rhs, term);
    }
    if (lhs != rhs) {
        return CheckResult::fail(check_id::kGalleryB, p, 0, ctx.sub(lhs, rhs).value, "lhs - rhs");
    }
    return CheckResult::pass(check_id::kGalleryB, p, 0);
}

CheckResult check_sun_tauraso(const Prime& ctx, unsigned a) {
    const ResidueSq sum = central_binomial_sum_mod_sq(ctx, a);
    int symbol = 1;
    for (unsigned i = 0; i < a; ++i) symbol *= chi3(ctx.modulus());
    const ResidueSq target = ctx.reduce_sq(symbol);
    const int n = static_cast<int>(a);
    if (sum != target) return CheckResult::fail(check_id::kGalleryD, ctx.modulus(), n, sum.value, "central binomial sum mod p^2");
    return CheckResult::pass(check_id::kGalleryD, ctx.modulus(), n);
}

} // namespace mhs
