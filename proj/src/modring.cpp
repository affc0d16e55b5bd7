#include "mhs/modring.hpp"

#include "mhs/error.hpp"

#include <array>
#include <string>

namespace mhs {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DenominatorDivisible: return "DenominatorDivisible";
    case ErrorKind::UnknownCheckId: return "UnknownCheckId";
    case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    // These twelve bases are a proven witness set for n < 3.3e24.
    static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : kBases) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) {
    if (p < 3) {
        throw Error(ErrorKind::TooSmall, "modulus " + std::to_string(p) + " is below 3");
    }
    if (p > kMaxModulus) {
        throw Error(ErrorKind::RangeError, "modulus " + std::to_string(p) + " does not fit in 32 bits");
    }
    if (!is_prime(p)) {
        throw Error(ErrorKind::CompositeModulus, "modulus " + std::to_string(p) + " is not prime");
    }
    p_ = static_cast<std::uint32_t>(p);
    inv_.assign(p_, 0);
    inv_[1] = 1;
    // p = (p/k)k + (p mod k)  =>  k^-1 = -(p/k) (p mod k)^-1
    for (std::uint64_t k = 2; k < p_; ++k) {
        std::uint64_t t = std::uint64_t{p_ / k} * inv_[p_ % k] % p_;
        inv_[k] = static_cast<std::uint32_t>(t == 0 ? 0 : p_ - t);
    }
}

Residue Prime::inv(std::uint64_t k) const {
    std::uint64_t r = k % p_;
    if (r == 0) {
        throw Error(ErrorKind::ZeroDivisor,
                    std::to_string(k) + " is not invertible mod " + std::to_string(p_));
    }
    return Residue{inv_[r]};
}

Residue Prime::reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Residue{static_cast<std::uint32_t>(r)};
}

Residue Prime::pow(Residue base, std::uint64_t exponent) const noexcept {
    return Residue{static_cast<std::uint32_t>(powmod64(base.value, exponent, p_))};
}

ResidueSq Prime::reduce_sq(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(modulus_sq());
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return ResidueSq{static_cast<std::uint64_t>(r)};
}

ResidueSq Prime::add_sq(ResidueSq x, ResidueSq y) const noexcept {
    const std::uint64_t m = modulus_sq();
    const std::uint64_t gap = m - y.value;
    return ResidueSq{x.value >= gap ? x.value - gap : x.value + y.value};
}

ResidueSq Prime::mul_sq(ResidueSq x, ResidueSq y) const noexcept {
    return ResidueSq{mulmod64(x.value, y.value, modulus_sq())};
}

Residue fermat_inverse(Residue x, const Prime& ctx) {
    if (x.value % ctx.modulus() == 0) {
        throw Error(ErrorKind::ZeroDivisor, "0 has no inverse");
    }
    return ctx.pow(x, ctx.modulus() - 2);
}

std::vector<Residue> batch_invert(std::span<const Residue> values, const Prime& ctx) {
    const std::size_t n = values.size();
    std::vector<Residue> out(n);
    if (n == 0) return out;

    // out[i] temporarily holds values[0] * ... * values[i]
    Residue acc{1};
    for (std::size_t i = 0; i < n; ++i) {
        Residue v = ctx.reduce_unsigned(values[i].value);
        if (v.value == 0) {
            throw Error(ErrorKind::ZeroDivisor,
                        "batch_invert: entry " + std::to_string(i) + " is 0 mod " +
                            std::to_string(ctx.modulus()));
        }
        acc = i == 0 ? v : ctx.mul(acc, v);
        out[i] = acc;
    }

    Residue inv_acc = fermat_inverse(acc, ctx);
    for (std::size_t i = n - 1; i > 0; --i) {
        Residue v = ctx.reduce_unsigned(values[i].value);
        out[i] = ctx.mul(inv_acc, out[i - 1]);
        inv_acc = ctx.mul(inv_acc, v);
    }
    out[0] = inv_acc;
    return out;
}

ResidueSq inv_sq(ResidueSq k, const Prime& ctx) {
    const std::uint64_t m = ctx.modulus_sq();
    const std::uint64_t kk = k.value % m;
    Residue x0 = ctx.inv(kk); // throws ZeroDivisor when p | k
    // x1 = x0 (2 - k x0) mod p^2
    std::uint64_t kx = mulmod64(kk, x0.value, m);
    std::uint64_t two_minus = (2 + m - kx) % m;
    return ResidueSq{mulmod64(x0.value, two_minus, m)};
}

OmegaElem omega_add(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept {
    return {ctx.add(x.a, y.a), ctx.add(x.b, y.b)};
}

OmegaElem omega_sub(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept {
    return {ctx.sub(x.a, y.a), ctx.sub(x.b, y.b)};
}

OmegaElem omega_neg(OmegaElem x, const Prime& ctx) noexcept {
    return {ctx.neg(x.a), ctx.neg(x.b)};
}

OmegaElem omega_mul(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept {
    // omega^2 = -1 - omega
    const Residue bb = ctx.mul(x.b, y.b);
    return {ctx.sub(ctx.mul(x.a, y.a), bb),
            ctx.sub(ctx.add(ctx.mul(x.a, y.b), ctx.mul(y.a, x.b)), bb)};
}

} // namespace mhs
