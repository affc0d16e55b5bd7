#ifndef MHS_MODRING_HPP
#define MHS_MODRING_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mhs {

// Element of Z/p. The modulus lives in the Prime context, never in the value.
struct Residue {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(Residue, Residue) = default;
};

// Element of Z/p^2, used by the mod p^2 congruences.
struct ResidueSq {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(ResidueSq, ResidueSq) = default;
};

// Deterministic Miller-Rabin for the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

// A certified odd prime modulus together with its table of inverses.
// Immutable after construction, so one instance can be shared by any number
// of readers.
class Prime {
public:
    // Moduli must fit in 32 bits so that residue products fit in 64 bits
    // and p^2 fits in 64 bits.
    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

    // Throws Error{TooSmall} for p < 3, Error{CompositeModulus} for
    // composite p and Error{RangeError} above kMaxModulus.
    explicit Prime(std::uint64_t p);

    std::uint32_t modulus() const noexcept { return p_; }
    std::uint64_t modulus_sq() const noexcept { return std::uint64_t{p_} * p_; }

    // inverse_table()[k] = k^-1 mod p for 1 <= k < p; entry 0 is 0 and unused.
    std::span<const std::uint32_t> inverse_table() const noexcept { return inv_; }

    // k^-1 mod p for any integer k not divisible by p. Throws ZeroDivisor.
    Residue inv(std::uint64_t k) const;
    Residue inv(Residue k) const { return inv(std::uint64_t{k.value}); }

    Residue reduce(std::int64_t v) const noexcept;
    Residue reduce_unsigned(std::uint64_t v) const noexcept {
        return Residue{static_cast<std::uint32_t>(v % p_)};
    }

    Residue add(Residue x, Residue y) const noexcept {
        std::uint64_t s = std::uint64_t{x.value} + y.value;
        if (s >= p_) s -= p_;
        return Residue{static_cast<std::uint32_t>(s)};
    }
    Residue sub(Residue x, Residue y) const noexcept {
        return x.value >= y.value
                   ? Residue{x.value - y.value}
                   : Residue{static_cast<std::uint32_t>(std::uint64_t{x.value} + p_ - y.value)};
    }
    Residue neg(Residue x) const noexcept {
        return x.value == 0 ? x : Residue{p_ - x.value};
    }
    Residue mul(Residue x, Residue y) const noexcept {
        return Residue{static_cast<std::uint32_t>(std::uint64_t{x.value} * y.value % p_)};
    }
    Residue pow(Residue base, std::uint64_t exponent) const noexcept;

    ResidueSq reduce_sq(std::int64_t v) const noexcept;
    ResidueSq add_sq(ResidueSq x, ResidueSq y) const noexcept;
    ResidueSq mul_sq(ResidueSq x, ResidueSq y) const noexcept;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
};

inline Prime make_prime(std::uint64_t p) { return Prime(p); }

// x^(p-2) mod p. Slow path, kept as an independent check on the tables.
Residue fermat_inverse(Residue x, const Prime& ctx);

// Inverts every entry with one modular inversion and 3(n-1) multiplications.
// Throws ZeroDivisor if any entry is 0 mod p.
std::vector<Residue> batch_invert(std::span<const Residue> values, const Prime& ctx);

// k^-1 mod p^2 by one Newton step from the mod p inverse. Throws ZeroDivisor
// when p | k.
ResidueSq inv_sq(ResidueSq k, const Prime& ctx);

// Legendre symbol (i/3).
constexpr int chi3(std::int64_t i) noexcept {
    switch (((i % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
    }
}

// a + b*omega in Z/p[omega]/(omega^2 + omega + 1). Kept as a formal rank-2
// extension even when p = 1 mod 3 and omega already lives in Z/p.
struct OmegaElem {
    Residue a;
    Residue b;

    static constexpr OmegaElem zero() noexcept { return {}; }
    static constexpr OmegaElem one() noexcept { return {Residue{1}, Residue{0}}; }
    static constexpr OmegaElem omega() noexcept { return {Residue{0}, Residue{1}}; }
    static constexpr OmegaElem scalar(Residue r) noexcept { return {r, Residue{0}}; }

    friend constexpr bool operator==(OmegaElem, OmegaElem) = default;
};

OmegaElem omega_add(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept;
OmegaElem omega_sub(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept;
OmegaElem omega_neg(OmegaElem x, const Prime& ctx) noexcept;
OmegaElem omega_mul(OmegaElem x, OmegaElem y, const Prime& ctx) noexcept;

} // namespace mhs

#endif
