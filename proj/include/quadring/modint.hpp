#pragma once

/// Residue ring Z/nZ with a runtime modulus, 2 <= n < 2^64.
/// Mixing values from different moduli throws.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "quadring/bigint.hpp"

namespace quadring {

class ModInt {
public:
    ModInt(std::uint64_t residue, std::uint64_t modulus) : n_(modulus) {
        if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
        r_ = residue % modulus;
    }

    static ModInt reduce(const BigInt& value, std::uint64_t modulus) {
        if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
        return ModInt(value.mod_u64(modulus), modulus);
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return n_; }

    friend ModInt operator+(const ModInt& a, const ModInt& b) {
        a.require_same(b);
        // overflow-safe: r_ < n_ on both sides
        std::uint64_t gap = a.n_ - b.r_;
        return ModInt(a.r_ >= gap ? a.r_ - gap : a.r_ + b.r_, a.n_, unchecked{});
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) {
        a.require_same(b);
        return ModInt(a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + (a.n_ - b.r_), a.n_, unchecked{});
    }
    friend ModInt operator-(const ModInt& a) {
        return ModInt(a.r_ == 0 ? 0 : a.n_ - a.r_, a.n_, unchecked{});
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) {
        a.require_same(b);
        using u128 = unsigned __int128;
        return ModInt(static_cast<std::uint64_t>(u128(a.r_) * u128(b.r_) % u128(a.n_)), a.n_,
                      unchecked{});
    }

    friend bool operator==(const ModInt& a, const ModInt& b) {
        return a.n_ == b.n_ && a.r_ == b.r_;
    }

private:
    struct unchecked {};
    ModInt(std::uint64_t r, std::uint64_t n, unchecked) : r_(r), n_(n) {}

    void require_same(const ModInt& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("modulus mismatch: " + std::to_string(n_) + " vs " +
                                        std::to_string(other.n_));
    }

    std::uint64_t r_;
    std::uint64_t n_;
};

inline ModInt zero(const ModInt& a) { return ModInt(0, a.modulus()); }
inline ModInt one(const ModInt& a) { return ModInt(1, a.modulus()); }
inline ModInt from_integer(const BigInt& n, const ModInt& a) { return ModInt::reduce(n, a.modulus()); }
inline std::string to_text(const ModInt& a) {
    return std::to_string(a.residue()) + " mod " + std::to_string(a.modulus());
}

}  // namespace quadring
