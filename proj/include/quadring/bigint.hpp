#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integer, the default coefficient ring.
 *
 * Thin value wrapper around GMP's mpz_class: exact arithmetic at any
 * magnitude, canonical decimal rendering. Ring access goes through the
 * ADL functions zero/one/from_integer/to_text so generic code never
 * names the concrete type.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace quadring {

class BigInt {
public:
    BigInt() : v_(0) {}
    explicit BigInt(long v) : v_(v) {}
    explicit BigInt(unsigned long v) : v_(v) {}
    explicit BigInt(int v) : v_(v) {}
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string. Accepts ASCII '-' and
    /// U+2212 as the sign. Throws std::invalid_argument on anything else.
    static BigInt from_decimal(std::string_view text);

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }

    std::string to_decimal() const { return v_.get_str(); }

    /// Nonnegative remainder of *this modulo a machine-word modulus.
    std::uint64_t mod_u64(std::uint64_t modulus) const;

    static BigInt pow(const BigInt& base, unsigned long exponent) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exponent);
        return BigInt(std::move(r));
    }
    static BigInt gcd(const BigInt& a, const BigInt& b) {
        mpz_class r;
        mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return BigInt(std::move(r));
    }
    /// Quotient a / b when b divides a exactly; anything else is undefined.
    static BigInt divexact(const BigInt& a, const BigInt& b) {
        mpz_class r;
        mpz_divexact(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return BigInt(std::move(r));
    }
    static BigInt binomial(unsigned long n, unsigned long k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return BigInt(std::move(r));
    }

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

private:
    mpz_class v_;
};

inline BigInt zero(const BigInt&) { return BigInt(); }
inline BigInt one(const BigInt&) { return BigInt(1); }
inline BigInt from_integer(const BigInt& n, const BigInt&) { return n; }
inline std::string to_text(const BigInt& a) { return a.to_decimal(); }

}  // namespace quadring
