#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers, canonical form gcd(|p|, q) = 1 with q > 0.
 *
 * Backed by GMP's mpq_class, which keeps results canonical as long as the
 * inputs are. Division exists only inside construction and is never part
 * of the ring surface.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "quadring/bigint.hpp"

namespace quadring {

class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(const BigInt& n) : v_(n.raw()) {}
    explicit Rational(long n) : v_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
        v_ = mpq_class(num.raw()) / mpq_class(den.raw());  // mpq division canonicalizes
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
    }

    BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rational zero(const Rational&) { return Rational(); }
inline Rational one(const Rational&) { return Rational(1); }
inline Rational from_integer(const BigInt& n, const Rational&) { return Rational(n); }
inline std::string to_text(const Rational& a) {
    return a.numerator().to_decimal() + "/" + a.denominator().to_decimal();
}

}  // namespace quadring
