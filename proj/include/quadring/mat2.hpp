#pragma once

/**
 * @file mat2.hpp
 * @brief 2x2 matrices over any ring; naive power next to trace/determinant
 *        reduction.
 *
 * A 2x2 matrix satisfies M^2 = tr(M)*M - det(M)*I, so M^m collapses to
 * a*M + b*I with (a, b) from x_power(tr, det, m). pow_naive is the plain
 * square-and-multiply oracle kept alongside; the two must agree exactly.
 */

#include <cstdint>
#include <string>

#include "quadring/quadratic.hpp"
#include "quadring/ring.hpp"

namespace quadring {

template <Ring R>
struct Mat2 {
    R e11, e12, e21, e22;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <Ring R>
Mat2<R> mat2_identity(const R& like) {
    const R zr = zero(like);
    const R un = one(like);
    return {un, zr, zr, un};
}

template <Ring R>
R trace(const Mat2<R>& m) {
    return m.e11 + m.e22;
}

template <Ring R>
R det(const Mat2<R>& m) {
    return m.e11 * m.e22 - m.e12 * m.e21;
}

template <Ring R>
Mat2<R> operator*(const Mat2<R>& a, const Mat2<R>& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

template <Ring R>
Mat2<R> operator+(const Mat2<R>& a, const Mat2<R>& b) {
    return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

/// Scalar times matrix, entrywise.
template <Ring R>
Mat2<R> scale(const R& s, const Mat2<R>& m) {
    return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

/// M^m by square-and-multiply on matrix products; M^0 = I.
template <Ring R>
Mat2<R> pow_naive(const Mat2<R>& m, std::uint64_t exponent) {
    Mat2<R> acc = mat2_identity(m.e11);
    Mat2<R> sq = m;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * sq;
        exponent >>= 1u;
        if (exponent > 0) sq = sq * sq;
    }
    return acc;
}

/// M^m = a*M + b*I with (a, b) = x_power(tr(M), det(M), m). Engine
/// restrictions propagate (binomial rejects m = 0).
template <Ring R>
Mat2<R> pow_ch(const Mat2<R>& m, std::uint64_t exponent, Engine engine = Engine::doubling) {
    const auto [a, b] = x_power(QuadParams<R>{trace(m), det(m)}, exponent, engine);
    return {a * m.e11 + b, a * m.e12, a * m.e21, a * m.e22 + b};
}

/// Row-major "e11,e12;e21,e22" with entries in the ring's text rendering.
template <Ring R>
std::string to_text(const Mat2<R>& m) {
    return to_text(m.e11) + "," + to_text(m.e12) + ";" + to_text(m.e21) + "," + to_text(m.e22);
}

}  // namespace quadring
