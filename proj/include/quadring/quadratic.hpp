#pragma once

/**
 * @file quadratic.hpp
 * @brief Powers of a generator x with x^2 = t*x - d, over any commutative ring.
 *
 * Everything here revolves around one coefficient sequence
 *
 *     P_0 = 0,  P_1 = 1,  P_{m+1} = t*P_m - d*P_{m-1}
 *
 * (the Lucas sequence of the first kind in the parameters t, d), because
 *
 *     x^m = P_m(t,d) * x - d * P_{m-1}(t,d)
 *
 * for every m >= 1. Three independent engines compute P_m:
 *
 *   iterative  m-1 recurrence steps; the reference every other engine is
 *              tested against
 *   binomial   the closed sum  sum_i C(m-1-i, i) t^(m-1-2i) (-d)^i,
 *              coefficients built incrementally in exact integers and
 *              embedded into the target ring
 *   doubling   O(log m) index doubling over (U_k, U_{k+1}, d^k) state,
 *              using the companion sequence V_k = 2 U_{k+1} - t U_k
 *
 * Parameter correspondence (the sign that is easiest to get wrong):
 *
 *   relation            x^2 - t*x + d = 0
 *   classical           U_m(P, Q) with P = t, Q = d
 *   Fibonacci           (t, d) = (1, -1):  P_m = F_m, companion V_m = L_m
 *   index sequence      (t, d) = (2, 1):   P_m = m
 *
 * Negative exponents are not supported; they would require d to be
 * invertible, which the ring contract does not provide.
 */

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quadring/bipoly.hpp"
#include "quadring/ring.hpp"

namespace quadring {

enum class Engine { iterative, binomial, doubling };

std::string engine_name(Engine e);
Engine parse_engine(std::string_view name);  // throws std::invalid_argument

/// The pair (t, d) of the defining relation x^2 - t*x + d = 0.
template <Ring R>
struct QuadParams {
    R t;
    R d;
};

/// a*x + b, the reduced form of a power of x.
template <Ring R>
struct LinearForm {
    R a;
    R b;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Doubling-engine state at index m: u = P_m, v = companion V_m
/// (V_0 = 2, V_1 = t, same recurrence), dpow = d^m. Satisfies
/// v^2 - (t^2 - 4d) u^2 = 4 d^m.
template <Ring R>
struct CompanionPair {
    R u;
    R v;
    R dpow;
};

namespace detail {

// (U_k, U_{k+1}, d^k); the doubling engine walks the bits of m over this.
template <Ring R>
struct UState {
    R u;
    R u_next;
    R dpow;
};

// k -> 2k. Uses U_{2k} = U_k V_k and U_{2k+1} = U_{k+1} V_k - d^k with
// V_k = 2 U_{k+1} - t U_k. 4 multiplications.
template <Ring R>
UState<R> double_index(const UState<R>& s, const QuadParams<R>& p) {
    const R v = s.u_next + s.u_next - p.t * s.u;
    return {s.u * v, s.u_next * v - s.dpow, s.dpow * s.dpow};
}

// k -> k+1 by one recurrence advance. 3 multiplications.
template <Ring R>
UState<R> advance_index(const UState<R>& s, const QuadParams<R>& p) {
    return {s.u_next, p.t * s.u_next - p.d * s.u, s.dpow * p.d};
}

// Walks the bits of m from the most significant one down. At most
// 7 * (bit_width(m) - 1) multiplications, so well under 10*log2(m+2);
// d^k is squared along, never recomputed.
template <Ring R>
UState<R> u_state(const QuadParams<R>& p, std::uint64_t m) {
    const R zr = zero(p.t);
    const R un = one(p.t);
    if (m == 0) return {zr, un, un};
    UState<R> s{un, p.t, p.d};  // k = 1
    for (int i = std::bit_width(m) - 2; i >= 0; --i) {
        s = double_index(s, p);
        if ((m >> i) & 1u) s = advance_index(s, p);
    }
    return s;
}

}  // namespace detail

/// P_m by m-1 recurrence steps. The reference oracle for the other engines.
template <Ring R>
R lucas_u_iterative(const QuadParams<R>& p, std::uint64_t m) {
    R prev = zero(p.t);  // P_0
    if (m == 0) return prev;
    R cur = one(p.t);  // P_1
    for (std::uint64_t k = 1; k < m; ++k) {
        R next = p.t * cur - p.d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// P_m by the closed binomial sum, m >= 1. The sum is evaluated
/// Horner-style in t^2 with a running (-d)^i, and the binomial
/// coefficients advance along the diagonal by the exact-division step
///   C(a-1, b+1) = C(a, b) * (a-b) * (a-b-1) / (a * (b+1)).
template <Ring R>
R lucas_u_binomial(const QuadParams<R>& p, std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument(
            "binomial engine requires m >= 1; P_0 = 0 is served by the iterative engine");
    if (m == 1) return one(p.t);

    const std::uint64_t half = (m - 1) / 2;
    const R t_sq = p.t * p.t;
    const R minus_d = -p.d;

    R acc = one(p.t);       // i = 0 term has coefficient C(m-1, 0) = 1
    R d_pow = one(p.t);     // (-d)^i
    BigInt coeff(1);
    for (std::uint64_t i = 1; i <= half; ++i) {
        const std::uint64_t a = m - i, b = i - 1;  // previous indices in C(a, b)
        coeff = BigInt::divexact(coeff * BigInt(mpz_class(a - b)) * BigInt(mpz_class(a - b - 1)),
                                 BigInt(mpz_class(a)) * BigInt(mpz_class(b + 1)));
        d_pow = d_pow * minus_d;
        acc = acc * t_sq + from_integer(coeff, p.t) * d_pow;
    }
    if (((m - 1) & 1u) != 0) acc = acc * p.t;  // odd remaining exponent of t
    return acc;
}

/// P_m in O(log m) ring multiplications.
template <Ring R>
R lucas_u_doubling(const QuadParams<R>& p, std::uint64_t m) {
    return detail::u_state(p, m).u;
}

template <Ring R>
R lucas_u(const QuadParams<R>& p, std::uint64_t m, Engine engine) {
    switch (engine) {
        case Engine::iterative: return lucas_u_iterative(p, m);
        case Engine::binomial: return lucas_u_binomial(p, m);
        case Engine::doubling: return lucas_u_doubling(p, m);
    }
    throw std::logic_error("unreachable engine");
}

/// (P_m, V_m, d^m) by the doubling walk.
template <Ring R>
CompanionPair<R> companion_pair(const QuadParams<R>& p, std::uint64_t m) {
    auto s = detail::u_state(p, m);
    return {s.u, s.u_next + s.u_next - p.t * s.u, s.dpow};
}

/// The reduced form of x^m: (P_m, -d * P_{m-1}) for m >= 1, and (0, 1)
/// for m = 0 by the empty-product convention. The binomial engine keeps
/// its m >= 1 restriction and rejects m = 0.
template <Ring R>
LinearForm<R> x_power(const QuadParams<R>& p, std::uint64_t m, Engine engine = Engine::doubling) {
    if (m == 0) {
        if (engine == Engine::binomial)
            throw std::invalid_argument(
                "binomial engine requires m >= 1; P_0 = 0 is served by the iterative engine");
        return {zero(p.t), one(p.t)};
    }
    R pm = zero(p.t), pm_prev = zero(p.t);
    switch (engine) {
        case Engine::iterative: {
            R prev = zero(p.t);
            R cur = one(p.t);
            for (std::uint64_t k = 1; k < m; ++k) {
                R next = p.t * cur - p.d * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            pm = std::move(cur);
            pm_prev = std::move(prev);
            break;
        }
        case Engine::binomial:
            pm = lucas_u_binomial(p, m);
            pm_prev = m == 1 ? zero(p.t) : lucas_u_binomial(p, m - 1);
            break;
        case Engine::doubling: {
            auto s = detail::u_state(p, m - 1);  // (P_{m-1}, P_m, ...)
            pm = std::move(s.u_next);
            pm_prev = std::move(s.u);
            break;
        }
    }
    return {std::move(pm), -(p.d * pm_prev)};
}

/// The coefficient pair (a_m, b_m) of x^m = a_m x + b_m computed purely by
/// the two-term stepping a' = t a + b, b' = -d a from (a_1, b_1) = (1, 0).
/// Exists as an independent oracle for x_power; m >= 1.
template <Ring R>
LinearForm<R> x_power_by_stepping(const QuadParams<R>& p, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("stepping form is defined for m >= 1");
    R a = one(p.t);
    R b = zero(p.t);
    for (std::uint64_t k = 1; k < m; ++k) {
        R next_a = p.t * a + b;
        b = -(p.d * a);
        a = std::move(next_a);
    }
    return {std::move(a), std::move(b)};
}

/// The universal polynomial P_m(T, D): the recurrence run over the
/// bivariate integer polynomial ring with t = T, d = D.
BiPoly lucas_u_symbolic(std::uint64_t m);

}  // namespace quadring
