#pragma once

/**
 * @file fibapp.hpp
 * @brief Fibonacci and Lucas numbers as the (t, d) = (1, -1) instance,
 *        plus the F_{nm} binomial expansion in L_n.
 *
 * The matrix [[1,1],[1,0]] has trace 1 and determinant -1, and its n-th
 * power carries (F_{n+1}, F_n; F_n, F_{n-1}) with trace L_n and
 * determinant (-1)^n. Reducing the m-th power of that matrix against its
 * own trace/determinant yields
 *
 *   F_{nm} = F_n * sum_i C(m-1-i, i) L_n^(m-1-2i) (-1)^(i(n+1))
 *
 * which fib_nm_identity evaluates exactly; fib_nm_terms exposes the
 * individual summands for the sign-structure checks.
 */

#include <cstdint>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/report.hpp"

namespace quadring {

/// Two consecutive Fibonacci numbers (F_k, F_{k+1}).
struct FibPair {
    BigInt f;
    BigInt f_next;
};

/// F_n, exact at any size; engine is the doubling walk.
BigInt fibonacci(std::uint64_t n);

/// (F_n, F_{n+1}) in one doubling walk.
FibPair fibonacci_pair(std::uint64_t n);

/// L_n via the companion sequence at (1, -1).
BigInt lucas_number(std::uint64_t n);

/// The expansion above, evaluated Horner-style in L_n^2; n, m >= 1.
/// Equals F_{nm} exactly.
BigInt fib_nm_identity(std::uint64_t n, std::uint64_t m);

/// The summands C(m-1-i, i) * L_n^(m-1-2i) * (-1)^(i(n+1)) for
/// i = 0..floor((m-1)/2), computed term by term as an independent route.
std::vector<BigInt> fib_nm_terms(std::uint64_t n, std::uint64_t m);

/// Checks the n-th power of [[1,1],[1,0]] entry by entry against
/// (F_{n+1}, F_n; F_n, F_{n-1}), its trace against L_n, and its
/// determinant against (-1)^n; n >= 1. Failures are report entries.
Report fib_matrix_check(std::uint64_t n);

}  // namespace quadring
