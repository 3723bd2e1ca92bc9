#pragma once

/**
 * @file chebyshev.hpp
 * @brief Second-kind Chebyshev polynomials and their correspondence with
 *        the quadratic coefficient sequence.
 *
 * With U_0 = 1, U_1 = 2x, U_{k+1} = 2x U_k - U_{k-1}, the sequence P_m
 * satisfies P_m(t, d) = d^((m-1)/2) * U_{m-1}(t / (2 sqrt(d))) whenever
 * sqrt(d) makes sense. Two verifiable instances:
 *
 *   exact    d = s^2 a perfect square; both sides live in the rationals
 *   numeric  d > 0 real; both sides in double, relative tolerance 1e-9
 *            (with an absolute floor of 1 when both sides are near zero).
 *            Double precision supports that tolerance up to about m = 12
 *            for |t| <= 10, d <= 10; beyond that the recurrence's own
 *            rounding outgrows it and the exact path is the one to use
 */

#include <cstdint>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/rational.hpp"
#include "quadring/report.hpp"

namespace quadring {

/// U_k with exact rational coefficients, ascending degree, size k+1.
/// Leading coefficient 2^k; U_k(1) = k+1.
class ChebUPoly {
public:
    explicit ChebUPoly(std::vector<Rational> ascending_coeffs);

    std::uint64_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

private:
    std::vector<Rational> coeffs_;
};

ChebUPoly chebyshev_u(std::uint64_t k);

/// Exact check of P_m(t, s^2) == s^(m-1) * U_{m-1}(t / (2s)) over the
/// rationals; s >= 1, m >= 1.
Report verify_chebyshev_exact(const BigInt& t, std::uint64_t s, std::uint64_t m);

/// Floating-point check of the same relation for real d > 0; m >= 1.
Report verify_chebyshev_numeric(double t, double d, std::uint64_t m);

}  // namespace quadring
