#include "quadring/chebyshev.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quadring/quadratic.hpp"

namespace quadring {

ChebUPoly::ChebUPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

Rational ChebUPoly::eval(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double ChebUPoly::eval_double(double x) const {
    double acc = coeffs_.back().to_double();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i].to_double();
    return acc;
}

ChebUPoly chebyshev_u(std::uint64_t k) {
    std::vector<Rational> prev{Rational(1)};              // U_0 = 1
    if (k == 0) return ChebUPoly(std::move(prev));
    std::vector<Rational> cur{Rational(0), Rational(2)};  // U_1 = 2x
    const Rational two(2);
    for (std::uint64_t step = 2; step <= k; ++step) {
        std::vector<Rational> next(step + 1, Rational());
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = two * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] = next[i] - prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ChebUPoly(std::move(cur));
}

namespace {

double lucas_u_numeric(double t, double d, std::uint64_t m) {
    double prev = 0.0, cur = 1.0;
    if (m == 0) return prev;
    for (std::uint64_t k = 1; k < m; ++k) {
        const double next = t * cur - d * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Report verify_chebyshev_exact(const BigInt& t, std::uint64_t s, std::uint64_t m) {
    if (s == 0) throw std::invalid_argument("s must be >= 1 (the check divides by 2s)");
    if (m == 0) throw std::invalid_argument("m must be >= 1");

    const BigInt s_big{mpz_class(s)};
    const BigInt d = s_big * s_big;
    const Rational lhs(lucas_u_iterative(QuadParams<BigInt>{t, d}, m));

    const Rational x(t, BigInt(2) * s_big);  // t / (2s)
    const Rational rhs = Rational(BigInt::pow(s_big, m - 1)) * chebyshev_u(m - 1).eval(x);

    Report r;
    r.add("P_m(t,s^2) == s^(m-1)*U_{m-1}(t/(2s)) t=" + t.to_decimal() + " s=" + std::to_string(s) +
              " m=" + std::to_string(m),
          to_text(lhs), to_text(rhs), lhs == rhs);
    return r;
}

Report verify_chebyshev_numeric(double t, double d, std::uint64_t m) {
    if (!(d > 0.0)) throw std::invalid_argument("numeric mode requires d > 0");
    if (m == 0) throw std::invalid_argument("m must be >= 1");

    const double lhs = lucas_u_numeric(t, d, m);
    const double root = std::sqrt(d);
    const double rhs = std::pow(root, double(m - 1)) * chebyshev_u(m - 1).eval_double(t / (2.0 * root));

    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    const bool pass = std::fabs(lhs - rhs) <= 1e-9 * scale;

    Report r;
    r.add("P_m(t,d) ~= d^((m-1)/2)*U_{m-1}(t/(2*sqrt(d))) t=" + format_double(t) +
              " d=" + format_double(d) + " m=" + std::to_string(m),
          format_double(lhs), format_double(rhs), pass);
    return r;
}

}  // namespace quadring
