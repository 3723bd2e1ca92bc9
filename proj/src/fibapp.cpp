#include "quadring/fibapp.hpp"

#include <stdexcept>

#include "quadring/mat2.hpp"
#include "quadring/quadratic.hpp"

namespace quadring {

namespace {

QuadParams<BigInt> fib_params() { return {BigInt(1), BigInt(-1)}; }

}  // namespace

BigInt fibonacci(std::uint64_t n) { return lucas_u_doubling(fib_params(), n); }

FibPair fibonacci_pair(std::uint64_t n) {
    auto s = detail::u_state(fib_params(), n);
    return {std::move(s.u), std::move(s.u_next)};
}

BigInt lucas_number(std::uint64_t n) { return companion_pair(fib_params(), n).v; }

BigInt fib_nm_identity(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("fib_nm_identity requires n >= 1 and m >= 1");
    // The sum is P_m evaluated at t = L_n, d = (-1)^n: the sign factor
    // (-1)^(i(n+1)) is precisely (-d)^i for that d. lucas_u_binomial
    // supplies the Horner-in-t^2 accumulation.
    const BigInt t = lucas_number(n);
    const BigInt d = BigInt(n % 2 == 0 ? 1 : -1);
    return fibonacci(n) * lucas_u_binomial(QuadParams<BigInt>{t, d}, m);
}

std::vector<BigInt> fib_nm_terms(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("fib_nm_terms requires n >= 1 and m >= 1");
    const BigInt ln = lucas_number(n);
    const bool alternating = (n + 1) % 2 == 1;  // (-1)^(i(n+1)) nontrivial only for even n
    std::vector<BigInt> terms;
    terms.reserve((m - 1) / 2 + 1);
    for (std::uint64_t i = 0; i <= (m - 1) / 2; ++i) {
        BigInt term = BigInt::binomial(m - 1 - i, i) * BigInt::pow(ln, m - 1 - 2 * i);
        if (alternating && i % 2 == 1) term = -term;
        terms.push_back(std::move(term));
    }
    return terms;
}

Report fib_matrix_check(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("fib_matrix_check requires n >= 1");
    const Mat2<BigInt> a{BigInt(1), BigInt(1), BigInt(1), BigInt(0)};
    const Mat2<BigInt> an = pow_naive(a, n);

    const FibPair fp = fibonacci_pair(n);
    const BigInt f_prev = fp.f_next - fp.f;  // F_{n-1}

    const std::string tag = "n=" + std::to_string(n);
    Report r;
    r.add_equal("entry(1,1) = F_{n+1} " + tag, fp.f_next.to_decimal(), an.e11.to_decimal());
    r.add_equal("entry(1,2) = F_n " + tag, fp.f.to_decimal(), an.e12.to_decimal());
    r.add_equal("entry(2,1) = F_n " + tag, fp.f.to_decimal(), an.e21.to_decimal());
    r.add_equal("entry(2,2) = F_{n-1} " + tag, f_prev.to_decimal(), an.e22.to_decimal());
    r.add_equal("trace = L_n " + tag, lucas_number(n).to_decimal(), trace(an).to_decimal());
    r.add_equal("det = (-1)^n " + tag, n % 2 == 0 ? "1" : "-1", det(an).to_decimal());
    return r;
}

}  // namespace quadring
