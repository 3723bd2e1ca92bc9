// Acceptance gate: eight end-to-end checks, each with a wall-clock budget.
// Every check prints one [PASS]/[FAIL] line; the process exits 0 only if
// all checks pass inside their budgets. Random cases use fixed seeds so a
// failure is reproducible.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/bipoly.hpp"
#include "quadring/chebyshev.hpp"
#include "quadring/fibapp.hpp"
#include "quadring/mat2.hpp"
#include "quadring/modint.hpp"
#include "quadring/opcount.hpp"
#include "quadring/quadratic.hpp"

using namespace quadring;

namespace {

constexpr std::uint64_t kSeed = 0xACCE9721u;  // distinct from the verify sweeps
constexpr std::uint64_t kPrime = 1000000007ULL;

std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(kSeed + salt); }

long rand_in(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::string fail(const std::string& detail) { return detail; }

// --- criterion 1: symbolic rows vs. an independently built binomial sum ---

BiPoly closed_sum(std::uint64_t m) {
    if (m == 0) return BiPoly();
    BiPoly acc;
    for (std::uint64_t i = 0; 2 * i <= m - 1; ++i) {
        BigInt c = BigInt::binomial(static_cast<unsigned long>(m - 1 - i),
                                    static_cast<unsigned long>(i));
        if (i % 2 == 1) c = -c;
        acc = acc + BiPoly::term(std::move(c), static_cast<std::uint32_t>(m - 1 - 2 * i),
                                 static_cast<std::uint32_t>(i));
    }
    return acc;
}

std::string criterion_symbolic() {
    for (std::uint64_t m = 0; m <= 64; ++m) {
        const BiPoly lhs = lucas_u_symbolic(m);
        const BiPoly rhs = closed_sum(m);
        if (!(lhs == rhs))
            return fail("row m=" + std::to_string(m) + ": " + to_text(lhs) + " vs " + to_text(rhs));
        if (m >= 1 && lhs.coefficient(static_cast<std::uint32_t>(m - 1), 0) != BigInt(1))
            return fail("row m=" + std::to_string(m) + " is not monic in T");
        if (lhs.term_count() != (m + 1) / 2)
            return fail("row m=" + std::to_string(m) + " has wrong term count");
    }
    return "";
}

// --- criterion 2: three engines agree over big integers and a prime field ---

std::string criterion_engines() {
    auto rng = rng_for(2);
    for (int c = 0; c < 1000; ++c) {
        const QuadParams<BigInt> p{BigInt(rand_in(rng, -100, 100)), BigInt(rand_in(rng, -100, 100))};
        BigInt prev(0), cur(1);  // local recurrence, carried incrementally
        for (std::uint64_t m = 0; m <= 64; ++m) {
            const BigInt want = (m == 0) ? BigInt(0) : prev;
            if (lucas_u_doubling(p, m) != want)
                return fail("doubling engine at m=" + std::to_string(m));
            if (lucas_u_iterative(p, m) != want)
                return fail("iterative engine at m=" + std::to_string(m));
            if (m >= 1 && lucas_u_binomial(p, m) != want)
                return fail("binomial engine at m=" + std::to_string(m));
            const BigInt next = p.t * cur - p.d * prev;
            prev = cur;
            cur = next;
        }
    }
    const std::uint64_t params[3][2] = {{3, 2}, {1, kPrime - 1}, {123456789, 987654321}};
    for (const auto& td : params)
        for (std::uint64_t m : {1000ULL, 10000ULL, 100000ULL}) {
            const QuadParams<ModInt> p{ModInt(td[0], kPrime), ModInt(td[1], kPrime)};
            const ModInt a = lucas_u_iterative(p, m);
            const ModInt b = lucas_u_binomial(p, m);
            const ModInt c = lucas_u_doubling(p, m);
            if (a != b || a != c)
                return fail("prime-field engines disagree at m=" + std::to_string(m));
        }
    return "";
}

// --- criterion 3: trace/determinant power vs. direct multiplication ---

std::string criterion_matrix() {
    auto rng = rng_for(3);
    for (int c = 0; c < 500; ++c) {
        const Mat2<BigInt> m{BigInt(rand_in(rng, -9, 9)), BigInt(rand_in(rng, -9, 9)),
                             BigInt(rand_in(rng, -9, 9)), BigInt(rand_in(rng, -9, 9))};
        Mat2<BigInt> chain = mat2_identity(m.e11);
        for (std::uint64_t e = 0; e <= 200; ++e) {
            if (pow_ch(m, e) != chain)
                return fail("case " + std::to_string(c) + " exponent " + std::to_string(e));
            chain = chain * m;
        }
        for (std::uint64_t e : {1ULL, 5ULL, 13ULL}) {
            if (pow_ch(m, e, Engine::iterative) != pow_naive(m, e) ||
                pow_ch(m, e, Engine::binomial) != pow_naive(m, e))
                return fail("engine variants at exponent " + std::to_string(e));
        }
    }
    for (int c = 0; c < 20; ++c) {
        auto u64 = [&rng] { return std::uniform_int_distribution<std::uint64_t>(0, kPrime - 1)(rng); };
        const Mat2<ModInt> m{ModInt(u64(), kPrime), ModInt(u64(), kPrime),
                             ModInt(u64(), kPrime), ModInt(u64(), kPrime)};
        const std::uint64_t e =
            (c == 0) ? 100000 : std::uniform_int_distribution<std::uint64_t>(1, 100000)(rng);
        if (pow_ch(m, e) != pow_naive(m, e))
            return fail("prime-field case " + std::to_string(c) + " exponent " + std::to_string(e));
    }
    return "";
}

// --- criterion 4: F(nm) identity on a full grid plus random pairs ---

std::string criterion_fib_identity() {
    for (std::uint64_t n = 1; n <= 50; ++n)
        for (std::uint64_t m = 1; m <= 50; ++m)
            if (fib_nm_identity(n, m) != fibonacci(n * m))
                return fail("grid n=" + std::to_string(n) + " m=" + std::to_string(m));
    auto rng = rng_for(4);
    for (int c = 0; c < 100; ++c) {
        const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 400)(rng);
        const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, 10000 / n)(rng);
        if (fib_nm_identity(n, m) != fibonacci(n * m))
            return fail("random n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    return "";
}

// --- criterion 5: matrix-derived Fibonacci facts up to n = 200 ---

std::string criterion_fib_matrix() {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const Report r = fib_matrix_check(n);
        if (!r.all_pass()) return fail("n=" + std::to_string(n));
    }
    return "";
}

// --- criterion 6: Chebyshev correspondence, exact and floating-point ---

std::string criterion_chebyshev() {
    for (std::uint64_t s = 1; s <= 3; ++s)
        for (long t = -5; t <= 5; ++t)
            for (std::uint64_t m = 1; m <= 32; ++m)
                if (!verify_chebyshev_exact(BigInt(t), s, m).all_pass())
                    return fail("exact t=" + std::to_string(t) + " s=" + std::to_string(s) +
                                " m=" + std::to_string(m));
    for (int ti = 0; ti < 10; ++ti)
        for (int d = 1; d <= 10; ++d)
            for (std::uint64_t m = 1; m <= 12; ++m) {
                const double t = -10.0 + 20.0 * ti / 9.0;
                if (!verify_chebyshev_numeric(t, double(d), m).all_pass())
                    return fail("numeric t=" + std::to_string(t) + " d=" + std::to_string(d) +
                                " m=" + std::to_string(m));
            }
    return "";
}

// --- criterion 7: multiplication counts in the two engine families ---

std::string criterion_complexity() {
    for (std::uint64_t m : {256ULL, 4096ULL, 65536ULL}) {
        OpCounter counter;
        const QuadParams<Counted<ModInt>> p{Counted<ModInt>(ModInt(3, kPrime), &counter),
                                            Counted<ModInt>(ModInt(2, kPrime), &counter)};
        lucas_u_doubling(p, m);
        const auto bound = static_cast<std::uint64_t>(10.0 * std::log2(double(m) + 2.0));
        if (counter.multiplications > bound)
            return fail("doubling used " + std::to_string(counter.multiplications) +
                        " multiplications at m=" + std::to_string(m) + ", bound " +
                        std::to_string(bound));
        counter.reset();
        lucas_u_iterative(p, m);
        if (counter.multiplications < m - 1)
            return fail("iterative used only " + std::to_string(counter.multiplications) +
                        " multiplications at m=" + std::to_string(m));
    }
    return "";
}

// --- criterion 8: the millionth Fibonacci number, size and residue ---

std::string criterion_million() {
    const auto start = std::chrono::steady_clock::now();
    const BigInt f = fibonacci(1000000);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (elapsed >= 5000) return fail("computation took " + std::to_string(elapsed) + " ms");
    const std::string digits = f.to_decimal();
    if (digits.size() != 208988)
        return fail("expected 208988 digits, got " + std::to_string(digits.size()));
    // independent residue route: pair recurrence over Z / 10^9
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < 1000000; ++i) {
        const std::uint64_t next = (a + b) % 1000000000ULL;
        a = b;
        b = next;
    }
    std::string last9 = std::to_string(a);
    last9.insert(0, 9 - last9.size(), '0');
    if (digits.substr(digits.size() - 9) != last9)
        return fail("last nine digits " + digits.substr(digits.size() - 9) + " vs residue " + last9);
    return "";
}

struct Criterion {
    int number;
    std::string label;
    long budget_ms;
    std::function<std::string()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "symbolic rows match the closed binomial sum (m <= 64)", 1000, criterion_symbolic},
        {2, "engines agree on 1000 random inputs and in a prime field up to m = 100000", 5000,
         criterion_engines},
        {3, "trace/determinant matrix powers match direct multiplication", 10000, criterion_matrix},
        {4, "F(nm) identity holds on the 50x50 grid and 100 random pairs", 5000,
         criterion_fib_identity},
        {5, "matrix-derived Fibonacci facts hold up to n = 200", 1000, criterion_fib_matrix},
        {6, "Chebyshev correspondence holds in exact and floating-point form", 2000,
         criterion_chebyshev},
        {7, "doubling stays within 10*log2(m+2) multiplications, iteration is linear", 1000,
         criterion_complexity},
        {8, "fibonacci(10^6) has 208988 digits and the right residue", 10000, criterion_million},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool in_budget = ms <= c.budget_ms;
        const bool pass = detail.empty() && in_budget;
        all_pass = all_pass && pass;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.label
                  << " (" << ms << " ms, budget " << c.budget_ms << " ms)";
        if (!detail.empty()) std::cout << " -- " << detail;
        if (detail.empty() && !in_budget) std::cout << " -- over budget";
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
