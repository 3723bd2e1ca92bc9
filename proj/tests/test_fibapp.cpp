#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/fibapp.hpp"
#include "quadring/modint.hpp"
#include "quadring/quadratic.hpp"

using namespace quadring;

TEST_CASE("fibonacci and lucas openings") {
    const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    const long luc[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322};
    for (std::uint64_t n = 0; n <= 12; ++n) {
        CHECK(fibonacci(n) == BigInt(fib[n]));
        CHECK(lucas_number(n) == BigInt(luc[n]));
    }
    CHECK(fibonacci(20) == BigInt(6765L));
    CHECK(fibonacci(50).to_decimal() == "12586269025");
    CHECK(fibonacci(100).to_decimal() == "354224848179261915075");
    CHECK(lucas_number(40).to_decimal() == "228826127");
}

TEST_CASE("pair walks two consecutive values") {
    for (const std::uint64_t n : {std::uint64_t(0), std::uint64_t(1), std::uint64_t(2),
                                  std::uint64_t(17), std::uint64_t(100), std::uint64_t(1000)}) {
        const FibPair p = fibonacci_pair(n);
        CHECK(p.f == fibonacci(n));
        CHECK(p.f_next == fibonacci(n + 1));
    }
}

TEST_CASE("fibonacci respects its addition structure") {
    // F_{n+1} = F_n + F_{n-1} and L_n = F_{n-1} + F_{n+1}
    for (std::uint64_t n = 1; n <= 300; ++n) {
        CHECK(fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1));
        CHECK(lucas_number(n) == fibonacci(n - 1) + fibonacci(n + 1));
    }
}

TEST_CASE("product-index expansion, frozen cases") {
    CHECK(fib_nm_identity(2, 3) == BigInt(8));     // F_6
    CHECK(fib_nm_identity(3, 4) == BigInt(144));   // F_12
    CHECK(fib_nm_identity(5, 5) == BigInt(75025L));  // F_25
    CHECK(fib_nm_identity(10, 10) == fibonacci(100));
    CHECK(fib_nm_identity(1, 64) == fibonacci(64));
    CHECK(fib_nm_identity(64, 1) == fibonacci(64));

    CHECK_THROWS_AS(fib_nm_identity(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(fib_nm_identity(5, 0), std::invalid_argument);
}

TEST_CASE("summands, frozen and structural") {
    // n = 3 (odd, no alternation), m = 4: L_3 = 4, terms C(3,0) 4^3 and C(2,1) 4^1
    const auto odd_terms = fib_nm_terms(3, 4);
    REQUIRE(odd_terms.size() == 2);
    CHECK(odd_terms[0] == BigInt(64));
    CHECK(odd_terms[1] == BigInt(8));
    // F_3 * (64 + 8) = 2 * 72 = 144 = F_12
    CHECK(fibonacci(3) * (odd_terms[0] + odd_terms[1]) == fibonacci(12));

    // n = 2 (even, alternating), m = 3: L_2 = 3, terms 3^2 and -1
    const auto even_terms = fib_nm_terms(2, 3);
    REQUIRE(even_terms.size() == 2);
    CHECK(even_terms[0] == BigInt(9));
    CHECK(even_terms[1] == BigInt(-1));
    CHECK(fibonacci(2) * (even_terms[0] + even_terms[1]) == fibonacci(6));

    // odd n keeps every summand nonnegative
    for (std::uint64_t m = 1; m <= 20; ++m)
        for (const auto& term : fib_nm_terms(7, m)) CHECK(term.sign() >= 0);

    CHECK_THROWS_AS(fib_nm_terms(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(fib_nm_terms(1, 0), std::invalid_argument);
}

TEST_CASE("terms always sum to the identity value") {
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (std::uint64_t m = 1; m <= 12; ++m) {
            BigInt sum;
            for (const auto& term : fib_nm_terms(n, m)) sum = sum + term;
            CHECK(fibonacci(n) * sum == fib_nm_identity(n, m));
            CHECK(fib_nm_identity(n, m) == fibonacci(n * m));
        }
}

TEST_CASE("matrix facts report") {
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const Report r = fib_matrix_check(n);
        CHECK(r.checks().size() == 6);
        CHECK(r.all_pass());
    }
    CHECK(fib_matrix_check(200).all_pass());
    CHECK_THROWS_AS(fib_matrix_check(0), std::invalid_argument);
}

TEST_CASE("large index agrees with an independent modular run") {
    const std::uint64_t p = 1000000007;
    const BigInt big = fibonacci(20000);
    const QuadParams<ModInt> fib_mod{ModInt(1, p), ModInt(p - 1, p)};
    CHECK(ModInt::reduce(big, p) == lucas_u_iterative(fib_mod, 20000));
}
