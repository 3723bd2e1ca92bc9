#include "quadring/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/bipoly.hpp"
#include "quadring/chebyshev.hpp"
#include "quadring/fibapp.hpp"
#include "quadring/mat2.hpp"
#include "quadring/modint.hpp"
#include "quadring/opcount.hpp"
#include "quadring/quadratic.hpp"
#include "quadring/rational.hpp"

namespace quadring {

namespace {

constexpr std::uint64_t kModPrime = 1000000007;

// Every case owns a generator seeded from the sweep constant and the case
// index, so inputs are identical at any thread count and schedule.
std::mt19937_64 case_rng(std::uint64_t sweep_seed, std::uint64_t index) {
    return std::mt19937_64(sweep_seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

long long rand_in(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

BigInt rand_bigint(std::mt19937_64& rng, long long lo, long long hi) {
    return BigInt(static_cast<long>(rand_in(rng, lo, hi)));
}

std::uint64_t rand_u64(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

struct SweepOutcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// Runs body(i) for i in [0, n); a nonempty return describes a failure.
// Cases are independent and run in parallel; aggregation walks the result
// slots in index order, so the outcome is deterministic.
template <class Body>
SweepOutcome sweep(std::size_t n, const Body& body) {
    std::vector<std::string> slot(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            slot[k] = body(k);
        } catch (const std::exception& e) {
            slot[k] = std::string("unexpected exception: ") + e.what();
        }
    }
    SweepOutcome out;
    out.cases = n;
    for (const auto& s : slot) {
        if (s.empty()) continue;
        if (out.failures == 0) out.first_failure = s;
        ++out.failures;
    }
    return out;
}

void add_sweep(Report& report, const std::string& name, const SweepOutcome& out) {
    report.add(name + " [" + std::to_string(out.cases) + " cases]", "0 failures",
               out.failures == 0
                   ? "0 failures"
                   : std::to_string(out.failures) + " failures, first: " + out.first_failure,
               out.failures == 0);
}

std::string first_failure_of(const Report& rep) {
    for (const auto& c : rep.checks())
        if (!c.pass) return c.name + ": expected " + c.expected + ", got " + c.actual;
    return {};
}

std::string param_tag(const QuadParams<BigInt>& p, std::uint64_t m) {
    return "t=" + p.t.to_decimal() + " d=" + p.d.to_decimal() + " m=" + std::to_string(m);
}

// ---------------------------------------------------------------- engines

std::string engines_bigint_case(std::size_t idx) {
    auto rng = case_rng(0xE17001, idx);
    const QuadParams<BigInt> p{rand_bigint(rng, -100, 100), rand_bigint(rng, -100, 100)};

    if (!lucas_u_iterative(p, 0).is_zero() || !lucas_u_doubling(p, 0).is_zero())
        return param_tag(p, 0) + ": P_0 != 0";
    try {
        lucas_u_binomial(p, 0);
        return param_tag(p, 0) + " binomial: expected rejection of m=0";
    } catch (const std::invalid_argument&) {
    }

    BigInt prev;          // P_0, carried by the incremental reference
    BigInt cur(1);        // P_1
    for (std::uint64_t m = 1; m <= 64; ++m) {
        const BigInt bin = lucas_u_binomial(p, m);
        if (!(bin == cur))
            return param_tag(p, m) + " binomial: expected " + cur.to_decimal() + ", got " +
                   bin.to_decimal();
        const BigInt dbl = lucas_u_doubling(p, m);
        if (!(dbl == cur))
            return param_tag(p, m) + " doubling: expected " + cur.to_decimal() + ", got " +
                   dbl.to_decimal();
        BigInt next = p.t * cur - p.d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {};
}

std::string engines_mod_case(std::size_t idx) {
    static constexpr std::uint64_t kMs[] = {1000, 10000, 100000};
    auto rng = case_rng(0xE17002, idx / 3);
    const QuadParams<ModInt> p{ModInt(rand_u64(rng, 0, kModPrime - 1), kModPrime),
                               ModInt(rand_u64(rng, 0, kModPrime - 1), kModPrime)};
    const std::uint64_t m = kMs[idx % 3];

    const ModInt ref = lucas_u_iterative(p, m);
    const ModInt bin = lucas_u_binomial(p, m);
    const ModInt dbl = lucas_u_doubling(p, m);
    const std::string tag = "t=" + std::to_string(p.t.residue()) +
                            " d=" + std::to_string(p.d.residue()) + " m=" + std::to_string(m);
    if (!(bin == ref))
        return tag + " binomial: expected " + to_text(ref) + ", got " + to_text(bin);
    if (!(dbl == ref))
        return tag + " doubling: expected " + to_text(ref) + ", got " + to_text(dbl);
    return {};
}

std::string engines_stepping_case(std::size_t idx) {
    auto rng = case_rng(0xE17003, idx);
    const QuadParams<BigInt> p{rand_bigint(rng, -20, 20), rand_bigint(rng, -20, 20)};

    const LinearForm<BigInt> x0{BigInt(), BigInt(1)};
    if (!(x_power(p, 0, Engine::iterative) == x0) || !(x_power(p, 0, Engine::doubling) == x0))
        return param_tag(p, 0) + ": x^0 != (0, 1)";

    BigInt a(1), b;  // coefficients of x^1, stepped a' = t a + b, b' = -d a
    for (std::uint64_t m = 1; m <= 512; ++m) {
        const LinearForm<BigInt> expect{a, b};
        const auto got = x_power(p, m, Engine::doubling);
        if (!(got == expect))
            return param_tag(p, m) + " doubling form: expected (" + expect.a.to_decimal() + ", " +
                   expect.b.to_decimal() + "), got (" + got.a.to_decimal() + ", " +
                   got.b.to_decimal() + ")";
        if (m <= 16) {
            if (!(x_power(p, m, Engine::iterative) == expect))
                return param_tag(p, m) + " iterative form mismatch";
            if (!(x_power(p, m, Engine::binomial) == expect))
                return param_tag(p, m) + " binomial form mismatch";
        }
        if (m == 1 || m == 7 || m == 64 || m == 511 || m == 512) {
            if (!(x_power_by_stepping(p, m) == expect))
                return param_tag(p, m) + " restarted stepping mismatch";
        }
        BigInt next_a = p.t * a + b;
        b = -(p.d * a);
        a = std::move(next_a);
    }
    return {};
}

std::string engines_companion_case(std::size_t idx) {
    auto rng = case_rng(0xE17004, idx);
    const QuadParams<BigInt> p{rand_bigint(rng, -9, 9), rand_bigint(rng, -9, 9)};
    const BigInt disc = p.t * p.t - BigInt(4) * p.d;
    const BigInt four(4);
    for (std::uint64_t m = 0; m <= 1000; ++m) {
        const auto cp = companion_pair(p, m);
        if (!(cp.dpow == BigInt::pow(p.d, m)))
            return param_tag(p, m) + ": carried d^m " + cp.dpow.to_decimal() + " != " +
                   BigInt::pow(p.d, m).to_decimal();
        if (!(cp.v * cp.v - disc * (cp.u * cp.u) == four * cp.dpow))
            return param_tag(p, m) + ": V^2 - (t^2-4d) U^2 != 4 d^m";
    }
    return {};
}

void add_complexity_records(Report& report) {
    for (const std::uint64_t m : {std::uint64_t(256), std::uint64_t(4096), std::uint64_t(65536)}) {
        OpCounter counter;
        const QuadParams<Counted<ModInt>> p{Counted<ModInt>(ModInt(1, kModPrime), &counter),
                                            Counted<ModInt>(ModInt(kModPrime - 1, kModPrime),
                                                            &counter)};
        lucas_u_doubling(p, m);
        const auto bound =
            static_cast<std::uint64_t>(std::floor(10.0 * std::log2(static_cast<double>(m) + 2.0)));
        report.add("engines/multiplication-count/doubling m=" + std::to_string(m),
                   "<= " + std::to_string(bound) + " multiplications",
                   std::to_string(counter.multiplications) + " multiplications",
                   counter.multiplications <= bound);

        counter.reset();
        lucas_u_iterative(p, m);
        report.add("engines/multiplication-count/iterative m=" + std::to_string(m),
                   ">= " + std::to_string(m - 1) + " multiplications",
                   std::to_string(counter.multiplications) + " multiplications",
                   counter.multiplications >= m - 1);
    }
}

Report verify_engines() {
    Report r;
    add_sweep(r, "engines/agreement/bigint t,d in [-100,100], m <= 64",
              sweep(1000, engines_bigint_case));
    add_sweep(r, "engines/agreement/mod(1000000007) m in {1e3,1e4,1e5}",
              sweep(9, engines_mod_case));
    add_sweep(r, "engines/power-form-vs-stepping/bigint m <= 512",
              sweep(5, engines_stepping_case));
    add_sweep(r, "engines/companion-identity/bigint m <= 1000",
              sweep(3, engines_companion_case));
    add_complexity_records(r);
    return r;
}

// ----------------------------------------------------------------- matrix

Mat2<BigInt> random_mat(std::mt19937_64& rng, long long lo, long long hi) {
    return {rand_bigint(rng, lo, hi), rand_bigint(rng, lo, hi), rand_bigint(rng, lo, hi),
            rand_bigint(rng, lo, hi)};
}

std::string matrix_power_case(std::size_t idx) {
    auto rng = case_rng(0xA20001, idx);
    const Mat2<BigInt> m = random_mat(rng, -9, 9);
    for (std::uint64_t e = 0; e <= 200; ++e) {
        const auto expect = pow_naive(m, e);
        const auto got = pow_ch(m, e, Engine::doubling);
        if (!(got == expect))
            return "M=" + to_text(m) + " e=" + std::to_string(e) + ": expected " + to_text(expect) +
                   ", got " + to_text(got);
    }
    return {};
}

std::string matrix_engines_case(std::size_t idx) {
    static constexpr std::uint64_t kEs[] = {1, 2, 3, 5, 8, 13, 33, 100, 200};
    auto rng = case_rng(0xA20002, idx);
    const Mat2<BigInt> m = random_mat(rng, -9, 9);
    for (const std::uint64_t e : kEs) {
        const auto expect = pow_naive(m, e);
        for (const Engine engine : {Engine::iterative, Engine::binomial}) {
            const auto got = pow_ch(m, e, engine);
            if (!(got == expect))
                return "M=" + to_text(m) + " e=" + std::to_string(e) + " " + engine_name(engine) +
                       ": expected " + to_text(expect) + ", got " + to_text(got);
        }
    }
    return {};
}

std::string matrix_characteristic_case(std::size_t idx) {
    auto rng = case_rng(0xA20003, idx);
    const Mat2<BigInt> m = random_mat(rng, -50, 50);
    const auto rhs = scale(trace(m), m) + scale(-det(m), mat2_identity(m.e11));
    if (!(m * m == rhs)) return "M=" + to_text(m) + ": M^2 != tr(M) M - det(M) I";
    return {};
}

std::string matrix_similarity_case(std::size_t idx) {
    auto rng = case_rng(0xA20004, idx);
    const Mat2<BigInt> m = random_mat(rng, -9, 9);
    Mat2<BigInt> s = random_mat(rng, -5, 5);
    while (det(s).is_zero()) s = random_mat(rng, -5, 5);

    const auto lift = [](const Mat2<BigInt>& x) {
        return Mat2<Rational>{Rational(x.e11), Rational(x.e12), Rational(x.e21), Rational(x.e22)};
    };
    const BigInt ds = det(s);
    const Mat2<Rational> sq = lift(s);
    const Mat2<Rational> sinv{Rational(s.e22, ds), Rational(-s.e12, ds), Rational(-s.e21, ds),
                              Rational(s.e11, ds)};
    const Mat2<Rational> c = sinv * lift(m) * sq;

    const std::string tag = "M=" + to_text(m) + " S=" + to_text(s);
    if (!(trace(c) == Rational(trace(m)))) return tag + ": conjugate trace changed";
    if (!(det(c) == Rational(det(m)))) return tag + ": conjugate determinant changed";
    for (const std::uint64_t e : {std::uint64_t(2), std::uint64_t(3), std::uint64_t(5),
                                  std::uint64_t(17)}) {
        const auto direct = sinv * lift(pow_naive(m, e)) * sq;
        if (!(pow_ch(c, e) == direct))
            return tag + " e=" + std::to_string(e) + ": reduced power of conjugate mismatch";
        if (!(pow_naive(c, e) == direct))
            return tag + " e=" + std::to_string(e) + ": naive power of conjugate mismatch";
    }
    return {};
}

std::string matrix_mod_case(std::size_t idx) {
    static constexpr std::uint64_t kModuli[] = {2, 7, kModPrime};
    static constexpr std::uint64_t kFixed[] = {1000, 10000, 100000};
    const std::uint64_t n = kModuli[idx / 20];
    const std::size_t j = idx % 20;
    auto rng = case_rng(0xA20005, idx);
    const auto entry = [&] { return ModInt(rand_u64(rng, 0, n - 1), n); };
    const Mat2<ModInt> m{entry(), entry(), entry(), entry()};
    const std::uint64_t e = j < 3 ? kFixed[j] : rand_u64(rng, 1, 100000);

    const auto expect = pow_naive(m, e);
    const std::string tag = "mod(" + std::to_string(n) + ") M=" + to_text(m) +
                            " e=" + std::to_string(e);
    if (!(pow_ch(m, e, Engine::doubling) == expect)) return tag + ": doubling mismatch";
    if (e <= 2000 && !(pow_ch(m, e, Engine::iterative) == expect))
        return tag + ": iterative mismatch";
    return {};
}

Report verify_matrix() {
    Report r;
    add_sweep(r, "matrix/trace-det-power/bigint entries in [-9,9], e <= 200",
              sweep(500, matrix_power_case));
    add_sweep(r, "matrix/trace-det-power-engines/bigint", sweep(50, matrix_engines_case));
    add_sweep(r, "matrix/characteristic-relation/bigint entries in [-50,50]",
              sweep(1000, matrix_characteristic_case));
    add_sweep(r, "matrix/similarity-invariance/rational", sweep(100, matrix_similarity_case));
    add_sweep(r, "matrix/trace-det-power/mod{2,7,1000000007} e <= 1e5",
              sweep(60, matrix_mod_case));
    return r;
}

// -------------------------------------------------------------- fibonacci

std::string fib_grid_case(std::size_t idx) {
    const std::uint64_t n = idx / 50 + 1;
    const std::uint64_t m = idx % 50 + 1;
    const BigInt expect = fibonacci(n * m);
    const BigInt got = fib_nm_identity(n, m);
    if (!(got == expect))
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": expected " +
               expect.to_decimal() + ", got " + got.to_decimal();
    return {};
}

std::string fib_random_case(std::size_t idx) {
    auto rng = case_rng(0xF1B002, idx);
    const std::uint64_t n = rand_u64(rng, 1, 400);
    const std::uint64_t m = rand_u64(rng, 1, std::max<std::uint64_t>(1, 10000 / n));
    if (!(fib_nm_identity(n, m) == fibonacci(n * m)))
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": product-index mismatch";
    return {};
}

std::string fib_matrix_case(std::size_t idx) {
    const auto rep = fib_matrix_check(idx + 1);
    if (!rep.all_pass()) return first_failure_of(rep);
    return {};
}

std::string fib_terms_case(std::size_t idx) {
    const std::uint64_t n = idx / 30 + 1;
    const std::uint64_t m = idx % 30 + 1;
    const auto terms = fib_nm_terms(n, m);
    BigInt sum;
    for (const auto& t : terms) {
        if (n % 2 == 1 && t.sign() < 0)
            return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   ": negative summand at odd n: " + t.to_decimal();
        sum = sum + t;
    }
    if (!(fibonacci(n) * sum == fibonacci(n * m)))
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
               ": term sum times F_n misses F_{nm}";
    return {};
}

std::string fib_edge_case(std::size_t idx) {
    if (idx < 200) {
        const std::uint64_t m = idx + 1;
        if (!(fib_nm_identity(1, m) == fibonacci(m)))
            return "n=1 m=" + std::to_string(m) + ": specialization mismatch";
    } else {
        const std::uint64_t n = idx - 199;
        if (!(fib_nm_identity(n, 1) == fibonacci(n)))
            return "n=" + std::to_string(n) + " m=1: specialization mismatch";
    }
    return {};
}

Report verify_fibonacci() {
    Report r;
    add_sweep(r, "fibonacci/index-product-grid n,m <= 50", sweep(2500, fib_grid_case));
    add_sweep(r, "fibonacci/index-product-random n*m <= 1e4", sweep(100, fib_random_case));
    add_sweep(r, "fibonacci/matrix-facts n <= 200", sweep(200, fib_matrix_case));
    add_sweep(r, "fibonacci/term-sum-and-sign n <= 50, m <= 30", sweep(1500, fib_terms_case));
    add_sweep(r, "fibonacci/single-factor-specialization", sweep(400, fib_edge_case));
    return r;
}

// -------------------------------------------------------------- chebyshev

std::string chebyshev_exact_case(std::size_t idx) {
    const std::uint64_t s = idx / 352 + 1;           // 1..3
    const long t = static_cast<long>(idx % 352) / 32 - 5;  // -5..5
    const std::uint64_t m = idx % 32 + 1;            // 1..32
    const auto rep = verify_chebyshev_exact(BigInt(t), s, m);
    if (!rep.all_pass()) return first_failure_of(rep);
    return {};
}

// Double precision supports the 1e-9 claim only while the recurrence's
// intermediate growth stays moderate; on this (t, d) range that means
// m <= 12 (measured worst case 4.1e-13, three orders of margin). Larger m
// is covered exactly by the square-discriminant path above.
std::string chebyshev_numeric_case(std::size_t idx) {
    const double t = -10.0 + 20.0 * double(idx / 120) / 9.0;
    const double d = double(idx / 12 % 10) + 1.0;
    const std::uint64_t m = idx % 12 + 1;
    const auto rep = verify_chebyshev_numeric(t, d, m);
    if (!rep.all_pass()) return first_failure_of(rep);
    return {};
}

Report verify_chebyshev() {
    Report r;
    add_sweep(r, "chebyshev/exact-square-discriminant s in {1,2,3}, t in [-5,5], m <= 32",
              sweep(1056, chebyshev_exact_case));
    add_sweep(r, "chebyshev/numeric-grid t in [-10,10], d in (0,10], m <= 12",
              sweep(1200, chebyshev_numeric_case));
    return r;
}

// --------------------------------------------------------------- symbolic

// The closed sum assembled term by term from library binomials; shares no
// code with the engines.
BiPoly closed_form_um(std::uint64_t m) {
    BiPoly sum;
    if (m == 0) return sum;
    for (std::uint64_t i = 0; i <= (m - 1) / 2; ++i) {
        BigInt c = BigInt::binomial((unsigned long)(m - 1 - i), (unsigned long)i);
        if (i % 2 == 1) c = -c;
        sum = sum + BiPoly::term(std::move(c), std::uint32_t(m - 1 - 2 * i), std::uint32_t(i));
    }
    return sum;
}

std::string symbolic_closed_form_case(std::size_t idx) {
    const std::uint64_t m = idx + 1;
    const BiPoly rec = lucas_u_symbolic(m);
    const BiPoly sum = closed_form_um(m);
    if (!(rec == sum))
        return "m=" + std::to_string(m) + ": recurrence " + rec.render() + " != closed sum " +
               sum.render();
    if (!rec.coefficient(std::uint32_t(m - 1), 0).is_one())
        return "m=" + std::to_string(m) + ": not monic in T";
    if (rec.term_count() != (m + 1) / 2)
        return "m=" + std::to_string(m) + ": expected " + std::to_string((m + 1) / 2) +
               " terms, got " + std::to_string(rec.term_count());
    return {};
}

template <Ring R>
std::string universality_check(const std::vector<BiPoly>& polys, const QuadParams<R>& p,
                               const std::string& ring_name) {
    for (std::uint64_t m = 0; m < polys.size(); ++m) {
        const R direct = lucas_u_iterative(p, m);
        const R via_poly = poly_eval(polys[m], p.t, p.d);
        if (!(via_poly == direct))
            return ring_name + " m=" + std::to_string(m) + ": evaluated polynomial " +
                   to_text(via_poly) + " != recurrence " + to_text(direct);
    }
    return {};
}

Report verify_symbolic() {
    Report r;
    add_sweep(r, "symbolic/recurrence-vs-closed-sum m <= 64", sweep(64, symbolic_closed_form_case));

    std::vector<BiPoly> polys;
    polys.reserve(65);
    for (std::uint64_t m = 0; m <= 64; ++m) polys.push_back(lucas_u_symbolic(m));

    const auto universality_case = [&polys](std::size_t idx) -> std::string {
        auto rng = case_rng(0x5B0002, idx);
        if (idx < 3) {
            const QuadParams<BigInt> p{rand_bigint(rng, -50, 50), rand_bigint(rng, -50, 50)};
            return universality_check(polys, p, "bigint " + param_tag(p, 0));
        }
        if (idx < 6) {
            const QuadParams<ModInt> p{ModInt(rand_u64(rng, 0, kModPrime - 1), kModPrime),
                                       ModInt(rand_u64(rng, 0, kModPrime - 1), kModPrime)};
            return universality_check(polys, p, "mod(1000000007)");
        }
        if (idx < 8) {
            const QuadParams<Rational> p{
                Rational(rand_bigint(rng, -9, 9), rand_bigint(rng, 1, 9)),
                Rational(rand_bigint(rng, -9, 9), rand_bigint(rng, 1, 9))};
            return universality_check(polys, p, "rational");
        }
        const auto coeff = [&rng] {
            long long c = 0;
            while (c == 0) c = rand_in(rng, -3, 3);
            return BigInt(static_cast<long>(c));
        };
        const QuadParams<BiPoly> p{
            BiPoly::term(coeff(), std::uint32_t(rand_in(rng, 0, 1)), std::uint32_t(rand_in(rng, 0, 1))),
            BiPoly::term(coeff(), std::uint32_t(rand_in(rng, 0, 1)), std::uint32_t(rand_in(rng, 0, 1)))};
        return universality_check(polys, p, "bipoly");
    };
    add_sweep(r, "symbolic/evaluation-universality bigint/mod/rational/bipoly, m <= 64",
              sweep(10, universality_case));
    return r;
}

}  // namespace

VerifyScope parse_scope(std::string_view name) {
    if (name == "engines") return VerifyScope::engines;
    if (name == "matrix") return VerifyScope::matrix;
    if (name == "fibonacci") return VerifyScope::fibonacci;
    if (name == "chebyshev") return VerifyScope::chebyshev;
    if (name == "symbolic") return VerifyScope::symbolic;
    if (name == "all") return VerifyScope::all;
    throw std::invalid_argument("unknown verify scope '" + std::string(name) +
                                "'; expected engines, matrix, fibonacci, chebyshev, symbolic "
                                "or all");
}

std::string scope_name(VerifyScope scope) {
    switch (scope) {
        case VerifyScope::engines: return "engines";
        case VerifyScope::matrix: return "matrix";
        case VerifyScope::fibonacci: return "fibonacci";
        case VerifyScope::chebyshev: return "chebyshev";
        case VerifyScope::symbolic: return "symbolic";
        case VerifyScope::all: return "all";
    }
    throw std::logic_error("unreachable scope");
}

Report run_verify(VerifyScope scope) {
    Report r;
    if (scope == VerifyScope::engines || scope == VerifyScope::all) r.merge(verify_engines());
    if (scope == VerifyScope::matrix || scope == VerifyScope::all) r.merge(verify_matrix());
    if (scope == VerifyScope::fibonacci || scope == VerifyScope::all) r.merge(verify_fibonacci());
    if (scope == VerifyScope::chebyshev || scope == VerifyScope::all) r.merge(verify_chebyshev());
    if (scope == VerifyScope::symbolic || scope == VerifyScope::all) r.merge(verify_symbolic());
    return r;
}

}  // namespace quadring
