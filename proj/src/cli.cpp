#include "quadring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadring/bench.hpp"
#include "quadring/bigint.hpp"
#include "quadring/bipoly.hpp"
#include "quadring/fibapp.hpp"
#include "quadring/mat2.hpp"
#include "quadring/modint.hpp"
#include "quadring/quadratic.hpp"
#include "quadring/report.hpp"
#include "quadring/textio.hpp"
#include "quadring/verify.hpp"

namespace quadring::cli {

namespace {

using nlohmann::json;

// Plain output stays in the input grammar of the same subcommand: bare
// decimals and "a,b;c,d" matrices. Residues print without their modulus;
// the modulus is part of the invocation, not the value.
std::string plain(const BigInt& v) { return v.to_decimal(); }
std::string plain(const ModInt& v) { return std::to_string(v.residue()); }

template <class R>
std::string plain_mat(const Mat2<R>& m) {
    return plain(m.e11) + "," + plain(m.e12) + ";" + plain(m.e21) + "," + plain(m.e22);
}

std::string ring_label(const std::optional<std::uint64_t>& modulus) {
    return modulus ? "mod(" + std::to_string(*modulus) + ")" : "bigint";
}

struct ScalarOpts {
    std::string t, d;
    std::uint64_t m = 0;
    std::string engine = "doubling";
    std::optional<std::uint64_t> modulus;
    bool as_json = false;
};

struct MatOpts {
    std::string matrix;
    std::uint64_t m = 0;
    std::string engine = "doubling";
    std::optional<std::uint64_t> modulus;
    bool as_json = false;
};

struct SeqOpts {
    std::uint64_t n = 0;
    std::string engine = "doubling";
    std::optional<std::uint64_t> modulus;
    bool as_json = false;
};

struct FibNmOpts {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool as_json = false;
};

struct SymbolicOpts {
    std::uint64_t m = 0;
    bool as_json = false;
};

struct VerifyOpts {
    std::string scope = "all";
    bool as_json = false;
};

struct BenchOpts {
    std::vector<std::uint64_t> ms{256, 4096, 65536};
    std::vector<std::string> engines{"iterative", "binomial", "doubling"};
    std::string ring = "bigint";
    std::uint64_t modulus = 1000000007;
    std::string t = "1";
    std::string d = "-1";
    bool as_json = false;
};

int exec_pm(const ScalarOpts& o, std::ostream& out) {
    const Engine engine = parse_engine(o.engine);
    const BigInt t = parse_bigint_text(o.t);
    const BigInt d = parse_bigint_text(o.d);
    std::string value;
    if (o.modulus) {
        const QuadParams<ModInt> p{ModInt::reduce(t, *o.modulus), ModInt::reduce(d, *o.modulus)};
        value = plain(lucas_u(p, o.m, engine));
    } else {
        value = plain(lucas_u(QuadParams<BigInt>{t, d}, o.m, engine));
    }
    if (o.as_json)
        out << json{{"subcommand", "pm"},     {"engine", engine_name(engine)},
                    {"ring", ring_label(o.modulus)}, {"t", t.to_decimal()},
                    {"d", d.to_decimal()},    {"m", std::to_string(o.m)},
                    {"value", value}}
                   .dump()
            << "\n";
    else
        out << value << "\n";
    return 0;
}

int exec_xpow(const ScalarOpts& o, std::ostream& out) {
    const Engine engine = parse_engine(o.engine);
    const BigInt t = parse_bigint_text(o.t);
    const BigInt d = parse_bigint_text(o.d);
    std::string a, b;
    if (o.modulus) {
        const QuadParams<ModInt> p{ModInt::reduce(t, *o.modulus), ModInt::reduce(d, *o.modulus)};
        const auto f = x_power(p, o.m, engine);
        a = plain(f.a);
        b = plain(f.b);
    } else {
        const auto f = x_power(QuadParams<BigInt>{t, d}, o.m, engine);
        a = plain(f.a);
        b = plain(f.b);
    }
    if (o.as_json)
        out << json{{"subcommand", "xpow"},   {"engine", engine_name(engine)},
                    {"ring", ring_label(o.modulus)}, {"t", t.to_decimal()},
                    {"d", d.to_decimal()},    {"m", std::to_string(o.m)},
                    {"a", a},                 {"b", b}}
                   .dump()
            << "\n";
    else
        out << a << "," << b << "\n";
    return 0;
}

int exec_matpow(const MatOpts& o, std::ostream& out) {
    const Engine engine = parse_engine(o.engine);
    const Mat2<BigInt> m = parse_mat2_text(o.matrix);
    std::string value;
    if (o.modulus) {
        const std::uint64_t n = *o.modulus;
        const Mat2<ModInt> mm{ModInt::reduce(m.e11, n), ModInt::reduce(m.e12, n),
                              ModInt::reduce(m.e21, n), ModInt::reduce(m.e22, n)};
        value = plain_mat(pow_ch(mm, o.m, engine));
    } else {
        value = plain_mat(pow_ch(m, o.m, engine));
    }
    if (o.as_json)
        out << json{{"subcommand", "matpow"}, {"engine", engine_name(engine)},
                    {"ring", ring_label(o.modulus)}, {"matrix", plain_mat(m)},
                    {"m", std::to_string(o.m)},      {"value", value}}
                   .dump()
            << "\n";
    else
        out << value << "\n";
    return 0;
}

int exec_fib(const SeqOpts& o, std::ostream& out) {
    const Engine engine = parse_engine(o.engine);
    std::string value;
    if (o.modulus) {
        const std::uint64_t n = *o.modulus;
        const QuadParams<ModInt> p{ModInt(1, n), -ModInt(1, n)};
        value = plain(lucas_u(p, o.n, engine));
    } else {
        value = plain(lucas_u(QuadParams<BigInt>{BigInt(1), BigInt(-1)}, o.n, engine));
    }
    if (o.as_json)
        out << json{{"subcommand", "fib"},
                    {"engine", engine_name(engine)},
                    {"ring", ring_label(o.modulus)},
                    {"n", std::to_string(o.n)},
                    {"value", value}}
                   .dump()
            << "\n";
    else
        out << value << "\n";
    return 0;
}

int exec_lucas(const SeqOpts& o, std::ostream& out) {
    std::string value;
    if (o.modulus) {
        const std::uint64_t n = *o.modulus;
        const QuadParams<ModInt> p{ModInt(1, n), -ModInt(1, n)};
        value = plain(companion_pair(p, o.n).v);
    } else {
        value = plain(lucas_number(o.n));
    }
    if (o.as_json)
        out << json{{"subcommand", "lucas"},
                    {"ring", ring_label(o.modulus)},
                    {"n", std::to_string(o.n)},
                    {"value", value}}
                   .dump()
            << "\n";
    else
        out << value << "\n";
    return 0;
}

int exec_fibnm(const FibNmOpts& o, std::ostream& out, std::ostream& err) {
    if (o.n != 0 && o.m > std::numeric_limits<std::uint64_t>::max() / o.n)
        throw std::invalid_argument("n*m exceeds the supported index range");
    const BigInt fnm = fib_nm_identity(o.n, o.m);
    const BigInt check = fibonacci(o.n * o.m);
    const bool pass = fnm == check;
    if (o.as_json) {
        out << json{{"fnm", fnm.to_decimal()}, {"check", check.to_decimal()}, {"pass", pass}}.dump()
            << "\n";
    } else {
        out << fnm.to_decimal() << "\n";
        if (!pass)
            err << "cross-check failed: direct F_{n*m} = " << check.to_decimal() << "\n";
    }
    return pass ? 0 : 1;
}

int exec_symbolic(const SymbolicOpts& o, std::ostream& out) {
    const BiPoly p = lucas_u_symbolic(o.m);
    if (o.as_json)
        out << json{{"subcommand", "symbolic"}, {"m", std::to_string(o.m)}, {"value", p.render()}}
                   .dump()
            << "\n";
    else
        out << p.render() << "\n";
    return 0;
}

int exec_verify(const VerifyOpts& o, std::ostream& out) {
    const Report rep = run_verify(parse_scope(o.scope));
    if (o.as_json) {
        out << to_json_text(rep, false) << "\n";
    } else {
        print_plain(rep, out);
        if (rep.all_pass())
            out << "ok: " << rep.checks().size() << " checks passed\n";
        else
            out << "FAIL: " << rep.failure_count() << " of " << rep.checks().size()
                << " checks failed\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int exec_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
    if (o.ms.empty()) throw std::invalid_argument("bench needs at least one --ms value");
    BenchConfig cfg;
    cfg.ms = o.ms;
    cfg.engines.clear();
    for (const auto& name : o.engines) cfg.engines.push_back(parse_engine(name));
    if (o.ring == "mod") {
        cfg.use_mod = true;
        cfg.modulus = o.modulus;
    } else if (o.ring != "bigint") {
        throw std::invalid_argument("unknown ring '" + o.ring + "'; expected bigint or mod");
    }
    cfg.t = parse_bigint_text(o.t);
    cfg.d = parse_bigint_text(o.d);

    const auto records = run_bench(cfg, err);
    if (o.as_json) {
        json arr = json::array();
        for (const auto& r : records)
            arr.push_back(json{{"subcommand", r.subcommand},
                               {"engine", r.engine},
                               {"ring", r.ring},
                               {"m", std::to_string(r.m)},
                               {"multiplications", std::to_string(r.multiplications)},
                               {"additions", std::to_string(r.additions)},
                               {"wall_time_ns", std::to_string(r.wall_time_ns)}});
        out << json{{"records", arr}}.dump() << "\n";
    } else {
        for (const auto& r : records)
            out << r.subcommand << " engine=" << r.engine << " ring=" << r.ring << " m=" << r.m
                << " muls=" << r.multiplications << " adds=" << r.additions
                << " wall_ns=" << r.wall_time_ns << "\n";
    }
    return 0;
}

void add_json_flag(CLI::App* sub, bool& target) {
    sub->add_flag("--json", target, "machine-readable output, numeric payloads as strings");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact powers in quadratic algebras: x^m = P_m(t,d) x - d P_{m-1}(t,d)"};
    app.require_subcommand(1);

    ScalarOpts pm_o;
    auto* pm_cmd = app.add_subcommand("pm", "P_m(t, d), the coefficient sequence itself");
    pm_cmd->add_option("--t", pm_o.t, "parameter t, signed decimal")->required();
    pm_cmd->add_option("--d", pm_o.d, "parameter d, signed decimal")->required();
    pm_cmd->add_option("--m", pm_o.m, "index m >= 0")->required();
    pm_cmd->add_option("--engine", pm_o.engine, "iterative | binomial | doubling")
        ->capture_default_str();
    pm_cmd->add_option("--mod", pm_o.modulus, "compute in Z/nZ, n >= 2");
    add_json_flag(pm_cmd, pm_o.as_json);

    ScalarOpts xpow_o;
    auto* xpow_cmd = app.add_subcommand("xpow", "coefficients (a, b) of x^m = a x + b");
    xpow_cmd->add_option("--t", xpow_o.t, "parameter t, signed decimal")->required();
    xpow_cmd->add_option("--d", xpow_o.d, "parameter d, signed decimal")->required();
    xpow_cmd->add_option("--m", xpow_o.m, "exponent m >= 0 (binomial engine needs m >= 1)")
        ->required();
    xpow_cmd->add_option("--engine", xpow_o.engine, "iterative | binomial | doubling")
        ->capture_default_str();
    xpow_cmd->add_option("--mod", xpow_o.modulus, "compute in Z/nZ, n >= 2");
    add_json_flag(xpow_cmd, xpow_o.as_json);

    MatOpts mat_o;
    auto* mat_cmd = app.add_subcommand("matpow", "M^m for a 2x2 matrix via trace/det reduction");
    mat_cmd->add_option("--matrix", mat_o.matrix, "row-major \"a,b;c,d\", signed decimals")
        ->required();
    mat_cmd->add_option("--m", mat_o.m, "exponent m >= 0")->required();
    mat_cmd->add_option("--engine", mat_o.engine, "iterative | binomial | doubling")
        ->capture_default_str();
    mat_cmd->add_option("--mod", mat_o.modulus, "compute in Z/nZ, n >= 2");
    add_json_flag(mat_cmd, mat_o.as_json);

    SeqOpts fib_o;
    auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_n, exact at any size");
    fib_cmd->add_option("--n", fib_o.n, "index n >= 0")->required();
    fib_cmd->add_option("--engine", fib_o.engine, "iterative | binomial | doubling")
        ->capture_default_str();
    fib_cmd->add_option("--mod", fib_o.modulus, "compute in Z/nZ, n >= 2");
    add_json_flag(fib_cmd, fib_o.as_json);

    SeqOpts lucas_o;
    auto* lucas_cmd = app.add_subcommand("lucas", "Lucas number L_n via the companion sequence");
    lucas_cmd->add_option("--n", lucas_o.n, "index n >= 0")->required();
    lucas_cmd->add_option("--mod", lucas_o.modulus, "compute in Z/nZ, n >= 2");
    add_json_flag(lucas_cmd, lucas_o.as_json);

    FibNmOpts fibnm_o;
    auto* fibnm_cmd =
        app.add_subcommand("fibnm", "F_{n*m} from the Lucas-number expansion, cross-checked");
    fibnm_cmd->add_option("--n", fibnm_o.n, "outer index n >= 1")->required();
    fibnm_cmd->add_option("--m", fibnm_o.m, "inner index m >= 1")->required();
    add_json_flag(fibnm_cmd, fibnm_o.as_json);

    SymbolicOpts sym_o;
    auto* sym_cmd = app.add_subcommand("symbolic", "P_m(T, D) as a polynomial in Z[T, D]");
    sym_cmd->add_option("--m", sym_o.m, "index m >= 0")->required();
    add_json_flag(sym_cmd, sym_o.as_json);

    VerifyOpts verify_o;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant sweeps");
    verify_cmd
        ->add_option("--scope", verify_o.scope,
                     "engines | matrix | fibonacci | chebyshev | symbolic | all")
        ->capture_default_str();
    add_json_flag(verify_cmd, verify_o.as_json);

    BenchOpts bench_o;
    auto* bench_cmd = app.add_subcommand("bench", "compare engines: operation counts and timing");
    bench_cmd->add_option("--ms", bench_o.ms, "indices to measure")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--engines", bench_o.engines, "engines to measure")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--ring", bench_o.ring, "bigint | mod")->capture_default_str();
    bench_cmd->add_option("--mod", bench_o.modulus, "modulus when --ring mod")
        ->capture_default_str();
    bench_cmd->add_option("--t", bench_o.t, "parameter t")->capture_default_str();
    bench_cmd->add_option("--d", bench_o.d, "parameter d")->capture_default_str();
    add_json_flag(bench_cmd, bench_o.as_json);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));

        if (app.got_subcommand(pm_cmd)) return exec_pm(pm_o, out);
        if (app.got_subcommand(xpow_cmd)) return exec_xpow(xpow_o, out);
        if (app.got_subcommand(mat_cmd)) return exec_matpow(mat_o, out);
        if (app.got_subcommand(fib_cmd)) return exec_fib(fib_o, out);
        if (app.got_subcommand(lucas_cmd)) return exec_lucas(lucas_o, out);
        if (app.got_subcommand(fibnm_cmd)) return exec_fibnm(fibnm_o, out, err);
        if (app.got_subcommand(sym_cmd)) return exec_symbolic(sym_o, out);
        if (app.got_subcommand(verify_cmd)) return exec_verify(verify_o, out);
        if (app.got_subcommand(bench_cmd)) return exec_bench(bench_o, out, err);
        err << "error: no subcommand dispatched\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace quadring::cli
