#pragma once

/// Engine comparison harness. Each (m, engine) pair yields one record with
/// exact operation counts from a Counted run and the best-of-three wall
/// time of uninstrumented runs. Counts are deterministic and suitable for
/// assertions; wall times are reported only.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadring/bigint.hpp"
#include "quadring/quadratic.hpp"

namespace quadring {

struct BenchRecord {
    std::string subcommand;  // what was measured; always "pm" today
    std::string engine;
    std::string ring;
    std::uint64_t m = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
    std::uint64_t wall_time_ns = 0;  // always >= 1
};

struct BenchConfig {
    std::vector<std::uint64_t> ms{256, 4096, 65536};
    std::vector<Engine> engines{Engine::iterative, Engine::binomial, Engine::doubling};
    bool use_mod = false;
    std::uint64_t modulus = 1000000007;
    BigInt t = BigInt(1);
    BigInt d = BigInt(-1);
};

/// One record per (m, engine), in configuration order. The binomial engine
/// is skipped for m = 0 with a notice on `notices`.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream& notices);

}  // namespace quadring
