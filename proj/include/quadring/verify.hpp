#pragma once

/// Named invariant sweeps at pinned sizes, runnable from the CLI and the
/// acceptance suite. Sweeps evaluate independent cases in parallel when
/// OpenMP is enabled; inputs are derived from fixed seeds and results are
/// aggregated in slot order, so output is identical at any thread count.

#include <string>
#include <string_view>

#include "quadring/report.hpp"

namespace quadring {

enum class VerifyScope { engines, matrix, fibonacci, chebyshev, symbolic, all };

VerifyScope parse_scope(std::string_view name);  // throws std::invalid_argument
std::string scope_name(VerifyScope scope);

Report run_verify(VerifyScope scope);

}  // namespace quadring
