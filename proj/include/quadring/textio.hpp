#pragma once

/// Strict parsers for the CLI input grammar: signed decimals (ASCII '-'
/// or U+2212 sign) and row-major 2x2 matrices "a,b;c,d". Errors carry the
/// byte position of the offending character.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "quadring/bigint.hpp"
#include "quadring/mat2.hpp"

namespace quadring {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Whole string must be one signed decimal (surrounding spaces allowed).
BigInt parse_bigint_text(std::string_view text);

/// "a,b;c,d", spaces allowed around entries and separators.
Mat2<BigInt> parse_mat2_text(std::string_view text);

/// "a,b" coefficient pair, same entry grammar.
std::pair<BigInt, BigInt> parse_pair_text(std::string_view text);

}  // namespace quadring
