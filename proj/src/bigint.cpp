#include "quadring/bigint.hpp"

namespace quadring {

namespace {

// U+2212 MINUS SIGN in UTF-8
constexpr std::string_view kUnicodeMinus = "\xe2\x88\x92";

}  // namespace

BigInt BigInt::from_decimal(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (rest.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
        negative = true;
        rest.remove_prefix(kUnicodeMinus.size());
    } else if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    if (rest.empty())
        throw std::invalid_argument("expected decimal digits in \"" + std::string(text) + "\"");
    for (char c : rest) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid decimal digit '" + std::string(1, c) + "' in \"" +
                                        std::string(text) + "\"");
    }
    mpz_class v;
    v.set_str(std::string(rest), 10);
    if (negative) v = -v;
    return BigInt(std::move(v));
}

std::uint64_t BigInt::mod_u64(std::uint64_t modulus) const {
    static_assert(sizeof(unsigned long) == 8, "requires 64-bit unsigned long");
    return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(modulus));
}

}  // namespace quadring
