#include "quadring/textio.hpp"

#include <array>
#include <vector>

namespace quadring {

namespace {

constexpr std::string_view kUnicodeMinus = "\xe2\x88\x92";

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_spaces() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    BigInt number() {
        skip_spaces();
        bool negative = false;
        if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
            negative = true;
            pos_ += kUnicodeMinus.size();
        } else if (!at_end() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t digits_start = pos_;
        while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == digits_start)
            throw ParseError("expected a decimal number", at_end() ? text_.size() : digits_start);
        BigInt value = BigInt::from_decimal(text_.substr(digits_start, pos_ - digits_start));
        return negative ? -value : value;
    }

    void expect(char c) {
        skip_spaces();
        if (at_end() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void expect_end() {
        skip_spaces();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BigInt parse_bigint_text(std::string_view text) {
    Scanner s(text);
    BigInt v = s.number();
    s.expect_end();
    return v;
}

Mat2<BigInt> parse_mat2_text(std::string_view text) {
    Scanner s(text);
    std::array<BigInt, 4> e;
    e[0] = s.number();
    s.expect(',');
    e[1] = s.number();
    s.expect(';');
    e[2] = s.number();
    s.expect(',');
    e[3] = s.number();
    s.expect_end();
    return {e[0], e[1], e[2], e[3]};
}

std::pair<BigInt, BigInt> parse_pair_text(std::string_view text) {
    Scanner s(text);
    BigInt a = s.number();
    s.expect(',');
    BigInt b = s.number();
    s.expect_end();
    return {std::move(a), std::move(b)};
}

}  // namespace quadring
