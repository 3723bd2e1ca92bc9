#include "quadring/bipoly.hpp"

namespace quadring {

namespace {

void append_variable(std::string& out, char name, std::uint32_t exp, bool& need_star) {
    if (exp == 0) return;
    if (need_star) out += '*';
    out += name;
    if (exp > 1) {
        out += '^';
        out += std::to_string(exp);
    }
    need_star = true;
}

}  // namespace

std::string BiPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const BigInt abs_c = negative ? -c : c;
        const bool has_vars = mono.t_exp > 0 || mono.d_exp > 0;
        bool need_star = false;
        if (!abs_c.is_one() || !has_vars) {
            out += abs_c.to_decimal();
            need_star = has_vars;
        }
        append_variable(out, 'T', mono.t_exp, need_star);
        append_variable(out, 'D', mono.d_exp, need_star);
    }
    return out;
}

}  // namespace quadring
