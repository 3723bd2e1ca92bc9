#include "quadring/report.hpp"

#include <ostream>

#include <json.hpp>

namespace quadring {

void print_plain(const Report& report, std::ostream& out) {
    for (const auto& c : report.checks()) {
        if (c.pass) {
            out << "[PASS] " << c.name << "\n";
        } else {
            out << "[FAIL] " << c.name << ": expected " << c.expected << ", got " << c.actual
                << "\n";
        }
    }
}

std::string to_json_text(const Report& report, bool pretty) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : report.checks()) {
        arr.push_back({{"assertion", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass}});
    }
    nlohmann::json doc{{"checks", arr}, {"pass", report.all_pass()}};
    return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace quadring
