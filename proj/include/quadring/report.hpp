#pragma once

/// Structured pass/fail records. Verification routines return these
/// instead of throwing: a failed assertion is data, not an exception.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace quadring {

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class Report {
public:
    void add(std::string name, std::string expected, std::string actual, bool pass) {
        checks_.push_back({std::move(name), std::move(expected), std::move(actual), pass});
    }
    void add_equal(std::string name, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        add(std::move(name), std::move(expected), std::move(actual), pass);
    }
    void merge(Report other) {
        for (auto& c : other.checks_) checks_.push_back(std::move(c));
    }

    const std::vector<CheckRecord>& checks() const { return checks_; }
    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks_)
            if (!c.pass) ++n;
        return n;
    }

private:
    std::vector<CheckRecord> checks_;
};

/// One line per record: "[PASS] name" / "[FAIL] name: expected ..., got ...".
void print_plain(const Report& report, std::ostream& out);

/// JSON text with every payload as a string (values may be arbitrarily large).
std::string to_json_text(const Report& report, bool pretty);

}  // namespace quadring
