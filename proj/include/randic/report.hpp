#ifndef RANDIC_REPORT_HPP
#define RANDIC_REPORT_HPP

#include <string>
#include <vector>

namespace randic {

/// One pass/fail line of a verification harness.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const CheckReport& other) {
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }
};

}  // namespace randic

#endif
