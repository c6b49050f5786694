#pragma once

#include <optional>
#include <string>
#include <vector>

namespace levicyc {

/// Outcome of a list of named structural checks. Validation never throws;
/// failures are recorded here instead.
struct ValidationReport {
    struct Check {
        std::string name;
        bool passed = true;
        std::string detail;
    };

    std::vector<Check> checks;

    bool ok() const {
        for (const auto &c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::optional<Check> first_failure() const {
        for (const auto &c : checks)
            if (!c.passed) return c;
        return std::nullopt;
    }

    bool failed(const std::string &name) const {
        for (const auto &c : checks)
            if (c.name == name && !c.passed) return true;
        return false;
    }

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
};

}  // namespace levicyc
