#pragma once

// Structured pass/fail reports: a flat clause list that the CLI serialises
// and the tests inspect.

#include <string>
#include <vector>

namespace gptcones {

struct Clause {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CheckReport {
    std::vector<Clause> clauses;

    void add(std::string name, bool ok, std::string detail = "") {
        clauses.push_back(Clause{std::move(name), ok, std::move(detail)});
    }

    bool ok() const {
        for (const auto& c : clauses)
            if (!c.ok) return false;
        return true;
    }

    const Clause* first_failure() const {
        for (const auto& c : clauses)
            if (!c.ok) return &c;
        return nullptr;
    }
};

}  // namespace gptcones
