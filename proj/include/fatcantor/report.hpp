#pragma once

#include <string>
#include <vector>

namespace fc {

// One checked relation with both sides as exact rational strings.
struct CheckEntry {
    std::string name;      // which constraint
    std::string instance;  // e.g. "k=3"
    bool pass = false;
    std::string lhs;
    std::string relation;  // "<", "=", ...
    std::string rhs;
};

struct ValidationReport {
    std::vector<CheckEntry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const CheckEntry* first_failure() const {
        for (const auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
};

}  // namespace fc
