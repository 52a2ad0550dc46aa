#pragma once

#include "fatcantor/params.hpp"

#include <string>
#include <vector>

namespace fc {

enum class ClaimStatus { pass, fail, unchecked };

const char* to_string(ClaimStatus s);

struct ClaimEntry {
    std::string id;
    std::string anchor;    // the checked statement
    std::string instance;  // the level/parameter range it ran over
    ClaimStatus status = ClaimStatus::fail;
    std::string witness;   // exact violating data on failure, note when unchecked
};

struct VerificationReport {
    std::vector<ClaimEntry> entries;

    int fail_count() const {
        int n = 0;
        for (const auto& e : entries)
            if (e.status == ClaimStatus::fail) ++n;
        return n;
    }
};

// Runs the whole registered claim suite over the sequence: parameter
// constraints, interval-family properties, measure telescoping and lower
// bounds, every f_k assertion, the Cauchy and Lipschitz bounds, endpoint
// stability and the self-similarity identity. Topological claims that
// have no finite check are reported as unchecked. Entry order is fixed,
// so identical inputs give identical reports. Requires
// max_level + 2 <= seq.depth.
VerificationReport run_full_verification(const ParamSequence& seq, int max_level);

}  // namespace fc
