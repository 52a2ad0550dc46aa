#pragma once

#include "fatcantor/plf.hpp"
#include "fatcantor/report.hpp"

#include <vector>

namespace fc {

// x -> slope*x + intercept with 0 < |slope| < 1, sending [0,1] into [0,1].
struct AffineMap {
    Rational slope;
    Rational intercept;

    ClosedInterval image(const ClosedInterval& iv) const {
        Rational a = slope * iv.lo + intercept;
        Rational b = slope * iv.hi + intercept;
        return a <= b ? ClosedInterval(a, b) : ClosedInterval(b, a);
    }
};

struct SimilitudeIFS {
    std::vector<AffineMap> maps;
};

// Checks 0 < |a_n| < 1, images inside [0,1], open images pairwise
// disjoint, and union of images strictly smaller than [0,1].
ValidationReport validate_condition_11(const SimilitudeIFS& ifs);

// lambda(A_k) for k = 1..K, computed two ways and cross-checked exactly:
// the closed form (1-q)^{k-1} with 1-q = sum |a_n|, and interval-family
// iteration (through the generic Hutchinson step for orientation-
// preserving maps, a direct affine image otherwise). Throws on an invalid
// IFS (with the failing clause) or on any cross-check mismatch.
std::vector<Rational> similitude_level_measures(const SimilitudeIFS& ifs, int K);

// Parses "a1,b1;a2,b2;..." with exact rational entries.
SimilitudeIFS parse_similitude_spec(const std::string& spec);

}  // namespace fc
