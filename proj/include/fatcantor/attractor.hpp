#pragma once

#include "fatcantor/intervals.hpp"
#include "fatcantor/limit.hpp"
#include "fatcantor/params.hpp"

#include <string>

namespace fc {

// Certified two-sided bracket of the attractor measure at cut level K:
// upper = measure(A_K), lower = upper - tail_bound, and the true measure
// sits in [lower, upper].
struct MeasureBounds {
    int level = 0;
    Rational upper;
    Rational lower;
    Rational tail_bound;
};

// The tail sums 2^k eps_k exactly up to the known depth and majorizes the
// rest by the geometric bound 2^j eps_j < 4^(1-j).
MeasureBounds attractor_measure_bounds(const ParamSequence& seq, int K);

struct SelfSimilarityResult {
    bool pass = false;
    int level = 0;
    std::string detail;  // offending member on failure
};

// Checks that the f- and g-images of the I_k members reproduce I_{k+1}
// member for member, with exact endpoint values from the endpoint rule.
SelfSimilarityResult verify_self_similarity(const ParamSequence& seq, int k);

struct Membership {
    bool ejected = false;
    int level = 0;  // ejection level, or the full depth when contained
};

// Semi-decision: the first level expelling x, or containment up to depth.
// A point sitting exactly on a gap endpoint counts as inside.
Membership membership(const ParamSequence& seq, const Rational& x);

}  // namespace fc
