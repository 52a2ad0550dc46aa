#pragma once

#include "fatcantor/interval.hpp"
#include "fatcantor/params.hpp"

#include <optional>
#include <vector>

namespace fc {

// A sorted family of pairwise-disjoint closed intervals. For the level
// families I_k the level is k; derived families keep level = 0.
struct IntervalFamily {
    int level = 0;
    std::vector<ClosedInterval> members;
};

// I_k: I_1 = {[0,1]}, and each member [a,b] of I_k splits into
// [a, (a+b)/2 - eps_k] and [(a+b)/2 + eps_k, b].
IntervalFamily build_intervals(const ParamSequence& seq, int k);

// Exact total length of the members. Throws on an out-of-order or
// overlapping family.
Rational family_measure(const IntervalFamily& fam);

// The open components of [0,1] minus the family, sorted.
std::vector<OpenInterval> gap_family(const IntervalFamily& fam);

// True iff x lies in some member (binary search, exact comparisons).
bool family_contains(const IntervalFamily& fam, const Rational& x);

// First level at which x leaves A_k, or nullopt if x stays inside
// through the whole depth.
std::optional<int> ejection_level(const ParamSequence& seq, const Rational& x);

struct GapWitness {
    int level;
    OpenInterval gap;
};

// Smallest level k whose complement certifies that (c-r, c+r) is not
// contained in A_k: either the window misses A_k entirely (the window
// itself is returned) or a full gap component fits inside the window
// (leftmost such component on ties). Throws if the depth runs out first.
GapWitness nowhere_dense_witness(const ParamSequence& seq, const Rational& c, const Rational& r);

}  // namespace fc
