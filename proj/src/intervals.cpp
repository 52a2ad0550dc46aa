#include "fatcantor/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace fc {

IntervalFamily build_intervals(const ParamSequence& seq, int k) {
    if (k < 1) throw std::invalid_argument("build_intervals: k must be >= 1");
    if (k > seq.depth) throw std::out_of_range("build_intervals: level exceeds sequence depth");
    IntervalFamily fam;
    fam.level = 1;
    fam.members.emplace_back(Rational(0), Rational(1));
    for (int level = 1; level < k; ++level) {
        const Rational& eps = seq.epsilon(level);
        IntervalFamily next;
        next.level = level + 1;
        next.members.reserve(fam.members.size() * 2);
        for (const auto& iv : fam.members) {
            Rational mid = (iv.lo + iv.hi) / Rational(2);
            next.members.emplace_back(iv.lo, mid - eps);
            next.members.emplace_back(mid + eps, iv.hi);
        }
        fam = std::move(next);
    }
    return fam;
}

Rational family_measure(const IntervalFamily& fam) {
    Rational total(0);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (i > 0 && fam.members[i].lo < fam.members[i - 1].hi)
            throw std::invalid_argument("family_measure: members overlap at " +
                                        fam.members[i - 1].str() + " / " + fam.members[i].str());
        total += fam.members[i].width();
    }
    return total;
}

std::vector<OpenInterval> gap_family(const IntervalFamily& fam) {
    std::vector<OpenInterval> gaps;
    Rational cursor(0);
    for (const auto& iv : fam.members) {
        if (cursor < iv.lo) gaps.push_back({cursor, iv.lo});
        cursor = iv.hi;
    }
    if (cursor < Rational(1)) gaps.push_back({cursor, Rational(1)});
    return gaps;
}

bool family_contains(const IntervalFamily& fam, const Rational& x) {
    auto it = std::upper_bound(fam.members.begin(), fam.members.end(), x,
                               [](const Rational& v, const ClosedInterval& iv) { return v < iv.lo; });
    if (it == fam.members.begin()) return false;
    return std::prev(it)->contains(x);
}

std::optional<int> ejection_level(const ParamSequence& seq, const Rational& x) {
    IntervalFamily fam = build_intervals(seq, 1);
    for (int k = 1; k <= seq.depth; ++k) {
        if (k > 1) fam = build_intervals(seq, k);
        if (!family_contains(fam, x)) return k;
    }
    return std::nullopt;
}

GapWitness nowhere_dense_witness(const ParamSequence& seq, const Rational& c, const Rational& r) {
    if (r <= Rational(0)) throw std::invalid_argument("nowhere_dense_witness: r must be positive");
    Rational lo = max(c - r, Rational(0));
    Rational hi = min(c + r, Rational(1));
    if (lo >= hi) throw std::invalid_argument("nowhere_dense_witness: window misses (0,1)");
    for (int k = 1; k <= seq.depth; ++k) {
        IntervalFamily fam = build_intervals(seq, k);
        bool meets = false;
        for (const auto& iv : fam.members) {
            if (iv.hi > lo && iv.lo < hi) { meets = true; break; }
        }
        if (!meets) return {k, OpenInterval{lo, hi}};
        for (const auto& gap : gap_family(fam))
            if (lo <= gap.lo && gap.hi <= hi) return {k, gap};
    }
    throw std::runtime_error("nowhere_dense_witness: depth " + std::to_string(seq.depth) +
                             " exhausted without a gap inside (" + lo.str() + "," + hi.str() + ")");
}

}  // namespace fc
