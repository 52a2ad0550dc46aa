#include "fatcantor/attractor.hpp"

#include <algorithm>
#include <stdexcept>

namespace fc {

MeasureBounds attractor_measure_bounds(const ParamSequence& seq, int K) {
    if (K < 2 || K > seq.depth)
        throw std::out_of_range("attractor_measure_bounds: K must be in [2, depth]");
    MeasureBounds mb;
    mb.level = K;
    mb.upper = family_measure(build_intervals(seq, K));
    // measure(A_K) - measure(A_*) = sum_{k>=K} 2^{k-1} * 2 eps_k
    Rational tail(0);
    for (int k = K; k <= seq.depth; ++k) tail += pow2(k) * seq.epsilon(k);
    // beyond the known depth: 2^j eps_j < 4^(1-j), summed geometrically
    tail += Rational(4, 3) * Rational(4).pow(-seq.depth);
    mb.tail_bound = tail;
    mb.lower = mb.upper - tail;
    return mb;
}

SelfSimilarityResult verify_self_similarity(const ParamSequence& seq, int k) {
    if (k < 1 || k + 2 > seq.depth)
        throw std::out_of_range("verify_self_similarity: need k + 2 <= depth");
    IntervalFamily fam_k = build_intervals(seq, k);
    IntervalFamily fam_next = build_intervals(seq, k + 1);
    // Member endpoints evaluate exactly through f_{k-1} (endpoint rule).
    PiecewiseLinearMap f_prev = build_fk(seq, k - 1);
    Rational shift(2, 3);
    std::vector<ClosedInterval> images;
    images.reserve(fam_k.members.size() * 2);
    for (const auto& iv : fam_k.members) {
        Rational fa = f_prev(iv.lo);
        Rational fb = f_prev(iv.hi);
        images.emplace_back(fa, fb);
        images.emplace_back(fa + shift, fb + shift);
    }
    std::sort(images.begin(), images.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
    if (images.size() != fam_next.members.size())
        return {false, k,
                "image count " + std::to_string(images.size()) + " != " +
                    std::to_string(fam_next.members.size())};
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!(images[i] == fam_next.members[i]))
            return {false, k, "image " + images[i].str() + " != member " + fam_next.members[i].str()};
    return {true, k, ""};
}

Membership membership(const ParamSequence& seq, const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("membership: x outside [0,1]: " + x.str());
    if (auto level = ejection_level(seq, x)) return {true, *level};
    return {false, seq.depth};
}

}  // namespace fc
