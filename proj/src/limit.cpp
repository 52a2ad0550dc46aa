#include "fatcantor/limit.hpp"

#include <algorithm>
#include <stdexcept>

namespace fc {

namespace {

bool is_member_endpoint(const IntervalFamily& fam, const Rational& x) {
    auto it = std::lower_bound(fam.members.begin(), fam.members.end(), x,
                               [](const ClosedInterval& iv, const Rational& v) { return iv.hi < v; });
    return it != fam.members.end() && (it->lo == x || it->hi == x);
}

}  // namespace

CertifiedValue eval_limit(const ParamSequence& seq, const Rational& x, const Rational& tol) {
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("eval_limit: x outside [0,1]: " + x.str());
    if (tol <= Rational(0)) throw std::invalid_argument("eval_limit: tol must be positive");

    // Once x falls out of A_e, every later refinement leaves it alone,
    // so f(x) = f_{e-1}(x) exactly. Member endpoints are exact too.
    int endpoint_level = 0;
    for (int k = 1; k <= seq.depth; ++k) {
        IntervalFamily fam = build_intervals(seq, k);
        if (!family_contains(fam, x)) {
            if (k <= seq.depth - 1)
                return {build_fk(seq, k - 1)(x), Rational(0), k - 1};
            break;
        }
        if (endpoint_level == 0 && is_member_endpoint(fam, x)) {
            endpoint_level = k;
            break;
        }
    }
    if (endpoint_level > 0 && endpoint_level <= seq.depth - 1)
        return {build_fk(seq, endpoint_level - 1)(x), Rational(0), endpoint_level - 1};

    int k = 0;
    while (pow2(-k) > tol) ++k;
    if (k > seq.depth - 2)
        throw std::out_of_range("eval_limit: depth " + std::to_string(seq.depth) +
                                " cannot certify tolerance " + tol.str() + " at x = " + x.str());
    return {build_fk(seq, k)(x), pow2(-k), k};
}

Rational eval_limit_at_family_endpoint(const ParamSequence& seq, const Rational& x, int k) {
    if (k < 1 || k > seq.depth) throw std::out_of_range("eval_limit_at_family_endpoint: bad level");
    IntervalFamily fam = build_intervals(seq, k);
    if (!is_member_endpoint(fam, x))
        throw std::invalid_argument("eval_limit_at_family_endpoint: " + x.str() +
                                    " is not a member endpoint at level " + std::to_string(k));
    return build_fk(seq, k - 1)(x);
}

CertifiedValue g_value(const CertifiedValue& fval) {
    return {fval.value + Rational(2, 3), fval.radius, fval.level_used};
}

LipschitzBound limit_lipschitz_bound(const ParamSequence& seq, int max_level) {
    int cap = std::min(max_level, seq.depth - 2);
    if (cap < 0) cap = 0;
    auto fs = build_f_sequence(seq, cap);
    Rational best(0);
    for (const auto& f : fs) best = max(best, f.lipschitz_constant());
    return {Rational(1, 2), best};
}

}  // namespace fc
