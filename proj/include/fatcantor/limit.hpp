#pragma once

#include "fatcantor/params.hpp"
#include "fatcantor/plf.hpp"

namespace fc {

// Rational midpoint plus rational error radius; radius 0 asserts the
// value is exact.
struct CertifiedValue {
    Rational value;
    Rational radius;
    int level_used = 0;

    bool exact() const { return radius == Rational(0); }
};

// Value of the limit map f at x. Exact (radius 0) when x leaves some A_k
// or is a member endpoint; otherwise f_k(x) with the tail radius 2^-k for
// the smallest k with 2^-k <= tol. Throws when the depth cannot reach tol.
CertifiedValue eval_limit(const ParamSequence& seq, const Rational& x, const Rational& tol);

// f(x) = f_{k-1}(x) when x is an endpoint of a member of I_k; exact.
// Throws if x is not an endpoint at level k.
Rational eval_limit_at_family_endpoint(const ParamSequence& seq, const Rational& x, int k);

// g = f + 2/3; translation keeps the radius.
CertifiedValue g_value(const CertifiedValue& fval);

struct LipschitzBound {
    Rational certified;         // 1/2, inherited from every finite level
    Rational finite_level_max;  // exact max of L(f_k) over scanned levels
};

// Scans f_0..f_{max_level} (capped at depth-2).
LipschitzBound limit_lipschitz_bound(const ParamSequence& seq, int max_level);

}  // namespace fc
