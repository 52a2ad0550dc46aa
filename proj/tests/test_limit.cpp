#include "fatcantor/limit.hpp"

#include <doctest.h>

#include <random>

using fc::CertifiedValue;
using fc::Rational;

namespace {

const fc::ParamSequence& seq12() {
    static fc::ParamSequence seq = fc::generate_params(12);
    return seq;
}

Rational tol10() { return fc::pow2(-10); }

}  // namespace

TEST_CASE("exact values at fixed points and gap points") {
    CertifiedValue v0 = fc::eval_limit(seq12(), Rational(0), tol10());
    CHECK(v0.value == Rational(0));
    CHECK(v0.exact());

    CertifiedValue v1 = fc::eval_limit(seq12(), Rational(1), tol10());
    CHECK(v1.value == Rational(1, 3));
    CHECK(v1.exact());

    // 1/2 leaves A_2, so f = f_1 there
    CertifiedValue vh = fc::eval_limit(seq12(), Rational(1, 2), tol10());
    CHECK(vh.value == Rational(1, 6));
    CHECK(vh.exact());
}

TEST_CASE("family endpoint values") {
    CHECK(fc::eval_limit_at_family_endpoint(seq12(), Rational(1, 3), 2) == Rational(13, 96));
    CHECK(fc::eval_limit_at_family_endpoint(seq12(), Rational(0), 1) == Rational(0));
    CHECK(fc::eval_limit_at_family_endpoint(seq12(), Rational(1), 1) == Rational(1, 3));
    CHECK_THROWS_AS(fc::eval_limit_at_family_endpoint(seq12(), Rational(1, 2), 2),
                    std::invalid_argument);
}

TEST_CASE("endpoint values are stable across levels") {
    for (int k = 2; k <= 6; ++k) {
        auto fam = fc::build_intervals(seq12(), k);
        for (const auto& iv : fam.members) {
            Rational at_k = fc::eval_limit_at_family_endpoint(seq12(), iv.lo, k);
            for (int l = k + 1; l <= 8; ++l)
                CHECK(fc::eval_limit_at_family_endpoint(seq12(), iv.lo, l) == at_k);
        }
        if (fam.members.size() >= 8) break;  // enough coverage
    }
}

TEST_CASE("certified values respect the requested tolerance and nest") {
    // an attractor point that is never ejected and never an endpoint is
    // hard to name; sample a non-endpoint member midpoint deep down and
    // evaluate it with a loose tolerance instead
    auto fam = fc::build_intervals(seq12(), 5);
    Rational x = (fam.members[3].lo + fam.members[3].hi) / Rational(2);
    // x is ejected at level 6, still exact
    CertifiedValue v = fc::eval_limit(seq12(), x, tol10());
    CHECK(v.exact());

    // force the certified path with a point kept inside through depth:
    // endpoints are exact, so perturb the tolerance instead on a point
    // whose ejection is beyond the usable levels
    auto deep = fc::generate_params(6);
    auto fam5 = fc::build_intervals(deep, 5);
    Rational y = (fam5.members[0].lo + fam5.members[0].hi) / Rational(2);
    // y leaves A_6 but f_5 is out of reach at depth 6, so the value is certified
    CertifiedValue cv = fc::eval_limit(deep, y, Rational(1, 8));
    CHECK(cv.radius <= Rational(1, 8));
    if (!cv.exact()) {
        CertifiedValue tighter = fc::eval_limit(deep, y, Rational(1, 16));
        CHECK(tighter.radius <= cv.radius);
        CHECK(tighter.value - tighter.radius >= cv.value - cv.radius);
        CHECK(tighter.value + tighter.radius <= cv.value + cv.radius);
    }
}

TEST_CASE("tolerance out of reach raises a depth error") {
    auto shallow = fc::generate_params(4);
    // 1/10 stays in every buildable family level of this short sequence?
    // Use a member midpoint at the last level to force the certified path.
    auto fam = fc::build_intervals(shallow, 4);
    Rational x = (fam.members[0].lo + fam.members[0].hi) / Rational(2);
    CHECK_THROWS_AS(fc::eval_limit(shallow, x, fc::pow2(-20)), std::out_of_range);
}

TEST_CASE("g is f shifted by 2/3") {
    CertifiedValue f0{Rational(0), Rational(0), 1};
    CHECK(fc::g_value(f0).value == Rational(2, 3));
    CertifiedValue f1{Rational(1, 3), Rational(0), 1};
    CHECK(fc::g_value(f1).value == Rational(1));
    CertifiedValue fa{Rational(1, 6), fc::pow2(-10), 10};
    CertifiedValue ga = fc::g_value(fa);
    CHECK(ga.value == Rational(5, 6));
    CHECK(ga.radius == fc::pow2(-10));
}

TEST_CASE("monotonicity at exactly evaluable points") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(0, 1 << 12);
    std::vector<std::pair<Rational, CertifiedValue>> pts;
    for (int i = 0; i < 40; ++i) {
        Rational x(num(rng), 1 << 12);
        pts.emplace_back(x, fc::eval_limit(seq12(), x, tol10()));
    }
    for (const auto& [a, va] : pts)
        for (const auto& [b, vb] : pts) {
            if (!(a < b) || !va.exact() || !vb.exact()) continue;
            CHECK(va.value < vb.value);
            // contraction with factor 1/2 at exact points
            CHECK(vb.value - va.value <= (b - a) / Rational(2));
        }
}

TEST_CASE("limit Lipschitz bound") {
    auto lb = fc::limit_lipschitz_bound(seq12(), 5);
    CHECK(lb.certified == Rational(1, 2));
    CHECK(lb.finite_level_max < Rational(1, 2));
    CHECK(lb.finite_level_max >= Rational(13, 32));  // f_1 already reaches 13/32
}
