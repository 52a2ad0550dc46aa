#pragma once

#include "fatcantor/intervals.hpp"
#include "fatcantor/params.hpp"

#include <vector>

namespace fc {

enum class Monotonicity { strict, weak };

struct Breakpoint {
    Rational x;
    Rational y;
};

// Increasing piecewise-linear map on [0,1] as a sorted breakpoint list;
// evaluation is linear interpolation, range stays within [0,1].
class PiecewiseLinearMap {
public:
    PiecewiseLinearMap(std::vector<Breakpoint> points, Monotonicity mono);

    Rational operator()(const Rational& x) const;

    // Max |slope| over the segments; by the gluing argument this is the
    // global Lipschitz constant.
    Rational lipschitz_constant() const;

    const std::vector<Breakpoint>& points() const { return pts_; }
    Monotonicity monotonicity() const { return mono_; }

private:
    std::vector<Breakpoint> pts_;
    Monotonicity mono_;
};

// sup |p - q| over [0,1]. The difference is piecewise linear, so the sup
// sits on the merged breakpoint grid; no sampling.
Rational sup_diff(const PiecewiseLinearMap& p, const PiecewiseLinearMap& q);

// Image family {[m(a), m(b)]}; touching or overlapping images are merged.
IntervalFamily map_image(const PiecewiseLinearMap& m, const IntervalFamily& fam);

struct IFSDescription {
    std::vector<PiecewiseLinearMap> maps;  // each with Lipschitz constant < 1
};

IFSDescription make_ifs(std::vector<PiecewiseLinearMap> maps);

// One application of the set map S -> union of map images, normalized.
IntervalFamily hutchinson_step(const IFSDescription& ifs, const IntervalFamily& fam);

// Affine map x -> slope*x + intercept on [0,1], as a two-point PLM.
PiecewiseLinearMap affine_plm(const Rational& slope, const Rational& intercept);

// The weakly increasing pair F, G whose attractor is [0,1/3] u [2/3,1].
IFSDescription build_example_FG();

// f_0(x) = x/3; for k >= 1, f_k refines f_{k-1} on each member of I_k by
// the three-piece rule (outer slope w_{k+2}/w_{k+1}, middle slope
// eps_{k+1}/eps_k) and agrees with f_{k-1} elsewhere. Needs depth >= k+2.
PiecewiseLinearMap build_fk(const ParamSequence& seq, int k);

// f_0 .. f_kmax built in one pass (build_fk(k) is sequence[k]).
std::vector<PiecewiseLinearMap> build_f_sequence(const ParamSequence& seq, int kmax);

}  // namespace fc
