#include "fatcantor/plf.hpp"

#include <algorithm>
#include <stdexcept>

namespace fc {

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<Breakpoint> points, Monotonicity mono)
    : pts_(std::move(points)), mono_(mono) {
    if (pts_.size() < 2) throw std::invalid_argument("PiecewiseLinearMap: need at least two breakpoints");
    if (pts_.front().x != Rational(0) || pts_.back().x != Rational(1))
        throw std::invalid_argument("PiecewiseLinearMap: domain must be [0,1]");
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        if (pts_[i].x <= pts_[i - 1].x)
            throw std::invalid_argument("PiecewiseLinearMap: x-coordinates not strictly increasing");
        if (mono_ == Monotonicity::strict ? pts_[i].y <= pts_[i - 1].y : pts_[i].y < pts_[i - 1].y)
            throw std::invalid_argument("PiecewiseLinearMap: y-coordinates violate monotonicity at x=" +
                                        pts_[i].x.str());
    }
    if (pts_.front().y < Rational(0) || pts_.back().y > Rational(1))
        throw std::invalid_argument("PiecewiseLinearMap: range leaves [0,1]");
}

Rational PiecewiseLinearMap::operator()(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("PiecewiseLinearMap: x outside [0,1]: " + x.str());
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                               [](const Breakpoint& b, const Rational& v) { return b.x < v; });
    if (it != pts_.end() && it->x == x) return it->y;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *std::prev(it);
    return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Rational PiecewiseLinearMap::lipschitz_constant() const {
    Rational best(0);
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        Rational slope = ((pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x)).abs();
        best = max(best, slope);
    }
    return best;
}

Rational sup_diff(const PiecewiseLinearMap& p, const PiecewiseLinearMap& q) {
    const auto& a = p.points();
    const auto& b = q.points();
    Rational best(0);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Rational x = [&] {
            if (i == a.size()) return b[j].x;
            if (j == b.size()) return a[i].x;
            return min(a[i].x, b[j].x);
        }();
        while (i < a.size() && a[i].x == x) ++i;
        while (j < b.size() && b[j].x == x) ++j;
        best = max(best, (p(x) - q(x)).abs());
    }
    return best;
}

namespace {

IntervalFamily normalize_family(std::vector<ClosedInterval> ivs) {
    std::sort(ivs.begin(), ivs.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    IntervalFamily out;
    for (auto& iv : ivs) {
        if (!out.members.empty() && iv.lo <= out.members.back().hi)
            out.members.back().hi = max(out.members.back().hi, iv.hi);
        else
            out.members.push_back(std::move(iv));
    }
    return out;
}

}  // namespace

IntervalFamily map_image(const PiecewiseLinearMap& m, const IntervalFamily& fam) {
    std::vector<ClosedInterval> images;
    images.reserve(fam.members.size());
    for (const auto& iv : fam.members) images.emplace_back(m(iv.lo), m(iv.hi));
    return normalize_family(std::move(images));
}

IFSDescription make_ifs(std::vector<PiecewiseLinearMap> maps) {
    if (maps.empty()) throw std::invalid_argument("IFSDescription: need at least one map");
    for (const auto& m : maps)
        if (m.lipschitz_constant() >= Rational(1))
            throw std::invalid_argument("IFSDescription: map is not a contraction (L = " +
                                        m.lipschitz_constant().str() + ")");
    return IFSDescription{std::move(maps)};
}

IntervalFamily hutchinson_step(const IFSDescription& ifs, const IntervalFamily& fam) {
    std::vector<ClosedInterval> images;
    images.reserve(ifs.maps.size() * fam.members.size());
    for (const auto& m : ifs.maps)
        for (const auto& iv : fam.members) images.emplace_back(m(iv.lo), m(iv.hi));
    return normalize_family(std::move(images));
}

PiecewiseLinearMap affine_plm(const Rational& slope, const Rational& intercept) {
    if (slope < Rational(0))
        throw std::invalid_argument("affine_plm: decreasing maps are not piecewise-linear-increasing");
    std::vector<Breakpoint> pts{{Rational(0), intercept}, {Rational(1), slope + intercept}};
    return PiecewiseLinearMap(std::move(pts),
                              slope > Rational(0) ? Monotonicity::strict : Monotonicity::weak);
}

IFSDescription build_example_FG() {
    Rational third(1, 3), sixth(1, 6);
    std::vector<Breakpoint> f{{Rational(0), Rational(0)},
                              {third, sixth},
                              {Rational(2, 3), sixth},
                              {Rational(1), third}};
    std::vector<Breakpoint> g;
    for (const auto& p : f) g.push_back({p.x, p.y + Rational(2, 3)});
    std::vector<PiecewiseLinearMap> maps;
    maps.emplace_back(std::move(f), Monotonicity::weak);
    maps.emplace_back(std::move(g), Monotonicity::weak);
    return make_ifs(std::move(maps));
}

std::vector<PiecewiseLinearMap> build_f_sequence(const ParamSequence& seq, int kmax) {
    if (kmax < 0) throw std::invalid_argument("build_f_sequence: kmax must be >= 0");
    if (kmax >= 1 && kmax + 2 > seq.depth)
        throw std::out_of_range("build_f_sequence: depth " + std::to_string(seq.depth) +
                                " insufficient for f_" + std::to_string(kmax) +
                                " (needs w_{k+2})");
    std::vector<PiecewiseLinearMap> fs;
    fs.emplace_back(std::vector<Breakpoint>{{Rational(0), Rational(0)}, {Rational(1), Rational(1, 3)}},
                    Monotonicity::strict);
    for (int k = 1; k <= kmax; ++k) {
        const PiecewiseLinearMap& prev = fs.back();
        IntervalFamily family = build_intervals(seq, k);
        const Rational& eps_k = seq.epsilon(k);
        const Rational& eps_next = seq.epsilon(k + 1);
        const Rational& w_next2 = seq.width(k + 2);
        const auto& old = prev.points();
        std::vector<Breakpoint> pts;
        pts.reserve(old.size() + family.members.size() * 4);
        std::size_t oi = 0;
        for (const auto& iv : family.members) {
            while (oi < old.size() && old[oi].x < iv.lo) pts.push_back(old[oi++]);
            Rational ya = prev(iv.lo);
            Rational yb = prev(iv.hi);
            Rational mid = (iv.lo + iv.hi) / Rational(2);
            Rational y_left = ya + w_next2;
            Rational y_right = y_left + Rational(2) * eps_next;
            Rational y_end = y_right + w_next2;
            if (y_end != yb)
                throw std::logic_error("build_f_sequence: junction mismatch on " + iv.str() + ": " +
                                       y_end.str() + " != " + yb.str());
            pts.push_back({iv.lo, ya});
            pts.push_back({mid - eps_k, y_left});
            pts.push_back({mid + eps_k, y_right});
            pts.push_back({iv.hi, yb});
            while (oi < old.size() && old[oi].x <= iv.hi) {
                if (old[oi].x > iv.lo && old[oi].x < iv.hi)
                    throw std::logic_error("build_f_sequence: f_{k-1} has an interior breakpoint in " +
                                           iv.str());
                ++oi;
            }
        }
        while (oi < old.size()) pts.push_back(old[oi++]);
        fs.emplace_back(std::move(pts), Monotonicity::strict);
    }
    return fs;
}

PiecewiseLinearMap build_fk(const ParamSequence& seq, int k) {
    return build_f_sequence(seq, k).back();
}

}  // namespace fc
