#include "fatcantor/similitude.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fc {

ValidationReport validate_condition_11(const SimilitudeIFS& ifs) {
    ValidationReport rep;
    const Rational zero(0), one(1);
    if (ifs.maps.empty()) {
        rep.entries.push_back({"N >= 1", "N=0", false, "0", ">=", "1"});
        return rep;
    }
    Rational total(0);
    std::vector<ClosedInterval> images;
    for (std::size_t n = 0; n < ifs.maps.size(); ++n) {
        const auto& m = ifs.maps[n];
        std::string inst = "n=" + std::to_string(n + 1);
        Rational a = m.slope.abs();
        rep.entries.push_back({"0 < |a_n|", inst, a > zero, a.str(), ">", "0"});
        rep.entries.push_back({"|a_n| < 1", inst, a < one, a.str(), "<", "1"});
        if (m.slope == zero) continue;
        ClosedInterval img = m.image(ClosedInterval(zero, one));
        bool inside = img.lo >= zero && img.hi <= one;
        rep.entries.push_back({"f_n([0,1]) within [0,1]", inst, inside, img.str(), "within", "[0,1]"});
        total += a;
        images.push_back(img);
    }
    std::sort(images.begin(), images.end(),
              [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
    bool disjoint = true;
    std::string witness = "-";
    for (std::size_t i = 1; i < images.size(); ++i) {
        // open images disjoint: closures may touch at one point
        if (images[i].lo < images[i - 1].hi) {
            disjoint = false;
            witness = images[i - 1].str() + " and " + images[i].str();
            break;
        }
    }
    rep.entries.push_back({"f_i((0,1)) disjoint from f_j((0,1))", witness, disjoint,
                           disjoint ? "disjoint" : "overlap", "=", "disjoint"});
    rep.entries.push_back({"union f_n([0,1]) != [0,1]", "sum |a_n|", total < one, total.str(), "<", "1"});
    return rep;
}

std::vector<Rational> similitude_level_measures(const SimilitudeIFS& ifs, int K) {
    if (K < 1) throw std::invalid_argument("similitude_level_measures: K must be >= 1");
    ValidationReport rep = validate_condition_11(ifs);
    if (!rep.ok()) {
        const CheckEntry* f = rep.first_failure();
        throw std::invalid_argument("similitude_level_measures: invalid IFS, " + f->name + " (" +
                                    f->lhs + " " + f->relation + " " + f->rhs + ")");
    }

    Rational ratio(0);  // 1 - q = sum |a_n|
    for (const auto& m : ifs.maps) ratio += m.slope.abs();

    bool orientation_preserving = std::all_of(ifs.maps.begin(), ifs.maps.end(),
                                              [](const AffineMap& m) { return m.slope > Rational(0); });
    IFSDescription plm_ifs;
    if (orientation_preserving) {
        std::vector<PiecewiseLinearMap> maps;
        for (const auto& m : ifs.maps) maps.push_back(affine_plm(m.slope, m.intercept));
        plm_ifs = make_ifs(std::move(maps));
    }

    std::vector<Rational> measures;
    IntervalFamily fam;
    fam.members.emplace_back(Rational(0), Rational(1));
    Rational closed_form(1);
    for (int k = 1; k <= K; ++k) {
        Rational iterated = family_measure(fam);
        if (iterated != closed_form)
            throw std::logic_error("similitude_level_measures: level " + std::to_string(k) +
                                   " mismatch: iterated " + iterated.str() + " vs closed form " +
                                   closed_form.str());
        measures.push_back(iterated);
        if (k == K) break;
        if (orientation_preserving) {
            fam = hutchinson_step(plm_ifs, fam);
        } else {
            std::vector<ClosedInterval> images;
            images.reserve(ifs.maps.size() * fam.members.size());
            for (const auto& m : ifs.maps)
                for (const auto& iv : fam.members) images.push_back(m.image(iv));
            std::sort(images.begin(), images.end(),
                      [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
            IntervalFamily next;
            for (auto& iv : images) {
                if (!next.members.empty() && iv.lo <= next.members.back().hi)
                    next.members.back().hi = max(next.members.back().hi, iv.hi);
                else
                    next.members.push_back(std::move(iv));
            }
            fam = std::move(next);
        }
        closed_form = closed_form * ratio;
    }
    return measures;
}

SimilitudeIFS parse_similitude_spec(const std::string& spec) {
    SimilitudeIFS ifs;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        auto comma = part.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("similitude spec entry needs 'a,b': '" + part + "'");
        ifs.maps.push_back(
            {Rational::parse(part.substr(0, comma)), Rational::parse(part.substr(comma + 1))});
    }
    if (ifs.maps.empty()) throw std::invalid_argument("similitude spec is empty");
    return ifs;
}

}  // namespace fc
