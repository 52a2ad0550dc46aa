#include "fatcantor/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace fc {

namespace {

std::string sig15(const Rational& v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v.to_double());
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Json validation_json(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const auto& e : rep.entries)
        checks.push_back({{"name", e.name},
                          {"instance", e.instance},
                          {"pass", e.pass},
                          {"lhs", e.lhs},
                          {"relation", e.relation},
                          {"rhs", e.rhs}});
    return {{"ok", rep.ok()}, {"checks", std::move(checks)}};
}

Json params_json(const ParamSequence& seq) {
    Json rows = Json::array();
    for (int k = 1; k <= seq.depth; ++k)
        rows.push_back({{"k", k},
                        {"w", seq.width(k).str()},
                        {"eps", seq.epsilon(k).str()},
                        {"w_decimal", seq.width(k).decimal(kDisplayDigits)},
                        {"eps_decimal", seq.epsilon(k).decimal(kDisplayDigits)}});
    return {{"depth", seq.depth},
            {"chooser", "default: eps_{k+1} = half the least admissible upper bound"},
            {"rows", std::move(rows)},
            {"validation", validation_json(validate_params(seq))}};
}

Json intervals_json(const IntervalFamily& fam) {
    Json members = Json::array();
    for (const auto& iv : fam.members) members.push_back({{"lo", iv.lo.str()}, {"hi", iv.hi.str()}});
    return {{"level", fam.level},
            {"members", std::move(members)},
            {"measure", family_measure(fam).str()}};
}

Json gaps_json(const IntervalFamily& fam) {
    Json gaps = Json::array();
    for (const auto& g : gap_family(fam)) gaps.push_back({{"lo", g.lo.str()}, {"hi", g.hi.str()}});
    return {{"level", fam.level}, {"gaps", std::move(gaps)}};
}

Json measure_json(const ParamSequence& seq, int K) {
    Json rows = Json::array();
    for (int level = 2; level <= K; ++level) {
        MeasureBounds mb = attractor_measure_bounds(seq, level);
        rows.push_back({{"K", level},
                        {"upper", mb.upper.str()},
                        {"lower", mb.lower.str()},
                        {"tail_bound", mb.tail_bound.str()},
                        {"upper_decimal", mb.upper.decimal(kDisplayDigits)},
                        {"lower_decimal", mb.lower.decimal(kDisplayDigits)},
                        {"tail_decimal", mb.tail_bound.decimal(kDisplayDigits)}});
    }
    return {{"depth", seq.depth}, {"rows", std::move(rows)}};
}

Json eval_json(const Rational& x, char map_name, const CertifiedValue& v) {
    return {{"x", x.str()},
            {"map", std::string(1, map_name)},
            {"value", v.value.str()},
            {"radius", v.radius.str()},
            {"exact", v.exact()},
            {"level", v.level_used},
            {"value_decimal", v.value.decimal(kDisplayDigits)}};
}

Json plf_json(const PiecewiseLinearMap& m) {
    Json points = Json::array();
    for (const auto& p : m.points()) points.push_back({{"x", p.x.str()}, {"y", p.y.str()}});
    return {{"monotonicity", m.monotonicity() == Monotonicity::strict ? "strict" : "weak"},
            {"points", std::move(points)}};
}

Json similitude_json(const SimilitudeIFS& ifs, int K) {
    Json maps = Json::array();
    for (const auto& m : ifs.maps)
        maps.push_back({{"a", m.slope.str()}, {"b", m.intercept.str()}});
    Json out = {{"maps", std::move(maps)},
                {"validation", validation_json(validate_condition_11(ifs))}};
    Json levels = Json::array();
    if (out["validation"]["ok"].get<bool>()) {
        auto measures = similitude_level_measures(ifs, K);
        for (int k = 1; k <= K; ++k)
            levels.push_back({{"k", k},
                              {"measure", measures[k - 1].str()},
                              {"measure_decimal", measures[k - 1].decimal(kDisplayDigits)}});
    }
    out["measures"] = std::move(levels);
    return out;
}

Json verification_json(const VerificationReport& rep) {
    Json claims = Json::array();
    for (const auto& e : rep.entries)
        claims.push_back({{"id", e.id},
                          {"anchor", e.anchor},
                          {"instance", e.instance},
                          {"status", to_string(e.status)},
                          {"witness", e.witness}});
    return {{"claims", std::move(claims)}};
}

std::string verification_junit(const VerificationReport& rep) {
    int skipped = 0;
    for (const auto& e : rep.entries)
        if (e.status == ClaimStatus::unchecked) ++skipped;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<testsuite name=\"verification\" tests=\"" + std::to_string(rep.entries.size()) +
           "\" failures=\"" + std::to_string(rep.fail_count()) + "\" skipped=\"" +
           std::to_string(skipped) + "\">\n";
    for (const auto& e : rep.entries) {
        out += "  <testcase classname=\"" + xml_escape(e.id) + "\" name=\"" + xml_escape(e.anchor) +
               " [" + xml_escape(e.instance) + "]\"";
        if (e.status == ClaimStatus::pass) {
            out += "/>\n";
        } else if (e.status == ClaimStatus::fail) {
            out += ">\n    <failure message=\"" + xml_escape(e.witness) + "\"/>\n  </testcase>\n";
        } else {
            out += ">\n    <skipped message=\"" + xml_escape(e.witness) + "\"/>\n  </testcase>\n";
        }
    }
    out += "</testsuite>\n";
    return out;
}

std::string plot_csv(const ParamSequence& seq, int level, int points) {
    if (level < 1) throw std::invalid_argument("plot_csv: level must be >= 1");
    auto fs = build_f_sequence(seq, level);
    const PiecewiseLinearMap& f_prev = fs[level - 1];
    const PiecewiseLinearMap& f_cur = fs[level];
    auto cmp = [](const Rational& a, const Rational& b) { return a < b; };
    std::set<Rational, decltype(cmp)> grid(cmp);
    for (const auto& p : f_prev.points()) grid.insert(p.x);
    for (const auto& p : f_cur.points()) grid.insert(p.x);
    for (int j = 0; j <= points; ++j) grid.insert(Rational(j) / Rational(std::max(points, 1)));
    std::string out = "# merged breakpoint grid of f_" + std::to_string(level - 1) + " and f_" +
                      std::to_string(level) + " plus " + std::to_string(points) +
                      " uniform samples; decimal display of exact rationals\n";
    out += "x,f_" + std::to_string(level - 1) + ",f_" + std::to_string(level) + "\n";
    for (const auto& x : grid)
        out += sig15(x) + "," + sig15(f_prev(x)) + "," + sig15(f_cur(x)) + "\n";
    return out;
}

std::string intervals_csv(const IntervalFamily& fam) {
    std::string out = "lo,hi\n";
    for (const auto& iv : fam.members) out += iv.lo.str() + "," + iv.hi.str() + "\n";
    return out;
}

}  // namespace fc
