#pragma once

#include "fatcantor/attractor.hpp"
#include "fatcantor/intervals.hpp"
#include "fatcantor/limit.hpp"
#include "fatcantor/params.hpp"
#include "fatcantor/plf.hpp"
#include "fatcantor/report.hpp"
#include "fatcantor/similitude.hpp"
#include "fatcantor/verifier.hpp"

#include <json.hpp>

#include <string>

namespace fc {

// All emitters use ordered JSON so output is deterministic and
// parse -> dump round-trips byte for byte. Decimal fields are labeled
// display-only; every decision field is an exact rational string.
using Json = nlohmann::ordered_json;

inline constexpr int kDisplayDigits = 12;

Json validation_json(const ValidationReport& rep);
Json params_json(const ParamSequence& seq);
Json intervals_json(const IntervalFamily& fam);
Json gaps_json(const IntervalFamily& fam);
Json measure_json(const ParamSequence& seq, int K);
Json eval_json(const Rational& x, char map_name, const CertifiedValue& v);
Json plf_json(const PiecewiseLinearMap& m);
Json similitude_json(const SimilitudeIFS& ifs, int K);
Json verification_json(const VerificationReport& rep);

std::string verification_junit(const VerificationReport& rep);

// CSV of x, f_{k-1}(x), f_k(x) on the merged breakpoint grid plus
// `points` uniform samples; values to 15 significant digits.
std::string plot_csv(const ParamSequence& seq, int level, int points);

std::string intervals_csv(const IntervalFamily& fam);

}  // namespace fc
