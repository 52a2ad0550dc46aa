#pragma once

#include "fatcantor/rational.hpp"
#include "fatcantor/report.hpp"

#include <functional>
#include <vector>

namespace fc {

// The defining sequences (w_k), (eps_k). Indexing is 1-based: w(k) is w_k.
struct ParamSequence {
    int depth = 0;
    std::vector<Rational> w;    // w[0] = w_1
    std::vector<Rational> eps;  // eps[0] = eps_1

    const Rational& width(int k) const { return w.at(k - 1); }
    const Rational& epsilon(int k) const { return eps.at(k - 1); }
};

// Picks eps_{k+1} given k, w_k and eps_k. Must satisfy the three strict
// upper bounds checked by generate_params; any violation is rejected.
using EpsilonChooser = std::function<Rational(int k, const Rational& w_k, const Rational& eps_k)>;

// B_{k+1}: the least of the three admissible upper bounds on eps_{k+1}.
Rational epsilon_upper_bound(int k, const Rational& w_k, const Rational& eps_k);

// Default choice: half the least upper bound. Keeps every inequality
// strict and turns out to give eps_k = 2^-(3k-1) for k >= 2.
EpsilonChooser default_epsilon_chooser();

// w_1 = 1, eps_1 = 1/6, then w_{k+1} = w_k/2 - eps_k with eps_{k+1} from
// the chooser. Throws std::invalid_argument naming the violated inequality
// (both sides exact) if the chooser returns an inadmissible value.
ParamSequence generate_params(int K, const EpsilonChooser& chooser = default_epsilon_chooser());

// Re-checks every defining relation and inequality; failures are report
// entries with exact witnesses, never exceptions.
ValidationReport validate_params(const ParamSequence& seq);

}  // namespace fc
