#include "fatcantor/params.hpp"

#include <stdexcept>

namespace fc {

Rational epsilon_upper_bound(int k, const Rational& w_k, const Rational& eps_k) {
    Rational geometric = pow2(-1) * Rational(4).pow(-k) * pow2(-k);  // (1/2) 4^-k / 2^k
    Rational quotient = eps_k / Rational(2);
    Rational width = w_k / Rational(4) - eps_k / Rational(2);
    return min(geometric, min(quotient, width));
}

EpsilonChooser default_epsilon_chooser() {
    return [](int k, const Rational& w_k, const Rational& eps_k) {
        return epsilon_upper_bound(k, w_k, eps_k) / Rational(2);
    };
}

namespace {

void require(bool ok, const std::string& what, int k, const Rational& lhs, const Rational& rhs) {
    if (!ok)
        throw std::invalid_argument("chooser violates " + what + " at k=" + std::to_string(k) +
                                    ": " + lhs.str() + " vs " + rhs.str());
}

}  // namespace

ParamSequence generate_params(int K, const EpsilonChooser& chooser) {
    if (K < 1) throw std::invalid_argument("generate_params: K must be >= 1");
    ParamSequence seq;
    seq.depth = K;
    seq.w.push_back(Rational(1));
    seq.eps.push_back(Rational(1, 6));
    for (int k = 1; k < K; ++k) {
        const Rational& w_k = seq.w.back();
        const Rational& eps_k = seq.eps.back();
        Rational w_next = w_k / Rational(2) - eps_k;
        Rational eps_next = chooser(k, w_k, eps_k);
        require(eps_next > Rational(0), "eps_{k+1} > 0", k, eps_next, Rational(0));
        Rational geo_lhs = pow2(k) * eps_next;
        Rational geo_rhs = pow2(-1) * Rational(4).pow(-k);
        require(geo_lhs < geo_rhs, "2^k eps_{k+1} < (1/2) 4^-k", k, geo_lhs, geo_rhs);
        require(eps_next / eps_k < Rational(1, 2), "eps_{k+1}/eps_k < 1/2", k, eps_next / eps_k,
                Rational(1, 2));
        Rational width_rhs = w_k / Rational(4) - eps_k / Rational(2);
        require(eps_next < width_rhs, "eps_{k+1} < w_k/4 - eps_k/2", k, eps_next, width_rhs);
        seq.w.push_back(std::move(w_next));
        seq.eps.push_back(std::move(eps_next));
    }
    return seq;
}

namespace {

void check(ValidationReport& rep, std::string name, int k, const Rational& lhs,
           const std::string& rel, const Rational& rhs, bool pass) {
    rep.entries.push_back({std::move(name), "k=" + std::to_string(k), pass, lhs.str(), rel, rhs.str()});
}

}  // namespace

ValidationReport validate_params(const ParamSequence& seq) {
    ValidationReport rep;
    const int K = seq.depth;
    if (K < 1 || static_cast<int>(seq.w.size()) != K || static_cast<int>(seq.eps.size()) != K) {
        rep.entries.push_back({"well-formed", "depth=" + std::to_string(K), false,
                               std::to_string(seq.w.size()) + "," + std::to_string(seq.eps.size()),
                               "=", std::to_string(K)});
        return rep;
    }
    check(rep, "w_1 = 1", 1, seq.width(1), "=", Rational(1), seq.width(1) == Rational(1));
    check(rep, "eps_1 = 1/6", 1, seq.epsilon(1), "=", Rational(1, 6), seq.epsilon(1) == Rational(1, 6));
    for (int k = 1; k < K; ++k) {
        const Rational& w_k = seq.width(k);
        const Rational& eps_k = seq.epsilon(k);
        const Rational& w_next = seq.width(k + 1);
        const Rational& eps_next = seq.epsilon(k + 1);
        Rational rec = w_k / Rational(2) - eps_k;
        check(rep, "w_{k+1} = w_k/2 - eps_k", k, w_next, "=", rec, w_next == rec);
        Rational geo_lhs = pow2(k) * eps_next;
        Rational geo_rhs = pow2(-1) * Rational(4).pow(-k);
        check(rep, "2^k eps_{k+1} < (1/2) 4^-k", k, geo_lhs, "<", geo_rhs, geo_lhs < geo_rhs);
        bool eps_pos = eps_k > Rational(0);
        check(rep, "eps_{k+1}/eps_k < 1/2", k, eps_next, "<", eps_k / Rational(2),
              eps_pos && eps_next < eps_k / Rational(2));
        Rational width_rhs = w_k / Rational(4) - eps_k / Rational(2);
        check(rep, "eps_{k+1} < w_k/4 - eps_k/2", k, eps_next, "<", width_rhs, eps_next < width_rhs);
    }
    for (int k = 1; k <= K; ++k) {
        const Rational& w_k = seq.width(k);
        check(rep, "0 < w_k", k, Rational(0), "<", w_k, Rational(0) < w_k);
        check(rep, "w_k <= 2^(1-k)", k, w_k, "<=", pow2(1 - k), w_k <= pow2(1 - k));
        check(rep, "0 < eps_k", k, Rational(0), "<", seq.epsilon(k), Rational(0) < seq.epsilon(k));
        if (k < K) {
            bool ok = w_k > Rational(0) && seq.width(k + 1) / w_k < Rational(1, 2);
            check(rep, "w_{k+1}/w_k < 1/2", k, seq.width(k + 1), "<", w_k / Rational(2), ok);
        }
    }
    return rep;
}

}  // namespace fc
