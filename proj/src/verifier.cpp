#include "fatcantor/verifier.hpp"

#include "fatcantor/attractor.hpp"
#include "fatcantor/intervals.hpp"
#include "fatcantor/plf.hpp"

#include <functional>
#include <stdexcept>

namespace fc {

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::unchecked: return "unchecked";
    }
    return "?";
}

namespace {

struct Context {
    const ParamSequence& seq;
    int L;  // max level
    ValidationReport params_report;
    std::vector<IntervalFamily> families;     // I_1 .. I_{L+1}
    std::vector<PiecewiseLinearMap> fs;       // f_0 .. f_L
    std::string build_error;                  // nonempty if construction failed

    const IntervalFamily& family(int k) const { return families.at(k - 1); }
    const PiecewiseLinearMap& f(int k) const { return fs.at(k); }
};

// Result of one claim body; witness empty means pass.
using ClaimBody = std::function<std::string(const Context&)>;

void run_claim(VerificationReport& rep, const Context& ctx, std::string id, std::string anchor,
               std::string instance, const ClaimBody& body) {
    ClaimEntry e{std::move(id), std::move(anchor), std::move(instance), ClaimStatus::fail, ""};
    try {
        e.witness = body(ctx);
        e.status = e.witness.empty() ? ClaimStatus::pass : ClaimStatus::fail;
    } catch (const std::exception& ex) {
        e.status = ClaimStatus::fail;
        e.witness = std::string("error: ") + ex.what();
    }
    rep.entries.push_back(std::move(e));
}

std::string require_built(const Context& ctx) {
    return ctx.build_error.empty() ? "" : "construction failed: " + ctx.build_error;
}

std::string params_claim(const Context& ctx, std::initializer_list<const char*> names) {
    for (const auto& e : ctx.params_report.entries)
        for (const char* n : names)
            if (!e.pass && e.name == n)
                return e.name + " at " + e.instance + ": " + e.lhs + " " + e.relation + " " + e.rhs;
    return "";
}

std::string levels(int lo, int hi) {
    return "k=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

VerificationReport run_full_verification(const ParamSequence& seq, int max_level) {
    if (max_level < 1) throw std::invalid_argument("run_full_verification: max_level must be >= 1");
    if (max_level + 2 > seq.depth)
        throw std::out_of_range("run_full_verification: need max_level + 2 <= depth");

    Context ctx{seq, max_level, validate_params(seq), {}, {}, ""};
    try {
        for (int k = 1; k <= max_level + 1; ++k) ctx.families.push_back(build_intervals(seq, k));
        ctx.fs = build_f_sequence(seq, max_level);
    } catch (const std::exception& ex) {
        ctx.build_error = ex.what();
    }

    const int L = max_level;
    VerificationReport rep;

    run_claim(rep, ctx, "params.initial_values", "w_1 = 1 and eps_1 = 1/6", "k=1",
              [](const Context& c) { return params_claim(c, {"w_1 = 1", "eps_1 = 1/6"}); });
    run_claim(rep, ctx, "params.width_recursion", "w_{k+1} = w_k/2 - eps_k", levels(1, seq.depth - 1),
              [](const Context& c) { return params_claim(c, {"w_{k+1} = w_k/2 - eps_k"}); });
    run_claim(rep, ctx, "params.eps_geometric", "2^k eps_{k+1} < (1/2) 4^-k", levels(1, seq.depth - 1),
              [](const Context& c) { return params_claim(c, {"2^k eps_{k+1} < (1/2) 4^-k"}); });
    run_claim(rep, ctx, "params.eps_quotient", "eps_{k+1}/eps_k < 1/2", levels(1, seq.depth - 1),
              [](const Context& c) { return params_claim(c, {"eps_{k+1}/eps_k < 1/2"}); });
    run_claim(rep, ctx, "params.eps_width", "eps_{k+1} < w_k/4 - eps_k/2", levels(1, seq.depth - 1),
              [](const Context& c) { return params_claim(c, {"eps_{k+1} < w_k/4 - eps_k/2"}); });
    run_claim(rep, ctx, "params.width_decay", "0 < w_k <= 2^(1-k) and w_{k+1}/w_k < 1/2",
              levels(1, seq.depth),
              [](const Context& c) {
                  return params_claim(c, {"0 < w_k", "w_k <= 2^(1-k)", "0 < eps_k", "w_{k+1}/w_k < 1/2"});
              });

    run_claim(rep, ctx, "intervals.count", "I_k consists of 2^(k-1) members", levels(1, L + 1),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L + 1; ++k) {
                      std::size_t want = std::size_t(1) << (k - 1);
                      if (c.family(k).members.size() != want)
                          return "level " + std::to_string(k) + ": " +
                                 std::to_string(c.family(k).members.size()) + " members, expected " +
                                 std::to_string(want);
                  }
                  return "";
              });
    run_claim(rep, ctx, "intervals.width", "b - a = w_k for every [a,b] in I_k", levels(1, L + 1),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L + 1; ++k)
                      for (const auto& iv : c.family(k).members)
                          if (iv.width() != c.seq.width(k))
                              return "level " + std::to_string(k) + ": " + iv.str() + " has width " +
                                     iv.width().str() + ", expected " + c.seq.width(k).str();
                  return "";
              });
    run_claim(rep, ctx, "intervals.disjoint", "members of I_k are pairwise disjoint within [0,1]",
              levels(1, L + 1),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L + 1; ++k) {
                      const auto& ms = c.family(k).members;
                      if (ms.front().lo < Rational(0) || ms.back().hi > Rational(1))
                          return "level " + std::to_string(k) + " leaves [0,1]";
                      for (std::size_t i = 1; i < ms.size(); ++i)
                          if (ms[i].lo <= ms[i - 1].hi)
                              return "level " + std::to_string(k) + ": " + ms[i - 1].str() + " meets " +
                                     ms[i].str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "intervals.mirror",
              "[a,b] in I_k lies in [0,1/3] iff [a,b]+2/3 in I_k (k >= 2)", levels(2, L + 1),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  Rational third(1, 3), shift(2, 3);
                  for (int k = 2; k <= L + 1; ++k) {
                      const auto& ms = c.family(k).members;
                      for (const auto& iv : ms) {
                          ClosedInterval want = iv.hi <= third ? iv.translated(shift)
                                                               : iv.translated(-shift);
                          bool found = false;
                          for (const auto& other : ms)
                              if (other == want) { found = true; break; }
                          if (!found)
                              return "level " + std::to_string(k) + ": mirror of " + iv.str() +
                                     " missing";
                      }
                  }
                  return "";
              });
    run_claim(rep, ctx, "intervals.nested", "union I_{k+1} strictly contained in union I_k",
              levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k) {
                      for (const auto& iv : c.family(k + 1).members)
                          if (!family_contains(c.family(k), iv.lo) ||
                              !family_contains(c.family(k), iv.hi))
                              return "level " + std::to_string(k + 1) + ": " + iv.str() +
                                     " escapes level " + std::to_string(k);
                      if (family_measure(c.family(k + 1)) >= family_measure(c.family(k)))
                          return "level " + std::to_string(k + 1) + " not strictly smaller";
                  }
                  return "";
              });

    run_claim(rep, ctx, "measure.telescoping",
              "measure(I_k) - measure(I_{k+1}) = 2^(k-1) * 2 eps_k", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k) {
                      Rational lhs = family_measure(c.family(k)) - family_measure(c.family(k + 1));
                      Rational rhs = pow2(k) * c.seq.epsilon(k);
                      if (lhs != rhs)
                          return "k=" + std::to_string(k) + ": " + lhs.str() + " != " + rhs.str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "measure.lower_bound", "certified lower bound >= 1/3", "K=2.." + std::to_string(L + 1),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int K = 2; K <= L + 1; ++K) {
                      MeasureBounds mb = attractor_measure_bounds(c.seq, K);
                      if (mb.lower < Rational(1, 3))
                          return "K=" + std::to_string(K) + ": lower " + mb.lower.str() + " < 1/3";
                  }
                  return "";
              });

    run_claim(rep, ctx, "fk.increment", "f_k(b) - f_k(a) = w_{k+2} for [a,b] in I_{k+1}", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k + 1).members) {
                          Rational d = c.f(k)(iv.hi) - c.f(k)(iv.lo);
                          if (d != c.seq.width(k + 2))
                              return "k=" + std::to_string(k) + ", " + iv.str() + ": " + d.str() +
                                     " != " + c.seq.width(k + 2).str();
                      }
                  return "";
              });
    run_claim(rep, ctx, "fk.endpoint_agreement", "f_k = f_{k-1} at endpoints of I_k members",
              levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k).members) {
                          if (c.f(k)(iv.lo) != c.f(k - 1)(iv.lo))
                              return "k=" + std::to_string(k) + ", a=" + iv.lo.str();
                          if (c.f(k)(iv.hi) != c.f(k - 1)(iv.hi))
                              return "k=" + std::to_string(k) + ", b=" + iv.hi.str();
                      }
                  return "";
              });
    run_claim(rep, ctx, "fk.affine_on_members", "f_{k-1} is affine on each member of I_k",
              levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k).members)
                          for (const auto& bp : c.f(k - 1).points())
                              if (bp.x > iv.lo && bp.x < iv.hi)
                                  return "k=" + std::to_string(k) + ": breakpoint x=" + bp.x.str() +
                                         " inside " + iv.str();
                  return "";
              });
    run_claim(rep, ctx, "fk.strictly_increasing", "f_k is strictly increasing", levels(0, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 0; k <= L; ++k) {
                      const auto& pts = c.f(k).points();
                      for (std::size_t i = 1; i < pts.size(); ++i)
                          if (pts[i].y <= pts[i - 1].y)
                              return "k=" + std::to_string(k) + " at x=" + pts[i].x.str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "fk.lipschitz", "Lipschitz constant of f_k < 1/2", levels(0, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 0; k <= L; ++k) {
                      Rational lc = c.f(k).lipschitz_constant();
                      if (lc >= Rational(1, 2))
                          return "k=" + std::to_string(k) + ": L = " + lc.str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "fk.range", "f_k(0) = 0 and f_k(1) = 1/3", levels(0, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 0; k <= L; ++k) {
                      if (c.f(k)(Rational(0)) != Rational(0))
                          return "k=" + std::to_string(k) + ": f_k(0) = " + c.f(k)(Rational(0)).str();
                      if (c.f(k)(Rational(1)) != Rational(1, 3))
                          return "k=" + std::to_string(k) + ": f_k(1) = " + c.f(k)(Rational(1)).str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "fk.junction", "f_k((a+b)/2 - eps_k) = w_{k+2} + f_{k-1}(a)", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k).members) {
                          Rational x = (iv.lo + iv.hi) / Rational(2) - c.seq.epsilon(k);
                          Rational want = c.seq.width(k + 2) + c.f(k - 1)(iv.lo);
                          if (c.f(k)(x) != want)
                              return "k=" + std::to_string(k) + ", " + iv.str() + ": " +
                                     c.f(k)(x).str() + " != " + want.str();
                      }
                  return "";
              });
    run_claim(rep, ctx, "fk.member_image", "[f_{k-1}(a), f_{k-1}(b)] in I_{k+1} for [a,b] in I_k",
              levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k).members) {
                          ClosedInterval img(c.f(k - 1)(iv.lo), c.f(k - 1)(iv.hi));
                          bool found = false;
                          for (const auto& m : c.family(k + 1).members)
                              if (m == img) { found = true; break; }
                          if (!found)
                              return "k=" + std::to_string(k) + ": image " + img.str() +
                                     " not a member of I_" + std::to_string(k + 1);
                      }
                  return "";
              });
    run_claim(rep, ctx, "fk.member_origin",
              "every member of I_{k+1} is [f_{k-1}(c), f_{k-1}(d)] or that interval + 2/3",
              levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  Rational shift(2, 3);
                  for (int k = 1; k <= L; ++k)
                      for (const auto& m : c.family(k + 1).members) {
                          bool found = false;
                          for (const auto& iv : c.family(k).members) {
                              ClosedInterval img(c.f(k - 1)(iv.lo), c.f(k - 1)(iv.hi));
                              if (m == img || m == img.translated(shift)) { found = true; break; }
                          }
                          if (!found)
                              return "k=" + std::to_string(k) + ": member " + m.str() +
                                     " has no source in I_" + std::to_string(k);
                      }
                  return "";
              });

    run_claim(rep, ctx, "cauchy.sup_bound", "sup |f_k - f_{k-1}| <= 2^-k", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k) {
                      Rational s = sup_diff(c.f(k), c.f(k - 1));
                      if (s > pow2(-k))
                          return "k=" + std::to_string(k) + ": sup " + s.str() + " > " +
                                 pow2(-k).str();
                  }
                  return "";
              });
    run_claim(rep, ctx, "limit.endpoint_stability",
              "f_l agrees with f_{k-1} at endpoints of I_k members for all l >= k", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k)
                      for (const auto& iv : c.family(k).members) {
                          if (c.f(L)(iv.lo) != c.f(k - 1)(iv.lo))
                              return "k=" + std::to_string(k) + ", x=" + iv.lo.str();
                          if (c.f(L)(iv.hi) != c.f(k - 1)(iv.hi))
                              return "k=" + std::to_string(k) + ", x=" + iv.hi.str();
                      }
                  return "";
              });
    run_claim(rep, ctx, "attractor.self_similarity", "A_{k+1} = f(A_k) union g(A_k)", levels(1, L),
              [L](const Context& c) -> std::string {
                  if (auto e = require_built(c); !e.empty()) return e;
                  for (int k = 1; k <= L; ++k) {
                      SelfSimilarityResult r = verify_self_similarity(c.seq, k);
                      if (!r.pass) return "k=" + std::to_string(k) + ": " + r.detail;
                  }
                  return "";
              });

    rep.entries.push_back({"attractor.perfect", "the attractor is perfect", "-",
                           ClaimStatus::unchecked,
                           "no finite check; recorded as unchecked by design"});
    rep.entries.push_back({"attractor.compact", "the attractor is compact", "-",
                           ClaimStatus::unchecked,
                           "no finite check; recorded as unchecked by design"});
    return rep;
}

}  // namespace fc
