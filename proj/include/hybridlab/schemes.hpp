#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hybridlab/graph.hpp"
#include "hybridlab/sim.hpp"

namespace hybridlab {

struct SamplingConfig {
  double x = 1.0;    // membership probability 1/x
  double ksi = 2.0;  // sampling-lemma constant, tunable
  int h_of_x(int n) const;
};

struct SampleSet {
  std::vector<int> members;  // sorted ascending
  double x = 1.0;
  std::uint64_t seed = 0;
};

struct ExactLabel {
  int owner = -1;
  std::vector<std::pair<int, i64>> entries;  // (sampled id, d(s, owner)), sorted by id
};

struct ApproxLabel {
  int owner = -1;
  int s_u = -1;  // nearest sampled node, smallest id on ties; -1 when S empty
  i64 dist_to_s = kInf;
};

enum class RsspMode { SIMULATED, COST_MODEL };

struct RsspResult {
  std::vector<std::vector<i64>> dist;  // [node][index into S]
  RoundStats stats;
};

struct SamplingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoProgress : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LoopDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HopBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Built routing/oracle state for a whole graph. Per-node state is the ball
// view (as hop-limited distances), distances to all of S, and (implicitly,
// via shared storage reached after the +1 exchange round) neighbor oracles.
struct Scheme {
  Graph g;
  bool approx = false;
  double x = 1.0;
  double ksi = 2.0;
  double widen = 1.0;
  int h = 0;          // sampling cover radius
  int explore_h = 0;  // exploration radius: h (exact) or ceil(widen*h)
  std::uint64_t seed = 0;
  SampleSet S;
  std::vector<std::vector<i64>> dist_to_S;  // [v][si], exact on sampling success
  std::vector<std::vector<i64>> dh;         // [v][u], explore_h-hop-limited
  std::vector<ExactLabel> exact_labels;
  std::vector<ApproxLabel> approx_labels;
  RoundStats stats;
  bool sampling_ok = false;
};

struct ForwardResult {
  std::vector<int> path;
  i64 weight = 0;
};

SampleSet sample(const Graph& g, double x, std::uint64_t seed);

RsspResult solve_rssp(const Graph& g, const std::vector<int>& S, RsspMode mode,
                      const HybridConfig& cfg, int h, double x, std::uint64_t seed,
                      double cost_c = 1.0, double cost_a = 1.0);

Scheme build_scheme_exact(const Graph& g, const HybridConfig& cfg, double x, int h,
                          std::uint64_t seed, RsspMode mode = RsspMode::SIMULATED,
                          double ksi = 2.0, bool throw_on_failure = false);

Scheme build_scheme_approx(const Graph& g, const HybridConfig& cfg, double x, int h,
                           double widen, std::uint64_t seed,
                           RsspMode mode = RsspMode::SIMULATED, double ksi = 2.0,
                           bool throw_on_failure = false);

// One-sided oracle estimate of d(v, u) at node v given u's label.
i64 eval_oracle(const Scheme& sc, int v, int u);

// Next hop toward u from v; smallest-id candidate. Throws NoProgress when no
// neighbor qualifies.
int routing_next(const Scheme& sc, int v, int u);

ForwardResult forward(const Scheme& sc, int s, int t, bool stateful, int max_hops);

i64 measure_label_bits(const ExactLabel& label, int n, i64 max_w);
i64 measure_label_bits(const ApproxLabel& label, int n, i64 max_w);

}  // namespace hybridlab
