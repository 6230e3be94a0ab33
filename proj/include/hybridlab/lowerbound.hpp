#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybridlab/graph.hpp"
#include "hybridlab/rational.hpp"

namespace hybridlab {

enum class GammaKind { UNWEIGHTED, WEIGHTED };
enum class Problem { ORACLE, STATELESS, STATEFUL };

struct Roles {
  std::vector<int> sources;   // s_1..s_k
  std::vector<int> transits;  // u_1..u_k
  std::vector<int> targets;   // t_1..t_k
  int v = -1;
  int v_prime = -1;
};

// Hard instance with a planted bit-string X. Bit b corresponds to the
// transit/target index pair x_index[b]; the edge {u_i, t_j} exists iff the
// bit is 1 (and, in the weighted case, {u_i, t_j} is an edge of the base
// girth graph).
struct GammaInstance {
  Graph graph;
  GammaKind kind = GammaKind::UNWEIGHTED;
  int k = 0;
  int h = 0;
  int ell = 0;  // weighted only
  std::vector<int> X;
  std::vector<std::pair<int, int>> x_index;  // (transit index i, target index j)
  Roles roles;
  i64 w0 = 1, w1 = 1, w2 = 1;  // weighted only
  Graph base_girth_graph;      // weighted only

  i64 d1() const { return kind == GammaKind::UNWEIGHTED ? h + 1 : w2 + w1 + h - 1; }
  i64 d0() const { return kind == GammaKind::UNWEIGHTED ? h + 2 : w2 + w0 + h - 1; }
};

struct WeightPreset {
  Problem problem = Problem::ORACLE;
  int ell = 4;
  double epsilon = 0.1;
  long long t = 1;
  long long w0 = 2, w1 = 1, w2 = 1;
  QuadVal alpha_base;  // target stretch is alpha_base - eps
  Rat eps;

  double alpha() const { return alpha_base.to_double() - eps.to_double(); }
};

struct PairRecord {
  int i = 0, j = 0;
  int x = 0;
  i64 measured = 0;
  i64 expected = 0;
  bool via_v = false;
  bool ok = false;
};

struct VerificationReport {
  std::vector<PairRecord> records;
  i64 d0 = 0, d1 = 0;
  bool hop_separation_ok = false;  // hop(A, B) == h
  bool pass = false;
};

struct IneqReport {
  bool ok = false;
  std::vector<std::pair<std::string, double>> slacks;  // rhs - alpha*lhs (or rhs - lhs)
};

struct GirthTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PresetInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleEpsilon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GammaInstance gen_unweighted(int k, int h, const std::vector<int>& X);
GammaInstance gen_unweighted_random(int k, int h, std::uint64_t seed);
VerificationReport verify_unweighted(const GammaInstance& inst);

GammaInstance gen_weighted(const Graph& base, int h, const WeightPreset& preset,
                           const std::vector<int>& X);
GammaInstance gen_weighted_random(const Graph& base, int h, const WeightPreset& preset,
                                  std::uint64_t seed);
VerificationReport verify_weighted(const GammaInstance& inst);

WeightPreset make_preset(Problem problem, int ell, double epsilon, int h);
IneqReport check_inequalities(const WeightPreset& preset, int h);

// Estimates / first hops are aligned with inst.x_index.
std::vector<int> decode_from_oracle(const GammaInstance& inst, const std::vector<i64>& estimates);
std::vector<int> decode_from_routing(const GammaInstance& inst, const std::vector<int>& first_hops);

// Balanced bipartite graph on 2k nodes with girth >= ell, grown greedily in
// random order. target_reached (optional) reports whether target_edges was
// met before saturation.
Graph high_girth_greedy(int k, int ell, int target_edges, std::uint64_t seed,
                        bool* target_reached = nullptr);

}  // namespace hybridlab
