#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybridlab/graph.hpp"
#include "hybridlab/rng.hpp"

namespace hybridlab {

// Synchronous round engine with a local mode (per-edge, lambda bits/round,
// unlimited when lambda is unset) and a global mode (gamma bits per node per
// round, send + receive combined).
struct HybridConfig {
  std::optional<i64> lambda;  // nullopt = unlimited
  i64 gamma = 1;
};

inline int bit_width_of(i64 max_value) {
  int b = 0;
  while ((i64(1) << b) <= max_value && b < 62) ++b;
  return b;  // ceil(log2(max_value + 1)), i.e. bits to address [0, max_value]
}

// ceil(log2 n) id width; distances are at most (n-1)*W on n nodes.
inline int id_bits(int n) { return n <= 1 ? 1 : bit_width_of(n - 1); }
inline int dist_bits(int n, i64 max_w) {
  return bit_width_of(std::max<i64>(1, static_cast<i64>(n - 1) * max_w));
}

struct Message {
  int from = -1;
  int to = -1;
  std::vector<i64> vals;
  i64 payload_bits = 0;
};

struct GlobalRecord {
  int round;
  int from;
  int to;
  i64 bits;  // payload + both id headers
};

struct RoundStats {
  int rounds = 0;
  i64 global_bits_total = 0;
  std::vector<i64> global_bits_sent;      // per node
  std::vector<i64> global_bits_received;  // per node
  i64 local_messages = 0;
  std::vector<GlobalRecord> global_log;
  std::map<std::string, i64> cuts;
};

struct BudgetViolation : std::runtime_error {
  int node;
  int round;
  i64 bits;
  BudgetViolation(int node_, int round_, i64 bits_)
      : std::runtime_error("global budget exceeded at node " + std::to_string(node_) +
                           ", round " + std::to_string(round_) + ": " + std::to_string(bits_) +
                           " bits"),
        node(node_), round(round_), bits(bits_) {}
};

struct LocalSizeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RoundCtx;

// Per-node state machine. One instance per node; on_round is called once per
// activation (activation 0 = initial computation, no messages delivered yet).
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual void on_round(RoundCtx& ctx) = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(int node)>;

struct RunResult {
  std::vector<std::optional<std::vector<i64>>> outputs;
  RoundStats stats;
};

class Engine;

class RoundCtx {
 public:
  int node() const { return node_; }
  int n() const;
  int round() const { return round_; }
  const Graph& graph_local() const;  // incident edges only are meaningful at round 0
  const std::vector<Message>& global_in() const { return *global_in_; }
  const std::vector<Message>& local_in() const { return *local_in_; }

  // View after explore: induced ball subgraph, or nullptr before it is
  // available (round < explore hops).
  const InducedSubgraph* ball_view() const;

  void send_global(int to, std::vector<i64> vals, i64 payload_bits);
  void send_local(int to, std::vector<i64> vals, i64 payload_bits);
  void output(std::vector<i64> vals);

  Rng& rng();

 private:
  friend class Engine;
  Engine* eng_ = nullptr;
  int node_ = 0;
  int round_ = 0;
  const std::vector<Message>* global_in_ = nullptr;
  const std::vector<Message>* local_in_ = nullptr;
};

struct RunSpec {
  int max_rounds = 1 << 20;
  // explore(h): engine-native local flooding; each node's ball view becomes
  // available from activation explore_hops onward; costs explore_hops rounds
  // and zero global bits.
  int explore_hops = 0;
  // When false, the engine still charges the explore rounds but does not
  // materialize ball subgraphs (for programs that consume precomputed
  // ball-derived tables instead).
  bool materialize_views = true;
};

class Engine {
 public:
  Engine(const Graph& g, HybridConfig cfg, std::uint64_t seed, RunSpec spec = {});
  RunResult run(const ProgramFactory& make_program);

 private:
  friend class RoundCtx;
  const Graph& g_;
  HybridConfig cfg_;
  std::uint64_t seed_;
  RunSpec spec_;
  std::vector<InducedSubgraph> balls_;
  std::vector<Rng> rngs_;
  int header_bits_;
  int round_ = 0;
  std::vector<std::vector<Message>> pending_global_, pending_local_;
  std::vector<std::optional<std::vector<i64>>> outputs_;
  RoundStats stats_;
};

// Total global-message bits crossing the A-side/B-side partition (A side =
// hop-closer to A, ties to A), direction A side -> B side.
i64 cut_tracking(const Graph& g, const RoundStats& stats, const std::vector<int>& A,
                 const std::vector<int>& B);

// Standard preset: lambda unlimited, gamma = ceil(c * log^2 n).
HybridConfig standard_hybrid(int n, double c = 8.0);

}  // namespace hybridlab
