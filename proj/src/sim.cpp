#include "hybridlab/sim.hpp"

#include <algorithm>
#include <cmath>

namespace hybridlab {

int RoundCtx::n() const { return eng_->g_.n(); }
const Graph& RoundCtx::graph_local() const { return eng_->g_; }

const InducedSubgraph* RoundCtx::ball_view() const {
  if (eng_->spec_.explore_hops <= 0 || round_ < eng_->spec_.explore_hops ||
      eng_->balls_.empty())
    return nullptr;
  return &eng_->balls_[node_];
}

void RoundCtx::send_global(int to, std::vector<i64> vals, i64 payload_bits) {
  if (to < 0 || to >= n()) throw std::invalid_argument("global send: bad receiver");
  Message m{node_, to, std::move(vals), payload_bits};
  eng_->pending_global_[to].push_back(std::move(m));
}

void RoundCtx::send_local(int to, std::vector<i64> vals, i64 payload_bits) {
  if (!eng_->g_.has_edge(node_, to)) throw std::invalid_argument("local send: not a neighbor");
  Message m{node_, to, std::move(vals), payload_bits};
  eng_->pending_local_[to].push_back(std::move(m));
}

void RoundCtx::output(std::vector<i64> vals) {
  if (!eng_->outputs_[node_]) eng_->outputs_[node_] = std::move(vals);
}

Rng& RoundCtx::rng() { return eng_->rngs_[node_]; }

Engine::Engine(const Graph& g, HybridConfig cfg, std::uint64_t seed, RunSpec spec)
    : g_(g), cfg_(cfg), seed_(seed), spec_(spec) {
  if (cfg_.gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (cfg_.lambda && *cfg_.lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  header_bits_ = 2 * id_bits(g.n());
  for (int v = 0; v < g.n(); ++v) rngs_.push_back(substream(seed, static_cast<std::uint64_t>(v)));
  if (spec_.explore_hops > 0 && spec_.materialize_views) {
    balls_.resize(g.n());
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < g.n(); ++v) balls_[v] = ball(g, v, spec_.explore_hops);
  }
}

RunResult Engine::run(const ProgramFactory& make_program) {
  const int n = g_.n();
  std::vector<std::unique_ptr<NodeProgram>> progs(n);
  for (int v = 0; v < n; ++v) progs[v] = make_program(v);

  outputs_.assign(n, std::nullopt);
  stats_ = RoundStats{};
  stats_.global_bits_sent.assign(n, 0);
  stats_.global_bits_received.assign(n, 0);
  pending_global_.assign(n, {});
  pending_local_.assign(n, {});

  for (round_ = 0;; ++round_) {
    if (round_ > spec_.max_rounds) throw NonTermination("max_rounds exceeded");

    std::vector<std::vector<Message>> global_in = std::move(pending_global_);
    std::vector<std::vector<Message>> local_in = std::move(pending_local_);
    pending_global_.assign(n, {});
    pending_local_.assign(n, {});

    auto by_sender = [](const Message& a, const Message& b) { return a.from < b.from; };
    std::vector<i64> recv_bits(n, 0);
    for (int v = 0; v < n; ++v) {
      std::stable_sort(global_in[v].begin(), global_in[v].end(), by_sender);
      std::stable_sort(local_in[v].begin(), local_in[v].end(), by_sender);
      for (const Message& m : global_in[v]) recv_bits[v] += m.payload_bits + header_bits_;
    }

    if (spec_.explore_hops > 0 && round_ >= 1 && round_ <= spec_.explore_hops)
      stats_.local_messages += 2 * g_.m();  // native flooding traffic

    for (int v = 0; v < n; ++v) {
      if (outputs_[v]) continue;
      RoundCtx ctx;
      ctx.eng_ = this;
      ctx.node_ = v;
      ctx.round_ = round_;
      ctx.global_in_ = &global_in[v];
      ctx.local_in_ = &local_in[v];
      progs[v]->on_round(ctx);
    }

    // Budget accounting for this round: bits received now plus bits sent now.
    std::vector<i64> sent_bits(n, 0);
    for (int to = 0; to < n; ++to) {
      for (const Message& m : pending_global_[to]) sent_bits[m.from] += m.payload_bits + header_bits_;
      if (cfg_.lambda) {
        std::map<int, i64> per_edge;
        for (const Message& m : pending_local_[to]) per_edge[m.from] += m.payload_bits;
        for (const auto& [from, bits] : per_edge)
          if (bits > *cfg_.lambda)
            throw LocalSizeViolation("local edge budget exceeded at node " + std::to_string(from) +
                                     ", round " + std::to_string(round_));
      }
    }
    for (int v = 0; v < n; ++v) {
      i64 used = sent_bits[v] + recv_bits[v];
      if (used > cfg_.gamma) throw BudgetViolation(v, round_, used);
    }
    for (int to = 0; to < n; ++to) {
      for (const Message& m : pending_global_[to]) {
        i64 sz = m.payload_bits + header_bits_;
        stats_.global_bits_total += sz;
        stats_.global_bits_sent[m.from] += sz;
        stats_.global_bits_received[m.to] += sz;
        stats_.global_log.push_back({round_, m.from, m.to, sz});
      }
      stats_.local_messages += static_cast<i64>(pending_local_[to].size());
    }

    bool all_done = true;
    for (int v = 0; v < n; ++v)
      if (!outputs_[v]) { all_done = false; break; }
    if (all_done) {
      stats_.rounds = round_;
      break;
    }
  }

  RunResult res;
  res.outputs = outputs_;
  res.stats = stats_;
  return res;
}

i64 cut_tracking(const Graph& g, const RoundStats& stats, const std::vector<int>& A,
                 const std::vector<int>& B) {
  std::vector<int> da = hop_distances_multi(g, A);
  std::vector<int> db = hop_distances_multi(g, B);
  auto a_side = [&](int v) {
    unsigned ua = da[v] == -1 ? ~0u : static_cast<unsigned>(da[v]);
    unsigned ub = db[v] == -1 ? ~0u : static_cast<unsigned>(db[v]);
    return ua <= ub;
  };
  i64 total = 0;
  for (const GlobalRecord& r : stats.global_log)
    if (a_side(r.from) && !a_side(r.to)) total += r.bits;
  return total;
}

HybridConfig standard_hybrid(int n, double c) {
  double lg = std::log2(std::max(2, n));
  HybridConfig cfg;
  cfg.lambda = std::nullopt;
  cfg.gamma = static_cast<i64>(std::ceil(c * lg * lg));
  return cfg;
}

}  // namespace hybridlab
