#include "hybridlab/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace hybridlab {

int SamplingConfig::h_of_x(int n) const {
  double ln_n = std::log(std::max(2, n));
  return std::max(1, static_cast<int>(std::ceil(ksi * x * ln_n)));
}

SampleSet sample(const Graph& g, double x, std::uint64_t seed) {
  if (x < 1.0) throw std::invalid_argument("x must be >= 1");
  SampleSet s;
  s.x = x;
  s.seed = seed;
  for (int v = 0; v < g.n(); ++v) {
    Rng r = substream(seed ^ 0x53414d504cULL, static_cast<std::uint64_t>(v));
    if (r.real() < 1.0 / x) s.members.push_back(v);
  }
  return s;
}

namespace {

enum MsgTag : i64 {
  kCount = 1,   // sampled -> hub: number of incident skeleton edges
  kEdge = 2,    // sampled -> hub: one skeleton edge (partner, weight)
  kRStart = 3,  // hub -> all: flood-start and output rounds
  kToken = 4,   // hub -> sampled: begin streaming edges
  kVecCount = 5,  // hub -> sampled: expected vector entries
  kVecEntry = 6,  // hub -> sampled: one (sampled id, distance) entry
  kFlood = 7      // local flood of a sampled node's distance vector
};

constexpr i64 kTagBits = 3;
constexpr i64 kEncInf = -1;

struct ProtoShared {
  int n = 0;
  i64 gamma = 0;
  int H = 0;  // explore radius = flood radius
  int hub = 0;
  std::vector<char> sampled;
  const std::vector<std::vector<i64>>* dh = nullptr;
  i64 idb = 0, db = 0, header = 0;
  i64 pl_count = 0, pl_edge = 0, pl_rstart = 0, pl_token = 0, pl_vcnt = 0, pl_vent = 0;
  i64 q_edge = 0, q_ctl = 0, q_vec = 0;
  int base0 = 0;  // first post-explore activation
};

i64 q_half(i64 gamma, i64 full_size) { return (gamma / 2) / full_size; }

// The hub-coordinated RSSP protocol; see repo README for the phase layout.
class RsspProgram : public NodeProgram {
 public:
  RsspProgram(const ProtoShared* sh, int me) : sh_(sh), me_(me) {}

  void on_round(RoundCtx& ctx) override {
    const int r = ctx.round();
    if (r < sh_->H) return;
    if (!edges_ready_) prepare_edges();

    for (const Message& m : ctx.global_in()) handle_global(ctx, m);
    for (const Message& m : ctx.local_in()) handle_flood(ctx, m);

    if (me_ == sh_->hub) hub_round(ctx, r);

    if (sh_->sampled[me_] && me_ != sh_->hub) {
      if (r == sh_->base0 + me_)
        ctx.send_global(sh_->hub, {kCount, static_cast<i64>(my_edges_.size())}, sh_->pl_count);
      if (stream_pos_ >= 0) stream_edges(ctx);
    }

    if (flood_start_ != -1 && r == flood_start_ && sh_->sampled[me_]) begin_flood(ctx);
    if (end_round_ != -1 && r == end_round_) emit_output(ctx);
  }

 private:
  void prepare_edges() {
    edges_ready_ = true;
    if (!sh_->sampled[me_]) return;
    const std::vector<i64>& row = (*sh_->dh)[me_];
    for (int j = me_ + 1; j < sh_->n; ++j)
      if (row[j] != kInf && sh_->sampled[j]) my_edges_.push_back({j, row[j]});
  }

  void handle_global(RoundCtx& ctx, const Message& m) {
    switch (m.vals[0]) {
      case kCount:
        hub_counts_[m.from] = m.vals[1];
        break;
      case kEdge:
        hub_edges_.push_back({m.from, static_cast<int>(m.vals[1]), m.vals[2]});
        break;
      case kRStart:
        flood_start_ = static_cast<int>(m.vals[1]);
        end_round_ = static_cast<int>(m.vals[2]);
        break;
      case kToken:
        stream_pos_ = 0;
        break;
      case kVecCount:
        vec_expected_ = m.vals[1];
        break;
      case kVecEntry:
        my_vec_[static_cast<int>(m.vals[1])] = m.vals[2] == kEncInf ? kInf : m.vals[2];
        break;
      default:
        throw std::logic_error("unexpected global message tag");
    }
    (void)ctx;
  }

  void handle_flood(RoundCtx& ctx, const Message& m) {
    if (m.vals[0] != kFlood) throw std::logic_error("unexpected local message tag");
    int src = static_cast<int>(m.vals[1]);
    i64 ttl = m.vals[2];
    // Deduplicate on forwarding, not on possession: the hub already holds
    // every vector locally but must still relay the first copy it hears.
    if (!forwarded_.insert(src).second) return;
    if (!vectors_.count(src)) {
      i64 cnt = m.vals[3];
      std::map<int, i64>& vec = vectors_[src];
      for (i64 i = 0; i < cnt; ++i) {
        i64 sj = m.vals[4 + 2 * i];
        i64 d = m.vals[5 + 2 * i];
        vec[static_cast<int>(sj)] = d == kEncInf ? kInf : d;
      }
    }
    i64 cnt = m.vals[3];
    if (ttl > 0) {
      std::vector<i64> vals = m.vals;
      vals[2] = ttl - 1;
      for (const auto& [to, w] : ctx.graph_local().neighbors(me_)) {
        (void)w;
        ctx.send_local(to, vals, flood_bits(cnt));
      }
    }
  }

  i64 flood_bits(i64 cnt) const {
    return kTagBits + sh_->idb + 16 + sh_->idb + cnt * (sh_->idb + sh_->db);
  }

  void stream_edges(RoundCtx& ctx) {
    i64 sent = 0;
    while (stream_pos_ < static_cast<int>(my_edges_.size()) && sent < sh_->q_edge) {
      const auto& [j, w] = my_edges_[stream_pos_++];
      ctx.send_global(sh_->hub, {kEdge, j, w}, sh_->pl_edge);
      ++sent;
    }
    if (stream_pos_ >= static_cast<int>(my_edges_.size())) stream_pos_ = -2;  // done
  }

  // ---- hub logic ----

  void hub_round(RoundCtx& ctx, int r) {
    if (r == sh_->base0 + sh_->n + 1) build_plan();
    if (vec_build_round_ != -1 && r == vec_build_round_) build_vector_stream();
    auto it = plan_.find(r);
    if (it != plan_.end())
      for (const Message& m : it->second) ctx.send_global(m.to, m.vals, m.payload_bits);
  }

  void build_plan() {
    std::vector<int> senders;  // sampled, excluding hub, in id order
    for (const auto& [id, c] : hub_counts_) senders.push_back(id);
    if (sh_->sampled[sh_->hub])
      for (const auto& [j, w] : my_edges_) hub_edges_.push_back({sh_->hub, j, w});

    const int A3 = sh_->base0 + sh_->n + 1;
    int per_round = 0;
    int at = A3;
    for (int v = 0; v < sh_->n; ++v) {
      if (v == sh_->hub) continue;
      plan_[at].push_back({sh_->hub, v, {kRStart, 0, 0}, sh_->pl_rstart});
      if (++per_round == sh_->q_ctl) {
        per_round = 0;
        ++at;
      }
    }
    if (per_round > 0) ++at;
    const int A4 = at + 1;

    int T = A4;
    for (int s : senders) {
      i64 c = hub_counts_[s];
      if (c > 0) {
        plan_[T].push_back({sh_->hub, s, {kToken}, sh_->pl_token});
        i64 w = (c + sh_->q_edge - 1) / sh_->q_edge;
        T += static_cast<int>(w) + 2;
      }
    }
    const int A5 = T;
    vec_build_round_ = A5;

    std::vector<int> all_s = senders;
    if (sh_->sampled[sh_->hub]) all_s.push_back(sh_->hub);
    i64 msgs5 = 0;
    for (int s : all_s)
      if (s != sh_->hub) msgs5 += 1 + static_cast<i64>(all_s.size());
    int D5 = static_cast<int>((msgs5 + sh_->q_vec - 1) / sh_->q_vec);

    flood_start_ = A5 + D5 + 2;
    end_round_ = flood_start_ + sh_->H;
    for (auto& [round, msgs] : plan_)
      for (Message& m : msgs)
        if (m.vals[0] == kRStart) {
          m.vals[1] = flood_start_;
          m.vals[2] = end_round_;
        }
  }

  void build_vector_stream() {
    int built_at = vec_build_round_;
    vec_build_round_ = -1;

    std::vector<int> all_s;
    for (const auto& [id, c] : hub_counts_) all_s.push_back(id);
    if (sh_->sampled[sh_->hub]) all_s.push_back(sh_->hub);
    std::sort(all_s.begin(), all_s.end());

    // Skeleton all-pairs over collected edges (hub-local computation).
    std::map<int, int> idx;
    for (size_t i = 0; i < all_s.size(); ++i) idx[all_s[i]] = static_cast<int>(i);
    std::vector<std::vector<std::pair<int, i64>>> adj(all_s.size());
    for (const auto& [a, b, w] : hub_edges_) {
      adj[idx[a]].push_back({idx[b], w});
      adj[idx[b]].push_back({idx[a], w});
    }
    std::vector<std::vector<i64>> apsp(all_s.size(), std::vector<i64>(all_s.size(), kInf));
    for (size_t src = 0; src < all_s.size(); ++src) {
      std::vector<i64>& dist = apsp[src];
      using Item = std::pair<i64, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      dist[src] = 0;
      pq.push({0, static_cast<int>(src)});
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (const auto& [to, w] : adj[v])
          if (d + w < dist[to]) {
            dist[to] = d + w;
            pq.push({dist[to], to});
          }
      }
    }

    int at = built_at;
    i64 per_round = 0;
    auto push = [&](Message m) {
      plan_[at].push_back(std::move(m));
      if (++per_round == sh_->q_vec) {
        per_round = 0;
        ++at;
      }
    };
    for (size_t si = 0; si < all_s.size(); ++si) {
      int s = all_s[si];
      if (s == sh_->hub) {
        for (size_t j = 0; j < all_s.size(); ++j) my_vec_[all_s[j]] = apsp[si][j];
        continue;
      }
      push({sh_->hub, s, {kVecCount, static_cast<i64>(all_s.size())}, sh_->pl_vcnt});
      for (size_t j = 0; j < all_s.size(); ++j) {
        i64 d = apsp[si][j] == kInf ? kEncInf : apsp[si][j];
        push({sh_->hub, s, {kVecEntry, all_s[j], d}, sh_->pl_vent});
      }
    }
    // Hub keeps every vector so its own final combination needs no messages
    // (terms with sources outside its ball vanish via d_h = infinity).
    for (size_t si = 0; si < all_s.size(); ++si) {
      std::map<int, i64>& vec = vectors_[all_s[si]];
      for (size_t j = 0; j < all_s.size(); ++j) vec[all_s[j]] = apsp[si][j];
    }
  }

  // ---- final phases ----

  void begin_flood(RoundCtx& ctx) {
    if (me_ != sh_->hub && vec_expected_ != -1 &&
        static_cast<i64>(my_vec_.size()) != vec_expected_)
      throw std::logic_error("rssp protocol: incomplete vector at flood start");
    std::map<int, i64>& own = vectors_[me_];
    for (const auto& [sj, d] : my_vec_) own[sj] = d;
    if (own.find(me_) == own.end()) own[me_] = 0;

    forwarded_.insert(me_);
    std::vector<i64> vals = {kFlood, me_, sh_->H - 1, static_cast<i64>(own.size())};
    for (const auto& [sj, d] : own) {
      vals.push_back(sj);
      vals.push_back(d == kInf ? kEncInf : d);
    }
    if (sh_->H >= 1)
      for (const auto& [to, w] : ctx.graph_local().neighbors(me_)) {
        (void)w;
        ctx.send_local(to, vals, flood_bits(static_cast<i64>(own.size())));
      }
  }

  void emit_output(RoundCtx& ctx) {
    const std::vector<i64>& row = (*sh_->dh)[me_];
    std::set<int> known;
    for (const auto& [src, vec] : vectors_) {
      known.insert(src);
      for (const auto& [sj, d] : vec) known.insert(sj);
    }
    for (int j = 0; j < sh_->n; ++j)
      if (row[j] != kInf && sh_->sampled[j]) known.insert(j);

    std::vector<i64> out;
    for (int s : known) {
      i64 best = row[s];
      for (const auto& [src, vec] : vectors_) {
        auto it = vec.find(s);
        if (it == vec.end()) continue;
        best = std::min(best, add_dist(row[src], it->second));
      }
      out.push_back(s);
      out.push_back(best == kInf ? kEncInf : best);
    }
    ctx.output(std::move(out));
  }

  const ProtoShared* sh_;
  int me_;
  bool edges_ready_ = false;
  std::vector<std::pair<int, i64>> my_edges_;
  int stream_pos_ = -1;
  int flood_start_ = -1, end_round_ = -1;
  i64 vec_expected_ = -1;
  std::map<int, i64> my_vec_;
  std::set<int> forwarded_;
  std::map<int, std::map<int, i64>> vectors_;
  // hub state
  std::map<int, i64> hub_counts_;
  std::vector<std::tuple<int, int, i64>> hub_edges_;
  std::map<int, std::vector<Message>> plan_;
  int vec_build_round_ = -1;
};

RsspResult solve_rssp_simulated(const Graph& g, const std::vector<int>& S,
                                const HybridConfig& cfg, int h, std::uint64_t seed,
                                const std::vector<std::vector<i64>>& dh) {
  ProtoShared sh;
  sh.n = g.n();
  sh.gamma = cfg.gamma;
  sh.H = h;
  sh.sampled.assign(g.n(), 0);
  for (int s : S) sh.sampled[s] = 1;
  sh.dh = &dh;
  sh.idb = id_bits(g.n());
  sh.db = dist_bits(g.n(), g.max_weight());
  sh.header = 2 * sh.idb;
  sh.pl_count = kTagBits + sh.idb;
  sh.pl_edge = kTagBits + sh.idb + sh.db;
  sh.pl_rstart = kTagBits + 2 * 22;  // two round numbers, each < 2^22
  sh.pl_token = kTagBits;
  sh.pl_vcnt = kTagBits + sh.idb;
  sh.pl_vent = kTagBits + sh.idb + sh.db;
  sh.base0 = h + 1;
  i64 ctl_max = std::max({sh.pl_count, sh.pl_rstart, sh.pl_token, sh.pl_vcnt}) + sh.header;
  sh.q_ctl = q_half(cfg.gamma, ctl_max);
  sh.q_edge = q_half(cfg.gamma, sh.pl_edge + sh.header);
  sh.q_vec = q_half(cfg.gamma, std::max(sh.pl_vent, sh.pl_vcnt) + sh.header);
  if (sh.q_ctl < 1 || sh.q_edge < 1 || sh.q_vec < 1)
    throw std::invalid_argument("gamma too small for the rssp protocol message sizes");

  RunSpec spec;
  spec.explore_hops = h;
  spec.materialize_views = false;
  spec.max_rounds = 1 << 22;
  Engine eng(g, cfg, seed, spec);
  RunResult run = eng.run([&](int v) { return std::make_unique<RsspProgram>(&sh, v); });

  RsspResult res;
  res.stats = run.stats;
  res.dist.assign(g.n(), std::vector<i64>(S.size(), kInf));
  std::map<int, int> sidx;
  for (size_t i = 0; i < S.size(); ++i) sidx[S[i]] = static_cast<int>(i);
  for (int v = 0; v < g.n(); ++v) {
    if (!run.outputs[v]) continue;
    const std::vector<i64>& out = *run.outputs[v];
    for (size_t i = 0; i + 1 < out.size(); i += 2) {
      auto it = sidx.find(static_cast<int>(out[i]));
      if (it == sidx.end()) continue;
      res.dist[v][it->second] = out[i + 1] == kEncInf ? kInf : out[i + 1];
    }
  }
  return res;
}

RsspResult solve_rssp_cost_model(const Graph& g, const std::vector<int>& S, int h, double x,
                                 double cost_c, double cost_a) {
  RsspResult res;
  res.dist.assign(g.n(), std::vector<i64>(S.size(), kInf));
  for (size_t i = 0; i < S.size(); ++i) {
    DistanceTable t = shortest_paths(g, S[i]);
    for (int v = 0; v < g.n(); ++v) res.dist[v][i] = t.dist[v];
  }
  double n = g.n();
  double lg = std::log2(std::max(2.0, n));
  double charged = cost_c * (std::cbrt(n) + n / (x * x)) * std::pow(lg, cost_a);
  (void)h;
  res.stats.rounds = static_cast<int>(std::ceil(charged));
  res.stats.global_bits_sent.assign(g.n(), 0);
  res.stats.global_bits_received.assign(g.n(), 0);
  return res;
}

std::vector<std::vector<i64>> hop_limited_all(const Graph& g, int h) {
  std::vector<std::vector<i64>> dh(g.n());
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < g.n(); ++v) dh[v] = hop_limited(g, v, h).dist_h;
  return dh;
}

// Cover property of the sampling lemma, checked against ground truth: for
// every ordered pair (v, u), either the widened hop table resolves the pair
// exactly, or some sampled node sits on a shortest v-u path within the base
// cover radius of u (exactly reachable in the base hop table).
bool cover_property(const Graph& g, const SampleSet& S,
                    const std::vector<std::vector<i64>>& dh_wide,
                    const std::vector<std::vector<i64>>& dh_base,
                    const std::vector<DistanceTable>& apsp) {
  for (int v = 0; v < g.n(); ++v) {
    for (int u = 0; u < g.n(); ++u) {
      if (u == v) continue;
      i64 d = apsp[v].dist[u];
      if (d == kInf || dh_wide[v][u] == d) continue;
      bool ok = false;
      for (int s : S.members) {
        if (add_dist(apsp[v].dist[s], apsp[s].dist[u]) == d &&
            dh_base[s][u] == apsp[s].dist[u]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

Scheme build_scheme(const Graph& g, const HybridConfig& cfg, double x, int h, double widen,
                    bool approx, std::uint64_t seed, RsspMode mode, double ksi,
                    bool throw_on_failure) {
  if (x < 1.0) throw std::invalid_argument("x must be >= 1");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (widen < 1.0) throw std::invalid_argument("widen must be >= 1");

  Scheme sc;
  sc.g = g;
  sc.approx = approx;
  sc.x = x;
  sc.ksi = ksi;
  sc.widen = widen;
  sc.h = h;
  sc.explore_h = approx ? static_cast<int>(std::ceil(widen * h)) : h;
  sc.seed = seed;
  sc.S = sample(g, x, seed);
  sc.dh = hop_limited_all(g, sc.explore_h);

  RsspResult rssp;
  if (mode == RsspMode::SIMULATED) {
    // Simulated run already includes the explore phase in its round count.
    rssp = solve_rssp_simulated(g, sc.S.members, cfg, sc.explore_h, seed, sc.dh);
    rssp.stats.rounds += 1;  // neighbor oracle-snapshot exchange (local round)
  } else {
    rssp = solve_rssp_cost_model(g, sc.S.members, sc.explore_h, x, 1.0, 1.0);
    rssp.stats.rounds += sc.explore_h + 1;  // explore phase + exchange round
  }
  sc.dist_to_S = std::move(rssp.dist);
  sc.stats = std::move(rssp.stats);
  sc.stats.local_messages += 2 * g.m();

  if (approx) {
    sc.approx_labels.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
      ApproxLabel& lab = sc.approx_labels[v];
      lab.owner = v;
      for (size_t i = 0; i < sc.S.members.size(); ++i) {
        if (sc.dist_to_S[v][i] < lab.dist_to_s) {
          lab.dist_to_s = sc.dist_to_S[v][i];
          lab.s_u = sc.S.members[i];
        }
      }
    }
  } else {
    sc.exact_labels.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
      ExactLabel& lab = sc.exact_labels[v];
      lab.owner = v;
      for (size_t i = 0; i < sc.S.members.size(); ++i)
        lab.entries.push_back({sc.S.members[i], sc.dist_to_S[v][i]});
    }
  }

  // Ground-truth sampling-success detection.
  std::vector<DistanceTable> apsp = all_pairs(g);
  if (sc.explore_h == sc.h) {
    sc.sampling_ok = cover_property(g, sc.S, sc.dh, sc.dh, apsp);
  } else {
    std::vector<std::vector<i64>> dh_base = hop_limited_all(g, sc.h);
    sc.sampling_ok = cover_property(g, sc.S, sc.dh, dh_base, apsp);
  }
  if (sc.sampling_ok) {
    for (int v = 0; v < g.n() && sc.sampling_ok; ++v)
      for (size_t i = 0; i < sc.S.members.size(); ++i)
        if (sc.dist_to_S[v][i] != apsp[v].dist[sc.S.members[i]]) {
          sc.sampling_ok = false;
          break;
        }
  }
  if (!sc.sampling_ok && throw_on_failure)
    throw SamplingFailure("sampling-lemma cover property failed; re-seed");
  return sc;
}

}  // namespace

RsspResult solve_rssp(const Graph& g, const std::vector<int>& S, RsspMode mode,
                      const HybridConfig& cfg, int h, double x, std::uint64_t seed,
                      double cost_c, double cost_a) {
  if (S.empty()) throw std::invalid_argument("S must be nonempty");
  if (mode == RsspMode::COST_MODEL) return solve_rssp_cost_model(g, S, h, x, cost_c, cost_a);
  return solve_rssp_simulated(g, S, cfg, h, seed, hop_limited_all(g, h));
}

Scheme build_scheme_exact(const Graph& g, const HybridConfig& cfg, double x, int h,
                          std::uint64_t seed, RsspMode mode, double ksi,
                          bool throw_on_failure) {
  return build_scheme(g, cfg, x, h, 1.0, false, seed, mode, ksi, throw_on_failure);
}

Scheme build_scheme_approx(const Graph& g, const HybridConfig& cfg, double x, int h,
                           double widen, std::uint64_t seed, RsspMode mode, double ksi,
                           bool throw_on_failure) {
  return build_scheme(g, cfg, x, h, widen, true, seed, mode, ksi, throw_on_failure);
}

i64 eval_oracle(const Scheme& sc, int v, int u) {
  if (v == u) return 0;
  i64 best = sc.dh[v][u];
  if (sc.approx) {
    const ApproxLabel& lab = sc.approx_labels[u];
    if (lab.s_u != -1) {
      auto it = std::lower_bound(sc.S.members.begin(), sc.S.members.end(), lab.s_u);
      int si = static_cast<int>(it - sc.S.members.begin());
      best = std::min(best, add_dist(sc.dist_to_S[v][si], lab.dist_to_s));
    }
  } else {
    const ExactLabel& lab = sc.exact_labels[u];
    for (size_t i = 0; i < lab.entries.size(); ++i)
      best = std::min(best, add_dist(sc.dist_to_S[v][i], lab.entries[i].second));
  }
  return best;
}

int routing_next(const Scheme& sc, int v, int u) {
  if (v == u) throw std::invalid_argument("routing_next requires v != u");
  i64 ov = eval_oracle(sc, v, u);
  if (ov == kInf) throw NoProgress("oracle estimate is infinite");
  std::vector<std::pair<int, i64>> nbrs = sc.g.neighbors(v);
  std::sort(nbrs.begin(), nbrs.end());
  for (const auto& [z, w] : nbrs) {
    i64 oz = eval_oracle(sc, z, u);
    if (sc.approx ? (oz <= ov - w) : (oz == ov - w)) return z;
  }
  throw NoProgress("no neighbor satisfies the routing condition");
}

ForwardResult forward(const Scheme& sc, int s, int t, bool stateful, int max_hops) {
  if (s == t) throw std::invalid_argument("forward requires s != t");
  ForwardResult res;
  res.path.push_back(s);
  std::set<int> visited = {s};
  int cur = s;
  while (cur != t) {
    if (static_cast<int>(res.path.size()) - 1 >= max_hops)
      throw HopBudgetExceeded("hop budget exceeded while forwarding");
    int nxt = routing_next(sc, cur, t);
    res.weight += sc.g.edge_weight(cur, nxt);
    res.path.push_back(nxt);
    if (!stateful && !visited.insert(nxt).second)
      throw LoopDetected("stateless routing revisited a node");
    cur = nxt;
  }
  return res;
}

i64 measure_label_bits(const ExactLabel& label, int n, i64 max_w) {
  return static_cast<i64>(label.entries.size()) * (id_bits(n) + dist_bits(n, max_w)) + id_bits(n);
}

i64 measure_label_bits(const ApproxLabel& label, int n, i64 max_w) {
  (void)label;
  return id_bits(n) + dist_bits(n, max_w) + id_bits(n);
}

}  // namespace hybridlab
