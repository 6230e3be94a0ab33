#include "hybridlab/lowerbound.hpp"

#include <algorithm>
#include <cmath>

namespace hybridlab {

namespace {

std::vector<int> random_bits(size_t count, std::uint64_t seed) {
  Rng rng = substream(seed, 0x58626974ULL);
  std::vector<int> bits(count);
  for (size_t i = 0; i < count; ++i) bits[i] = rng.coin() ? 1 : 0;
  return bits;
}

// Chain of `edges` unit/custom-weight edges between a and b, allocating
// internal nodes from *next_id. first_w applies to the edge incident to a.
void add_chain(Graph& g, int a, int b, int edges, i64 first_w, int* next_id) {
  int prev = a;
  for (int i = 1; i < edges; ++i) {
    int node = (*next_id)++;
    g.add_edge(prev, node, prev == a ? first_w : 1);
    prev = node;
  }
  g.add_edge(prev, b, (edges == 1 ? first_w : 1));
}

bool quad_gt(const QuadVal& q, const Rat& rhs) {  // q > rhs, exact, any sign of q.b
  Rat rem = rhs - q.a;  // need q.b*sqrt(r) > rem
  if (q.b.num == 0 || q.r == 0) return rem < Rat(0);
  Rat s2 = q.b * q.b * Rat(q.r);
  if (q.b > Rat(0)) {
    if (rem < Rat(0)) return true;
    return rem * rem < s2;
  }
  if (rem >= Rat(0)) return false;
  return s2 < rem * rem;
}

long long isqrt_floor(__int128 v) {
  long long g = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (static_cast<__int128>(g) * g > v) --g;
  while (static_cast<__int128>(g + 1) * (g + 1) <= v) ++g;
  return g;
}

// floor(sqrt(r) * t)
long long floor_sqrt_mul(long long r, long long t) {
  return isqrt_floor(static_cast<__int128>(r) * t * t);
}

}  // namespace

GammaInstance gen_unweighted(int k, int h, const std::vector<int>& X) {
  if (k < 1 || h < 1) throw std::invalid_argument("gen_unweighted requires k >= 1, h >= 1");
  if (static_cast<int>(X.size()) != k * k) throw std::invalid_argument("X must have k*k bits");
  GammaInstance inst;
  inst.kind = GammaKind::UNWEIGHTED;
  inst.k = k;
  inst.h = h;
  inst.X = X;
  const int n = k * (h + 2) + h + 1;
  inst.graph = Graph(n);
  Roles& r = inst.roles;
  for (int i = 0; i < k; ++i) {
    r.sources.push_back(i);
    r.transits.push_back(k + i);
    r.targets.push_back(2 * k + i);
  }
  r.v = 3 * k;
  r.v_prime = 3 * k + 1;
  int next_id = 3 * k + 2;
  for (int i = 0; i < k; ++i) add_chain(inst.graph, r.sources[i], r.transits[i], h, 1, &next_id);
  add_chain(inst.graph, r.v, r.v_prime, h, 1, &next_id);
  for (int i = 0; i < k; ++i) {
    inst.graph.add_edge(r.v, r.sources[i], 1);
    inst.graph.add_edge(r.v_prime, r.targets[i], 1);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      inst.x_index.push_back({i, j});
      if (X[i * k + j]) inst.graph.add_edge(r.transits[i], r.targets[j], 1);
    }
  if (next_id != n) throw std::logic_error("node count mismatch in gen_unweighted");
  return inst;
}

GammaInstance gen_unweighted_random(int k, int h, std::uint64_t seed) {
  return gen_unweighted(k, h, random_bits(static_cast<size_t>(k) * k, seed));
}

namespace {

VerificationReport verify_common(const GammaInstance& inst) {
  VerificationReport rep;
  rep.d0 = inst.d0();
  rep.d1 = inst.d1();
  const Roles& r = inst.roles;

  std::vector<int> ab;  // A = transits + targets
  ab.insert(ab.end(), r.transits.begin(), r.transits.end());
  ab.insert(ab.end(), r.targets.begin(), r.targets.end());
  std::vector<int> hd = hop_distances_multi(inst.graph, ab);
  int min_hop = -1;
  for (int s : r.sources)
    if (hd[s] != -1 && (min_hop == -1 || hd[s] < min_hop)) min_hop = hd[s];
  rep.hop_separation_ok = (min_hop == inst.h);

  std::vector<DistanceTable> from_src(inst.roles.sources.size());
  for (size_t i = 0; i < r.sources.size(); ++i) from_src[i] = shortest_paths(inst.graph, r.sources[i]);
  DistanceTable from_v = shortest_paths(inst.graph, r.v);

  rep.pass = rep.hop_separation_ok;
  for (size_t b = 0; b < inst.x_index.size(); ++b) {
    auto [i, j] = inst.x_index[b];
    PairRecord rec;
    rec.i = i;
    rec.j = j;
    rec.x = inst.X[b];
    int t = r.targets[j];
    rec.measured = from_src[i].dist[t];
    rec.expected = rec.x ? rep.d1 : rep.d0;
    rec.via_v = add_dist(from_src[i].dist[r.v], from_v.dist[t]) == rec.measured;
    // x = 1: shortest path avoids v; x = 0: it runs through v.
    rec.ok = rec.measured == rec.expected && rec.via_v == (rec.x == 0);
    rep.records.push_back(rec);
    if (!rec.ok) rep.pass = false;
  }
  return rep;
}

}  // namespace

VerificationReport verify_unweighted(const GammaInstance& inst) {
  if (inst.kind != GammaKind::UNWEIGHTED) throw std::invalid_argument("expected unweighted instance");
  return verify_common(inst);
}

GammaInstance gen_weighted(const Graph& base, int h, const WeightPreset& preset,
                           const std::vector<int>& X) {
  if (h < 2) throw std::invalid_argument("gen_weighted requires h >= 2");
  std::vector<int> color;
  if (!is_bipartite(base, &color)) throw std::invalid_argument("base graph must be bipartite");
  std::vector<int> left, right;
  for (int v = 0; v < base.n(); ++v) (color[v] == 0 ? left : right).push_back(v);
  if (left.size() != right.size()) throw std::invalid_argument("base graph must be balanced");
  const int k = static_cast<int>(left.size());
  i64 base_girth = girth(base);
  if (base_girth < preset.ell) throw GirthTooSmall("base graph girth below ell");
  if (!(preset.w1 < preset.w0 && preset.w0 < static_cast<i64>(preset.ell - 1) * preset.w1))
    throw PresetInvalid("preset violates w1 < w0 < (ell-1)*w1");
  // Without w0 <= w1 + 2*w2 a source could reach a target more cheaply by
  // hopping through v into a sibling chain than by the intended v--v' route,
  // and the planted distances would no longer be d0/d1.
  if (preset.w0 > preset.w1 + 2 * preset.w2)
    throw PresetInvalid("preset violates w0 <= w1 + 2*w2");
  if (static_cast<int>(X.size()) != base.m()) throw std::invalid_argument("X must have one bit per base edge");

  std::vector<int> side_index(base.n(), -1);
  for (int i = 0; i < k; ++i) side_index[left[i]] = i;
  for (int j = 0; j < k; ++j) side_index[right[j]] = j;

  GammaInstance inst;
  inst.kind = GammaKind::WEIGHTED;
  inst.k = k;
  inst.h = h;
  inst.ell = preset.ell;
  inst.X = X;
  inst.w0 = preset.w0;
  inst.w1 = preset.w1;
  inst.w2 = preset.w2;
  inst.base_girth_graph = base;

  const int n = k * (h + 2) + h;
  inst.graph = Graph(n);
  Roles& r = inst.roles;
  for (int i = 0; i < k; ++i) {
    r.sources.push_back(i);
    r.transits.push_back(k + i);
    r.targets.push_back(2 * k + i);
  }
  r.v = 3 * k;
  r.v_prime = 3 * k + 1;
  int next_id = 3 * k + 2;
  for (int i = 0; i < k; ++i)
    add_chain(inst.graph, r.sources[i], r.transits[i], h, preset.w2, &next_id);
  add_chain(inst.graph, r.v, r.v_prime, h - 1, 1, &next_id);
  for (int i = 0; i < k; ++i) {
    inst.graph.add_edge(r.v, r.sources[i], preset.w2);
    inst.graph.add_edge(r.v_prime, r.targets[i], preset.w0);
  }
  std::vector<Edge> base_edges = base.sorted_edges();
  for (size_t b = 0; b < base_edges.size(); ++b) {
    int bu = base_edges[b].u, bv = base_edges[b].v;
    if (color[bu] != 0) std::swap(bu, bv);
    int i = side_index[bu], j = side_index[bv];
    inst.x_index.push_back({i, j});
    if (X[b]) inst.graph.add_edge(r.transits[i], r.targets[j], preset.w1);
  }
  if (next_id != n) throw std::logic_error("node count mismatch in gen_weighted");
  return inst;
}

GammaInstance gen_weighted_random(const Graph& base, int h, const WeightPreset& preset,
                                  std::uint64_t seed) {
  return gen_weighted(base, h, preset, random_bits(base.m(), seed));
}

VerificationReport verify_weighted(const GammaInstance& inst) {
  if (inst.kind != GammaKind::WEIGHTED) throw std::invalid_argument("expected weighted instance");
  return verify_common(inst);
}

WeightPreset make_preset(Problem problem, int ell, double epsilon, int h) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
  if (ell < 4 || ell % 2 != 0) throw std::invalid_argument("ell must be even and >= 4");
  if (h < 2) throw std::invalid_argument("h must be >= 2");

  WeightPreset p;
  p.problem = problem;
  p.ell = ell;
  p.epsilon = epsilon;
  p.eps = rat_from_double(epsilon);

  if (problem == Problem::STATEFUL) {
    QuadVal base;
    if (ell == 4) base = {Rat(0), Rat(1), 2};
    else if (ell == 6) base = {Rat(5, 3), Rat(0), 0};
    else if (ell == 8) base = {Rat(7, 4), Rat(0), 0};
    else base = {Rat(3, 4), Rat(1, 4), 17};
    // Headroom: the target stretch alpha = base - eps must stay above 1.
    if (!quad_gt(base, Rat(1) + p.eps))
      throw InfeasibleEpsilon("epsilon consumes the stretch headroom for this ell");
    p.alpha_base = base;
  } else {
    // Asymptotic value of the realized base (w0+w2)/(w1+w2) with
    // w2 = ceil((w0-w1)/2): it tends to (3b-1)/(b+1) where b is the limiting
    // w0/w1 ratio. Headroom check on that limit; the loop below only accepts
    // a realization once its exact base clears 1 + eps as well.
    QuadVal limit;
    if (problem == Problem::ORACLE) {
      Rat b = Rat(ell - 1) - p.eps / Rat(2);
      limit = {(Rat(3) * b - Rat(1)) / (b + Rat(1)), Rat(0), 0};
    } else if (ell <= 6) {
      long long r = ell - 1;  // b = sqrt(ell-1): (3b-1)/(b+1) = (3r+1-4*sqrt(r))/(r-1)
      limit = {Rat(3 * r + 1, r - 1), Rat(-4, r - 1), r};
    } else {
      limit = {Rat(-1), Rat(2), 2};  // b = 1+sqrt(2): (3b-1)/(b+1) = 2*sqrt(2)-1
    }
    if (!quad_gt(limit, Rat(1) + p.eps))
      throw InfeasibleEpsilon("epsilon consumes the stretch headroom for this ell");
  }

  long long t;
  switch (problem) {
    case Problem::ORACLE:
      t = static_cast<long long>(std::floor(2.0 * (ell - 2 - epsilon) / epsilon * h)) + 1;
      break;
    case Problem::STATELESS:
      t = static_cast<long long>(std::floor(h / epsilon)) + 1;
      break;
    case Problem::STATEFUL:
      t = static_cast<long long>(std::floor((std::sqrt(17.0) - 1.0) * (h - 1) / (4.0 * epsilon))) + 1;
      break;
    default:
      t = 1;
  }
  t = std::max<long long>(t, 2);

  for (int attempt = 0; attempt < 40 && t < (1LL << 42); ++attempt, t *= 2) {
    p.t = t;
    p.w1 = t;
    switch (problem) {
      case Problem::ORACLE: {
        // w0 = ceil(((ell-1) - eps/2) * t)
        Rat w0r = (Rat(ell - 1) - p.eps / Rat(2)) * Rat(t);
        p.w0 = static_cast<long long>((w0r.num + w0r.den - 1) / w0r.den);
        // Smallest w2 with w0 <= w1 + 2*w2, so the shortest x=0 path really is
        // the v--v' route of length w2 + w0 + h - 1.
        p.w2 = (p.w0 - p.w1 + 1) / 2;
        // Largest stretch the separation alpha*(w1+w2) < w0+w2 allows.
        p.alpha_base = {Rat(p.w0 + p.w2, p.w1 + p.w2), Rat(0), 0};
        break;
      }
      case Problem::STATELESS: {
        long long cand1 = floor_sqrt_mul(ell - 1, t);
        long long cand2 = t + floor_sqrt_mul(2, t);
        p.w0 = std::min(cand1, cand2);
        p.w2 = (p.w0 - p.w1 + 1) / 2;
        // Largest stretch the three stateless separations allow at this w2.
        Rat base = Rat(p.w0 + p.w2, p.w1 + p.w2);
        base = std::min(base, Rat((ell - 1) * p.w1 + p.w2, p.w0 + p.w2));
        base = std::min(base, Rat(2 * p.w0 + p.w1 + p.w2, p.w0 + p.w2));
        p.alpha_base = {base, Rat(0), 0};
        break;
      }
      case Problem::STATEFUL: {
        if (ell == 4) {
          p.w0 = floor_sqrt_mul(8, t) - t;  // floor((2*sqrt(2)-1)*t)
          p.w2 = t;
        } else if (ell == 6) {
          p.w0 = 5 * t / 2;
          p.w2 = 5 * t / 4;
        } else if (ell == 8) {
          p.w0 = 35 * t / 11;
          p.w2 = 21 * t / 11;
        } else {
          long long m = floor_sqrt_mul(17, t);
          p.w0 = (3 * t + m) / 2;
          p.w2 = (5 * t + m) / 4;
        }
        break;
      }
    }
    bool headroom = problem == Problem::STATEFUL || p.alpha_base.a > Rat(1) + p.eps;
    if (headroom && p.w1 < p.w0 && p.w0 < static_cast<long long>(ell - 1) * p.w1 &&
        check_inequalities(p, h).ok)
      return p;
  }
  throw PresetInvalid("could not realize preset weights satisfying the inequality system");
}

IneqReport check_inequalities(const WeightPreset& p, int h) {
  IneqReport rep;
  rep.ok = true;
  QuadVal alpha{p.alpha_base.a - p.eps, p.alpha_base.b, p.alpha_base.r};
  const Rat w0(p.w0), w1(p.w1), w2(p.w2), H(h);
  const Rat d1 = w1 + w2 + H - Rat(1);
  const Rat d0 = w0 + w2 + H - Rat(1);
  double alpha_d = alpha.a.to_double() + alpha.b.to_double() * std::sqrt(static_cast<double>(alpha.r));

  auto add = [&](const std::string& name, const Rat& lhs_mult, const Rat& rhs) {
    bool ok = quad_times_less(alpha, lhs_mult, rhs);
    rep.slacks.push_back({name, rhs.to_double() - alpha_d * lhs_mult.to_double()});
    if (!ok) rep.ok = false;
  };
  auto add_plain = [&](const std::string& name, const Rat& lhs, const Rat& rhs) {
    bool ok = lhs < rhs;
    rep.slacks.push_back({name, rhs.to_double() - lhs.to_double()});
    if (!ok) rep.ok = false;
  };

  auto add_plain_le = [&](const std::string& name, const Rat& lhs, const Rat& rhs) {
    bool ok = !(rhs < lhs);
    rep.slacks.push_back({name, rhs.to_double() - lhs.to_double()});
    if (!ok) rep.ok = false;
  };

  add_plain("w1<w0", w1, w0);
  add_plain("w0<(ell-1)w1", w0, Rat(p.ell - 1) * w1);
  // Keeps the through-v detour into a sibling chain from undercutting d0.
  add_plain_le("w0<=w1+2w2", w0, w1 + Rat(2) * w2);
  switch (p.problem) {
    case Problem::ORACLE:
      add("chain", d1, d0);  // alpha*d1 < d0, the tilde-d separation
      break;
    case Problem::STATELESS:
      add("(1)", d1, d0);
      add("(2)", d0, Rat(p.ell - 1) * w1 + w2 + H - Rat(1));
      add("(3)", d0, Rat(2) * w0 + w1 + w2 + H - Rat(1));
      break;
    case Problem::STATEFUL:
      add("(1)", d1, d0);
      add("(2)", d0, Rat(p.ell - 1) * w1 + w2 + H - Rat(1));
      add("(3)", d0, Rat(2) * w0 + w1 + w2 + H - Rat(1));
      add("(4)", d0, w0 + Rat(3) * w2 + H - Rat(1));
      add("(5)", d1, w1 + Rat(3) * w2 + H - Rat(1));
      break;
  }
  return rep;
}

std::vector<int> decode_from_oracle(const GammaInstance& inst, const std::vector<i64>& estimates) {
  if (estimates.size() != inst.x_index.size())
    throw std::invalid_argument("one estimate per planted bit required");
  const i64 d0 = inst.d0();
  std::vector<int> xhat(estimates.size());
  for (size_t b = 0; b < estimates.size(); ++b) xhat[b] = estimates[b] < d0 ? 1 : 0;
  return xhat;
}

std::vector<int> decode_from_routing(const GammaInstance& inst, const std::vector<int>& first_hops) {
  if (first_hops.size() != inst.x_index.size())
    throw std::invalid_argument("one first hop per planted bit required");
  std::vector<int> xhat(first_hops.size());
  for (size_t b = 0; b < first_hops.size(); ++b)
    xhat[b] = first_hops[b] == inst.roles.v ? 0 : 1;
  return xhat;
}

Graph high_girth_greedy(int k, int ell, int target_edges, std::uint64_t seed,
                        bool* target_reached) {
  if (k < 1 || ell < 4 || ell % 2 != 0) throw std::invalid_argument("need k >= 1, even ell >= 4");
  Graph g(2 * k);
  std::vector<std::pair<int, int>> cands;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cands.push_back({i, k + j});
  Rng rng = substream(seed, 0x67697274ULL);
  for (size_t i = cands.size(); i > 1; --i) std::swap(cands[i - 1], cands[rng.below(i)]);

  int added = 0;
  for (const auto& [u, t] : cands) {
    if (added >= target_edges) break;
    // Adding {u, t} closes a cycle of length hop(u, t) + 1; keep girth >= ell.
    std::vector<int> hd = hop_distances(g, u);
    if (hd[t] != -1 && hd[t] + 1 < ell) continue;
    g.add_edge(u, t, 1);
    ++added;
  }
  if (target_reached) *target_reached = (added >= target_edges);
  return g;
}

}  // namespace hybridlab
