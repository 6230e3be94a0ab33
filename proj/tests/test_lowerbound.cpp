#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hybridlab/lowerbound.hpp"

using namespace hybridlab;

namespace {

Graph petersen_cover() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5, 1);
    g.add_edge(i, 5 + i, 1);
    g.add_edge(5 + i, 5 + (i + 2) % 5, 1);
  }
  return bipartite_double_cover(g);  // 20 nodes, balanced, girth 6
}

std::vector<i64> true_pair_distances(const GammaInstance& inst) {
  std::vector<i64> out;
  std::vector<DistanceTable> from_src;
  for (int s : inst.roles.sources) from_src.push_back(shortest_paths(inst.graph, s));
  for (const auto& [i, j] : inst.x_index)
    out.push_back(from_src[i].dist[inst.roles.targets[j]]);
  return out;
}

}  // namespace

TEST_CASE("smallest unweighted instance by hand") {
  // k = 1, h = 1: nodes s=0, u=1, t=2, v=3, v'=4; chains are single edges.
  GammaInstance one = gen_unweighted(1, 1, {1});
  CHECK(one.graph.n() == 5);
  CHECK(one.graph.has_edge(0, 1));  // s - u
  CHECK(one.graph.has_edge(3, 4));  // v - v'
  CHECK(one.graph.has_edge(3, 0));  // v - s
  CHECK(one.graph.has_edge(4, 2));  // v' - t
  CHECK(one.graph.has_edge(1, 2));  // planted bit 1
  CHECK(shortest_paths(one.graph, 0).dist[2] == 2);  // h + 1

  GammaInstance zero = gen_unweighted(1, 1, {0});
  CHECK_FALSE(zero.graph.has_edge(1, 2));
  CHECK(shortest_paths(zero.graph, 0).dist[2] == 3);  // h + 2, through v
  CHECK(verify_unweighted(one).pass);
  CHECK(verify_unweighted(zero).pass);
}

TEST_CASE("unweighted node count and role layout") {
  for (int k = 1; k <= 5; ++k)
    for (int h = 1; h <= 4; ++h) {
      GammaInstance inst = gen_unweighted_random(k, h, 17 * k + h);
      CHECK(inst.graph.n() == k * (h + 2) + h + 1);
      CHECK(static_cast<int>(inst.roles.sources.size()) == k);
      CHECK(inst.roles.v == 3 * k);
      CHECK(inst.roles.v_prime == 3 * k + 1);
      CHECK(inst.x_index.size() == static_cast<size_t>(k) * k);
      CHECK(inst.d1() == h + 1);
      CHECK(inst.d0() == h + 2);
    }
}

TEST_CASE("unweighted verification is exhaustive-clean on small instances") {
  for (int k = 1; k <= 4; ++k)
    for (int h = 1; h <= 3; ++h) {
      std::vector<int> zeros(k * k, 0), ones(k * k, 1);
      CHECK(verify_unweighted(gen_unweighted(k, h, zeros)).pass);
      CHECK(verify_unweighted(gen_unweighted(k, h, ones)).pass);
      for (int r = 0; r < 5; ++r)
        CHECK(verify_unweighted(gen_unweighted_random(k, h, 100 * k + 10 * h + r)).pass);
    }
}

TEST_CASE("verification reports the planted orientation through v") {
  GammaInstance inst = gen_unweighted(3, 2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  VerificationReport rep = verify_unweighted(inst);
  CHECK(rep.pass);
  CHECK(rep.hop_separation_ok);
  CHECK(rep.d1 == 3);
  CHECK(rep.d0 == 4);
  REQUIRE(rep.records.size() == 9);
  for (const PairRecord& r : rep.records) {
    CHECK(r.measured == (r.x ? rep.d1 : rep.d0));
    CHECK(r.via_v == (r.x == 0));
  }
}

TEST_CASE("tampered planted bits are caught") {
  GammaInstance inst = gen_unweighted_random(3, 2, 5);
  inst.X[4] ^= 1;  // claim a different bit without regenerating the graph
  CHECK_FALSE(verify_unweighted(inst).pass);
}

TEST_CASE("unweighted generator input validation") {
  CHECK_THROWS_AS(gen_unweighted(0, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(gen_unweighted(2, 0, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_unweighted(2, 2, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("oracle preset worked example") {
  WeightPreset p = make_preset(Problem::ORACLE, 4, 0.5, 10);
  CHECK(p.t == 61);
  CHECK(p.w1 == 61);
  CHECK(p.w0 == 168);
  CHECK(p.w2 == 54);  // ceil((w0 - w1) / 2), so w0 <= w1 + 2*w2
  CHECK(p.w0 <= p.w1 + 2 * p.w2);
  CHECK(p.alpha() == doctest::Approx(222.0 / 115.0 - 0.5));  // (w0+w2)/(w1+w2) - eps
  CHECK(check_inequalities(p, 10).ok);
}

TEST_CASE("presets satisfy their inequality systems across the grid") {
  for (Problem prob : {Problem::ORACLE, Problem::STATELESS, Problem::STATEFUL})
    for (int ell : {4, 6, 8, 10, 12})
      for (double eps : {0.05, 0.1, 0.5})
        for (int h : {2, 5, 20}) {
          WeightPreset p;
          try {
            p = make_preset(prob, ell, eps, h);
          } catch (const InfeasibleEpsilon&) {
            // Only legitimate when the target stretch would drop to <= 1.
            // For oracle/stateless the base is roughly (3b-1)/(b+1) where b is
            // the w0/w1 ratio, because w2 = ceil((w0-w1)/2).
            double b = prob == Problem::ORACLE      ? ell - 1.0 - eps / 2.0
                       : prob == Problem::STATELESS ? std::min(std::sqrt(ell - 1.0),
                                                               1.0 + std::sqrt(2.0))
                                                    : 0.0;
            double base = prob == Problem::STATEFUL
                              ? (ell == 4   ? std::sqrt(2.0)
                                 : ell == 6 ? 5.0 / 3.0
                                 : ell == 8 ? 7.0 / 4.0
                                            : (3.0 + std::sqrt(17.0)) / 4.0)
                              : (3.0 * b - 1.0) / (b + 1.0);
            CHECK(base <= 1.0 + eps + 0.02);
            continue;
          }
          CHECK(p.alpha() > 1.0);
          IneqReport rep = check_inequalities(p, h);
          CHECK(rep.ok);
          for (const auto& [name, slack] : rep.slacks) CHECK(slack >= 0.0);
          CHECK(p.w1 < p.w0);
          CHECK(p.w0 < static_cast<long long>(ell - 1) * p.w1);
          CHECK(p.w0 <= p.w1 + 2 * p.w2);
        }
}

TEST_CASE("raising alpha by two epsilons breaks the system") {
  for (Problem prob : {Problem::ORACLE, Problem::STATELESS, Problem::STATEFUL})
    for (int ell : {4, 6, 10})
      for (double eps : {0.05, 0.1}) {
        WeightPreset p;
        try {
          p = make_preset(prob, ell, eps, 10);
        } catch (const InfeasibleEpsilon&) {
          continue;
        }
        p.eps = Rat(0) - p.eps;  // alpha becomes base + eps
        CHECK_FALSE(check_inequalities(p, 10).ok);
      }
}

TEST_CASE("infeasible epsilon is rejected") {
  // Stateful girth-4 stretch base sqrt(2) < 1.5: eps = 0.5 leaves no headroom.
  CHECK_THROWS_AS(make_preset(Problem::STATEFUL, 4, 0.5, 10), InfeasibleEpsilon);
  CHECK_THROWS_AS(make_preset(Problem::ORACLE, 4, -0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_preset(Problem::ORACLE, 5, 0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_preset(Problem::ORACLE, 4, 0.1, 1), std::invalid_argument);
}

TEST_CASE("weighted instance distances follow the planted bits") {
  for (int k : {2, 4}) {
    Graph base = complete_bipartite(k);
    for (int h : {2, 3, 5}) {
      WeightPreset p = make_preset(Problem::ORACLE, 4, 0.25, h);
      GammaInstance inst = gen_weighted_random(base, h, p, 31 * k + h);
      CHECK(inst.graph.n() == k * (h + 2) + h);
      CHECK(inst.d1() == p.w2 + p.w1 + h - 1);
      CHECK(inst.d0() == p.w2 + p.w0 + h - 1);
      VerificationReport rep = verify_weighted(inst);
      CHECK(rep.pass);
      CHECK(rep.hop_separation_ok);
    }
  }
}

TEST_CASE("weighted girth-6 instances from the double cover") {
  Graph base = petersen_cover();
  for (Problem prob : {Problem::ORACLE, Problem::STATELESS, Problem::STATEFUL})
    for (double eps : {0.1, 0.5}) {
      WeightPreset p;
      try {
        p = make_preset(prob, 6, eps, 3);
      } catch (const InfeasibleEpsilon&) {
        continue;
      }
      GammaInstance inst = gen_weighted_random(base, 3, p, 77);
      CHECK(verify_weighted(inst).pass);
    }
}

TEST_CASE("weighted generator validation") {
  WeightPreset p = make_preset(Problem::ORACLE, 4, 0.25, 3);
  Graph tri(3);
  tri.add_edge(0, 1, 1);
  tri.add_edge(1, 2, 1);
  tri.add_edge(0, 2, 1);
  CHECK_THROWS_AS(gen_weighted_random(tri, 3, p, 1), std::invalid_argument);  // not bipartite
  Graph unbalanced(3);
  unbalanced.add_edge(0, 1, 1);
  unbalanced.add_edge(0, 2, 1);
  CHECK_THROWS_AS(gen_weighted_random(unbalanced, 3, p, 1), std::invalid_argument);
  WeightPreset p6 = make_preset(Problem::ORACLE, 6, 0.25, 3);
  CHECK_THROWS_AS(gen_weighted_random(complete_bipartite(3), 3, p6, 1), GirthTooSmall);
  WeightPreset bad = p;
  bad.w0 = bad.w1;  // violates w1 < w0
  CHECK_THROWS_AS(gen_weighted_random(complete_bipartite(3), 3, bad, 1), PresetInvalid);
  CHECK_THROWS_AS(gen_weighted_random(complete_bipartite(3), 1, p, 1), std::invalid_argument);
}

TEST_CASE("oracle decoding recovers the planted bits, boundary goes to zero") {
  GammaInstance inst = gen_unweighted_random(4, 2, 9);
  std::vector<i64> est = true_pair_distances(inst);
  CHECK(decode_from_oracle(inst, est) == inst.X);
  // Exactly d0 must decode as 0 (one-sided estimates of a bit-0 pair).
  std::vector<i64> boundary(inst.x_index.size(), inst.d0());
  std::vector<int> zeros(inst.x_index.size(), 0);
  CHECK(decode_from_oracle(inst, boundary) == zeros);
  std::vector<i64> below(inst.x_index.size(), inst.d0() - 1);
  std::vector<int> ones(inst.x_index.size(), 1);
  CHECK(decode_from_oracle(inst, below) == ones);
  CHECK_THROWS_AS(decode_from_oracle(inst, {1, 2}), std::invalid_argument);
}

TEST_CASE("routing decoding keys on the first hop through v") {
  GammaInstance inst = gen_unweighted_random(3, 2, 4);
  std::vector<int> hops;
  for (size_t b = 0; b < inst.x_index.size(); ++b)
    hops.push_back(inst.X[b] ? inst.roles.transits[0] : inst.roles.v);
  CHECK(decode_from_routing(inst, hops) == inst.X);
}

TEST_CASE("decoding survives one-sided inflation below the chain gap") {
  WeightPreset p = make_preset(Problem::ORACLE, 4, 0.2, 4);
  GammaInstance inst = gen_weighted_random(complete_bipartite(4), 4, p, 12);
  REQUIRE(verify_weighted(inst).pass);
  std::vector<i64> est = true_pair_distances(inst);
  Rng rng = substream(99, 1);
  double alpha = p.alpha();
  for (int adv = 0; adv < 200; ++adv) {
    std::vector<i64> inflated(est.size());
    for (size_t b = 0; b < est.size(); ++b) {
      double f = 1.0 + rng.real() * (alpha - 1.0);
      inflated[b] = static_cast<i64>(static_cast<double>(est[b]) * f);
    }
    CHECK(decode_from_oracle(inst, inflated) == inst.X);
  }
}

TEST_CASE("greedy girth-4 growth yields the complete bipartite graph") {
  for (int k : {2, 3, 5}) {
    bool reached = false;
    Graph g = high_girth_greedy(k, 4, k * k, 7, &reached);
    CHECK(reached);
    CHECK(g.n() == 2 * k);
    CHECK(g.m() == k * k);
    CHECK(is_bipartite(g));
    if (k >= 2) CHECK(girth(g) == 4);
  }
}

TEST_CASE("greedy girth-6 growth avoids 4-cycles and beats the tree bound") {
  bool reached = false;
  Graph g = high_girth_greedy(12, 6, 144, 3, &reached);
  CHECK_FALSE(reached);        // K_{12,12} has 4-cycles; saturation comes first
  CHECK(girth(g) >= 6);
  CHECK(g.m() > 2 * 12 - 1);   // strictly denser than any forest
  CHECK(is_bipartite(g));
}

TEST_CASE("greedy growth with huge girth target returns a forest") {
  Graph g = high_girth_greedy(6, 1000, 36, 5);
  CHECK(girth(g) == kInf);
  CHECK(g.m() <= 2 * 6 - 1);
}
