// Compares the OpenMP all-pairs and girth kernels against their serial
// reference implementations: verifies agreement, then reports timings.

#include <chrono>
#include <cstdio>
#include <vector>

#include "hybridlab/graph.hpp"

using namespace hybridlab;

namespace {

template <typename F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 400;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  Graph g = random_connected_graph(n, 3 * n, 50, 12345);
  std::printf("graph: n=%d m=%d\n", g.n(), g.m());

  std::vector<DistanceTable> par, ser;
  double t_par = 0, t_ser = 0;
  for (int r = 0; r < repeats; ++r) {
    t_par += time_of([&] { par = all_pairs(g); });
    t_ser += time_of([&] { ser = all_pairs_serial(g); });
  }
  bool apsp_ok = true;
  for (int v = 0; v < n && apsp_ok; ++v) apsp_ok = par[v].dist == ser[v].dist;
  std::printf("all_pairs:  parallel %.3fs  serial %.3fs  speedup %.2fx  agree=%s\n",
              t_par / repeats, t_ser / repeats, t_ser / t_par, apsp_ok ? "yes" : "NO");

  i64 g_par = 0, g_ser = 0;
  double tg_par = 0, tg_ser = 0;
  for (int r = 0; r < repeats; ++r) {
    tg_par += time_of([&] { g_par = girth(g); });
    tg_ser += time_of([&] { g_ser = girth_serial(g); });
  }
  std::printf("girth:      parallel %.3fs  serial %.3fs  speedup %.2fx  agree=%s (girth=%lld)\n",
              tg_par / repeats, tg_ser / repeats, tg_ser / tg_par, g_par == g_ser ? "yes" : "NO",
              static_cast<long long>(g_par));

  return (apsp_ok && g_par == g_ser) ? 0 : 1;
}
