// Batch experiment driver: generate, verify, run, decode, and tabulate.
// Everything is reproducible from the command line plus --seed; CSV output is
// byte-identical across reruns when --no-timestamp is given.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "hybridlab/bounds.hpp"
#include "hybridlab/graph.hpp"
#include "hybridlab/json_io.hpp"
#include "hybridlab/lowerbound.hpp"
#include "hybridlab/rng.hpp"
#include "hybridlab/schemes.hpp"
#include "hybridlab/sim.hpp"

using namespace hybridlab;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  bool no_timestamp = false;

  std::string out_or(const std::string& fallback) const { return out.empty() ? fallback : out; }
};

void write_text(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

std::string timestamp_header(const GlobalOpts& g) {
  if (g.no_timestamp) return "";
  std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# generated ") + buf + "\n";
}

Problem parse_problem(const std::string& s) {
  if (s == "oracle") return Problem::ORACLE;
  if (s == "stateless") return Problem::STATELESS;
  if (s == "stateful") return Problem::STATEFUL;
  throw CLI::ValidationError("--problem", "expected oracle|stateless|stateful");
}

// ---------------------------------------------------------------- gen

int cmd_gen(const GlobalOpts& g, const std::string& kind, const std::string& graph_kind, int k,
            int h, int ell, const std::string& problem, double eps, int n, double density,
            i64 max_w) {
  if (!graph_kind.empty()) {
    if (graph_kind != "random") throw CLI::ValidationError("--graph", "only 'random' is supported");
    if (n < 2) throw CLI::ValidationError("--n", "need n >= 2");
    long long target_m = static_cast<long long>(density * n * (n - 1) / 2.0);
    int extra = static_cast<int>(std::max<long long>(0, target_m - (n - 1)));
    Graph gr = random_connected_graph(n, extra, max_w, g.seed);
    std::string path = g.out_or("graph.json");
    write_json_file(path, graph_to_json(gr));
    std::printf("graph: n=%d m=%d max_w=%lld -> %s\n", gr.n(), gr.m(),
                static_cast<long long>(gr.max_weight()), path.c_str());
    return 0;
  }

  GammaInstance inst;
  if (kind == "unweighted") {
    inst = gen_unweighted_random(k, h, g.seed);
  } else if (kind == "weighted") {
    WeightPreset preset = make_preset(parse_problem(problem), ell, eps, h);
    Graph base = ell == 4 ? complete_bipartite(k) : high_girth_greedy(k, ell, k * k, g.seed);
    inst = gen_weighted_random(base, h, preset, g.seed);
  } else {
    throw CLI::ValidationError("--kind", "expected unweighted|weighted");
  }
  VerificationReport rep =
      inst.kind == GammaKind::UNWEIGHTED ? verify_unweighted(inst) : verify_weighted(inst);
  std::string path = g.out_or("instance.json");
  write_json_file(path, instance_to_json(inst));
  std::printf("instance: kind=%s k=%d h=%d n=%d bits=%zu d1=%lld d0=%lld verify=%s -> %s\n",
              kind.c_str(), inst.k, inst.h, inst.graph.n(), inst.X.size(),
              static_cast<long long>(rep.d1), static_cast<long long>(rep.d0),
              rep.pass ? "pass" : "FAIL", path.c_str());
  return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& in) {
  GammaInstance inst = instance_from_json(read_json_file(in));
  VerificationReport rep =
      inst.kind == GammaKind::UNWEIGHTED ? verify_unweighted(inst) : verify_weighted(inst);
  int bad = 0;
  for (const PairRecord& r : rep.records)
    if (!r.ok) {
      if (++bad <= 5)
        std::printf("pair (%d,%d) x=%d measured=%lld expected=%lld via_v=%d\n", r.i, r.j, r.x,
                    static_cast<long long>(r.measured), static_cast<long long>(r.expected),
                    r.via_v ? 1 : 0);
    }
  std::printf("verify: pairs=%zu failures=%d hop_separation=%s d1=%lld d0=%lld -> %s\n",
              rep.records.size(), bad, rep.hop_separation_ok ? "ok" : "FAIL",
              static_cast<long long>(rep.d1), static_cast<long long>(rep.d0),
              rep.pass ? "pass" : "FAIL");
  return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------- run

struct SchemeOpts {
  double x = 0.0;      // 0 = auto: n^(1/3+zeta)
  double zeta = 0.0;
  double ksi = 2.0;
  double widen = 1.0;
  int h = 0;           // 0 = auto: ceil(2*x*ln n)
  bool approx = false;
  std::string rssp_mode = "simulated";
  double gamma_c = 16.0;

  RsspMode mode() const {
    if (rssp_mode == "simulated") return RsspMode::SIMULATED;
    if (rssp_mode == "cost-model") return RsspMode::COST_MODEL;
    throw CLI::ValidationError("--rssp-mode", "expected simulated|cost-model");
  }
};

Scheme build_for(const Graph& gr, const SchemeOpts& so, std::uint64_t seed) {
  int n = gr.n();
  double x = so.x > 0 ? so.x : std::pow(n, 1.0 / 3.0 + so.zeta);
  int h = so.h > 0 ? so.h : static_cast<int>(std::ceil(2.0 * x * std::log(std::max(2, n))));
  HybridConfig cfg = standard_hybrid(n, so.gamma_c);
  return so.approx ? build_scheme_approx(gr, cfg, x, h, so.widen, seed, so.mode(), so.ksi)
                   : build_scheme_exact(gr, cfg, x, h, seed, so.mode(), so.ksi);
}

struct TrialRow {
  int trial = 0;
  int n = 0, m = 0;
  int rounds = 0;
  i64 global_bits = 0;
  bool sampling_ok = false;
  double max_stretch = 0.0;
  i64 label_bits = 0;
  bool error = false;
  std::string message;
};

int cmd_run(const GlobalOpts& g, const SchemeOpts& so, const std::string& in, int trials, int n,
            double density, i64 max_w) {
  Graph loaded;
  bool have_loaded = !in.empty();
  if (have_loaded) loaded = graph_from_json(read_json_file(in));

  std::vector<TrialRow> rows(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, g.jobs))
#endif
  for (int t = 0; t < trials; ++t) {
    TrialRow row;
    row.trial = t;
    try {
      Graph gr;
      if (have_loaded) {
        gr = loaded;
      } else {
        long long target_m = static_cast<long long>(density * n * (n - 1) / 2.0);
        int extra = static_cast<int>(std::max<long long>(0, target_m - (n - 1)));
        gr = random_connected_graph(n, extra, max_w, substream(g.seed, t).next());
      }
      Scheme sc = build_for(gr, so, substream(g.seed, 1000 + t).next());
      row.n = gr.n();
      row.m = gr.m();
      row.rounds = sc.stats.rounds;
      row.global_bits = sc.stats.global_bits_total;
      row.sampling_ok = sc.sampling_ok;
      std::vector<DistanceTable> truth = all_pairs_serial(gr);
      double worst = 1.0;
      for (int a = 0; a < gr.n(); ++a)
        for (int b = 0; b < gr.n(); ++b) {
          if (a == b || truth[a].dist[b] == kInf || truth[a].dist[b] == 0) continue;
          double r = static_cast<double>(eval_oracle(sc, a, b)) /
                     static_cast<double>(truth[a].dist[b]);
          if (r > worst) worst = r;
        }
      row.max_stretch = worst;
      i64 bits = 0;
      for (int v = 0; v < gr.n(); ++v)
        bits += so.approx ? measure_label_bits(sc.approx_labels[v], gr.n(), gr.max_weight())
                          : measure_label_bits(sc.exact_labels[v], gr.n(), gr.max_weight());
      row.label_bits = bits;
    } catch (const std::exception& e) {
      row.error = true;
      row.message = e.what();
    }
    rows[t] = row;
  }

  std::ostringstream csv;
  csv << timestamp_header(g);
  csv << "trial,n,m,rounds,global_bits,sampling_ok,max_stretch,label_bits,error\n";
  int errors = 0, sampling_failures = 0;
  double worst = 0.0;
  for (const TrialRow& r : rows) {
    if (r.error) ++errors;
    if (!r.error && !r.sampling_ok) ++sampling_failures;
    worst = std::max(worst, r.max_stretch);
    char line[256];
    std::snprintf(line, sizeof line, "%d,%d,%d,%d,%lld,%d,%.6f,%lld,%s\n", r.trial, r.n, r.m,
                  r.rounds, static_cast<long long>(r.global_bits), r.sampling_ok ? 1 : 0,
                  r.max_stretch, static_cast<long long>(r.label_bits),
                  r.error ? r.message.c_str() : "");
    csv << line;
  }
  char summary[160];
  std::snprintf(summary, sizeof summary, "summary,trials=%d,errors=%d,sampling_failures=%d,max_stretch=%.6f\n",
                trials, errors, sampling_failures, worst);
  csv << summary;
  std::string path = g.out_or("results.csv");
  write_text(path, csv.str());
  std::printf("run: %d trials, %d errors, %d sampling failures, max stretch %.4f -> %s\n", trials,
              errors, sampling_failures, worst, path.c_str());
  bool exact_violation = !so.approx && worst > 1.0 && sampling_failures == 0;
  return (errors == 0 && !exact_violation) ? 0 : 1;
}

// ---------------------------------------------------------------- decode

int cmd_decode(const GlobalOpts& g, const SchemeOpts& so, const std::string& in) {
  GammaInstance inst = instance_from_json(read_json_file(in));
  Scheme sc = build_for(inst.graph, so, g.seed);
  std::vector<i64> est(inst.x_index.size());
  std::vector<int> hops(inst.x_index.size());
  for (size_t b = 0; b < inst.x_index.size(); ++b) {
    auto [i, j] = inst.x_index[b];
    est[b] = eval_oracle(sc, inst.roles.sources[i], inst.roles.targets[j]);
    hops[b] = routing_next(sc, inst.roles.sources[i], inst.roles.targets[j]);
  }
  std::vector<int> via_oracle = decode_from_oracle(inst, est);
  std::vector<int> via_routing = decode_from_routing(inst, hops);
  int ok_o = 0, ok_r = 0;
  std::ostringstream csv;
  csv << timestamp_header(g);
  csv << "bit,i,j,x,xhat_oracle,xhat_routing\n";
  for (size_t b = 0; b < inst.X.size(); ++b) {
    if (via_oracle[b] == inst.X[b]) ++ok_o;
    if (via_routing[b] == inst.X[b]) ++ok_r;
    csv << b << "," << inst.x_index[b].first << "," << inst.x_index[b].second << "," << inst.X[b]
        << "," << via_oracle[b] << "," << via_routing[b] << "\n";
  }
  double acc_o = inst.X.empty() ? 1.0 : static_cast<double>(ok_o) / inst.X.size();
  double acc_r = inst.X.empty() ? 1.0 : static_cast<double>(ok_r) / inst.X.size();
  char summary[128];
  std::snprintf(summary, sizeof summary, "summary,accuracy_oracle=%.6f,accuracy_routing=%.6f\n",
                acc_o, acc_r);
  csv << summary;
  std::string path = g.out_or("decode.csv");
  write_text(path, csv.str());
  std::printf("decode: bits=%zu sampling_ok=%d accuracy oracle=%.4f routing=%.4f -> %s\n",
              inst.X.size(), sc.sampling_ok ? 1 : 0, acc_o, acc_r, path.c_str());
  return (acc_o == 1.0 && acc_r == 1.0) ? 0 : 1;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const GlobalOpts& g, const std::string& problem, bool tradeoff, double n,
               double gamma, double delta, int girth_ell, bool label_cap_mode, double cap_c) {
  std::ostringstream csv, text;
  csv << timestamp_header(g);
  if (tradeoff) {
    TradeoffResult r = optimize_tradeoff(n, gamma, delta);
    csv << "n,gamma,delta,k_opt,h_opt,rounds_lb\n";
    char line[160];
    std::snprintf(line, sizeof line, "%.0f,%.6g,%.6g,%.6g,%.6g,%.6g\n", n, gamma, delta, r.k_opt,
                  r.h_opt, r.rounds_lb);
    csv << line;
    std::printf("tradeoff: k=%.6g h=%.6g rounds_lb=%.6g\n", r.k_opt, r.h_opt, r.rounds_lb);
  } else if (girth_ell > 0) {
    Rat d = girth_density(girth_ell);
    csv << "ell,delta,rounds_exp,label_exp\n";
    csv << girth_ell << "," << d.str() << "," << rounds_exponent(d).str() << ","
        << label_exponent(d).str() << "\n";
    std::printf("girth density: ell=%d delta=%s (%.6f)\n", girth_ell, d.str().c_str(),
                d.to_double());
  } else if (label_cap_mode) {
    double cap = label_cap(n, gamma, delta, cap_c);
    csv << "n,gamma,delta,c,label_cap_bits\n";
    char line[160];
    std::snprintf(line, sizeof line, "%.0f,%.6g,%.6g,%.6g,%.6g\n", n, gamma, delta, cap_c, cap);
    csv << line;
    std::printf("label cap: %.6g bits\n", cap);
  } else {
    TableKind kind = problem == "oracle"      ? TableKind::ORACLE
                     : problem == "stateless" ? TableKind::STATELESS
                     : problem == "stateful"  ? TableKind::STATEFUL
                     : problem == "unweighted"
                         ? TableKind::UNWEIGHTED
                         : throw CLI::ValidationError("--problem",
                                                      "expected oracle|stateless|stateful|unweighted");
    csv << "problem,stretch,rounds_exp,label_exp\n";
    text << "problem      stretch          rounds exp  label exp\n";
    for (const StretchRow& row : stretch_table(kind)) {
      csv << problem << "," << row.stretch_name << "," << row.rounds_exp.str() << ","
          << row.label_exp.str() << "\n";
      char line[160];
      std::snprintf(line, sizeof line, "%-12s %-16s %-11s %s\n", problem.c_str(),
                    row.stretch_name.c_str(), row.rounds_exp.str().c_str(),
                    row.label_exp.str().c_str());
      text << line;
    }
    std::fputs(text.str().c_str(), stdout);
  }
  std::string path = g.out_or("bounds.csv");
  write_text(path, csv.str());
  std::printf("-> %s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HYBRID-model distance oracle / routing scheme laboratory"};
  app.require_subcommand(1);
  // --h is a domain parameter below; keep help on --help only.
  app.set_help_flag("--help", "print help");
  // Let global flags (--seed, --jobs, ...) appear after the subcommand too.
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "trial-level parallelism")->capture_default_str();
  app.add_option("--out", g.out, "output file path (command-specific default otherwise)");
  app.add_flag("--no-timestamp", g.no_timestamp, "suppress the CSV timestamp header line");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a planted instance or a random graph");
  gen->set_help_flag("--help", "print help");
  std::string kind = "unweighted", graph_kind, problem = "oracle";
  int k = 4, h = 3, ell = 4, n = 100;
  double eps = 0.1, density = 0.05;
  i64 max_w = 8;
  gen->add_option("--kind", kind, "unweighted|weighted")->capture_default_str();
  gen->add_option("--graph", graph_kind, "random: emit a random connected graph instead");
  gen->add_option("--k", k, "base size")->capture_default_str();
  gen->add_option("--h", h, "separation parameter")->capture_default_str();
  gen->add_option("--ell", ell, "girth (weighted)")->capture_default_str();
  gen->add_option("--problem", problem, "oracle|stateless|stateful (weighted)")
      ->capture_default_str();
  gen->add_option("--eps", eps, "stretch slack (weighted)")->capture_default_str();
  gen->add_option("--n", n, "node count (--graph random)")->capture_default_str();
  gen->add_option("--density", density, "edge density (--graph random)")->capture_default_str();
  gen->add_option("--max-w", max_w, "max edge weight (--graph random)")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "re-verify a stored instance");
  verify->set_help_flag("--help", "print help");
  std::string in_file;
  verify->add_option("--in", in_file, "instance JSON")->required();

  // run
  auto* run = app.add_subcommand("run", "build schemes over trials, emit results CSV");
  run->set_help_flag("--help", "print help");
  SchemeOpts so;
  std::string run_in;
  int trials = 10, run_n = 60;
  double run_density = 0.05;
  i64 run_max_w = 8;
  run->add_option("--in", run_in, "graph JSON (otherwise generate per trial)");
  run->add_option("--trials", trials, "trial count")->capture_default_str();
  run->add_option("--n", run_n, "nodes per generated graph")->capture_default_str();
  run->add_option("--density", run_density, "edge density")->capture_default_str();
  run->add_option("--max-w", run_max_w, "max edge weight")->capture_default_str();
  auto add_scheme_flags = [&](CLI::App* cmd) {
    cmd->add_option("--x", so.x, "sampling parameter (0 = n^(1/3+zeta))")->capture_default_str();
    cmd->add_option("--zeta", so.zeta, "exponent offset for auto x")->capture_default_str();
    cmd->add_option("--ksi", so.ksi, "sampling-lemma constant")->capture_default_str();
    cmd->add_option("--widen", so.widen, "exploration widening (approx)")->capture_default_str();
    cmd->add_option("--h", so.h, "cover radius (0 = ceil(2x ln n))")->capture_default_str();
    cmd->add_flag("--approx", so.approx, "build the approximate scheme");
    cmd->add_option("--rssp-mode", so.rssp_mode, "simulated|cost-model")->capture_default_str();
    cmd->add_option("--gamma-c", so.gamma_c, "global budget constant")->capture_default_str();
  };
  add_scheme_flags(run);

  // decode
  auto* decode = app.add_subcommand("decode", "reduction round-trip on a stored instance");
  decode->set_help_flag("--help", "print help");
  std::string decode_in;
  decode->add_option("--in", decode_in, "instance JSON")->required();
  add_scheme_flags(decode);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form tables and formulas");
  bounds->set_help_flag("--help", "print help");
  std::string bounds_problem = "oracle";
  bool tradeoff = false, label_cap_mode = false;
  double bn = 1e6, bgamma = 1.0, bdelta = 1.0, cap_c = 1.0;
  int girth_ell = 0;
  bounds->add_option("--problem", bounds_problem, "stretch table to print")->capture_default_str();
  bounds->add_flag("--tradeoff", tradeoff, "solve the k/h balance point");
  bounds->add_flag("--label-cap", label_cap_mode, "evaluate the label-size cap");
  bounds->add_option("--n", bn, "node count")->capture_default_str();
  bounds->add_option("--gamma", bgamma, "global capacity")->capture_default_str();
  bounds->add_option("--delta", bdelta, "density exponent")->capture_default_str();
  bounds->add_option("--c", cap_c, "cap constant")->capture_default_str();
  bounds->add_option("--girth-density", girth_ell, "density exponent for this girth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(g, kind, graph_kind, k, h, ell, problem, eps, n, density, max_w);
    if (verify->parsed()) return cmd_verify(in_file);
    if (run->parsed()) return cmd_run(g, so, run_in, trials, run_n, run_density, run_max_w);
    if (decode->parsed()) return cmd_decode(g, so, decode_in);
    if (bounds->parsed())
      return cmd_bounds(g, bounds_problem, tradeoff, bn, bgamma, bdelta, girth_ell, label_cap_mode,
                        cap_c);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
