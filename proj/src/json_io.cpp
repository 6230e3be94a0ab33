#include "hybridlab/json_io.hpp"

#include <fstream>

namespace hybridlab {

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (const Edge& e : g.sorted_edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<i64>());
  return g;
}

json stats_to_json(const RoundStats& s) {
  json j;
  j["rounds"] = s.rounds;
  j["global_bits_total"] = s.global_bits_total;
  json per_node = json::array();
  for (size_t v = 0; v < s.global_bits_sent.size(); ++v)
    per_node.push_back({{"sent", s.global_bits_sent[v]}, {"received", s.global_bits_received[v]}});
  j["per_node"] = std::move(per_node);
  j["local_messages"] = s.local_messages;
  json cuts = json::object();
  for (const auto& [label, bits] : s.cuts) cuts[label] = bits;
  j["cuts"] = std::move(cuts);
  return j;
}

json instance_to_json(const GammaInstance& inst) {
  json j = graph_to_json(inst.graph);
  j["kind"] = inst.kind == GammaKind::UNWEIGHTED ? "unweighted" : "weighted";
  j["k"] = inst.k;
  j["h"] = inst.h;
  j["ell"] = inst.ell;
  std::string bits;
  for (int b : inst.X) bits.push_back(b ? '1' : '0');
  j["X"] = bits;
  j["roles"] = {{"sources", inst.roles.sources}, {"transits", inst.roles.transits},
                {"targets", inst.roles.targets}, {"v", inst.roles.v},
                {"v_prime", inst.roles.v_prime}};
  j["weights"] = {inst.w0, inst.w1, inst.w2};
  if (inst.kind == GammaKind::WEIGHTED) j["base_graph"] = graph_to_json(inst.base_girth_graph);
  return j;
}

GammaInstance instance_from_json(const json& j) {
  bool unweighted = j.at("kind").get<std::string>() == "unweighted";
  int k = j.at("k").get<int>();
  int h = j.at("h").get<int>();
  std::vector<int> X;
  for (char c : j.at("X").get<std::string>()) X.push_back(c == '1' ? 1 : 0);
  if (unweighted) return gen_unweighted(k, h, X);
  WeightPreset p;
  p.ell = j.at("ell").get<int>();
  p.w0 = j.at("weights").at(0).get<long long>();
  p.w1 = j.at("weights").at(1).get<long long>();
  p.w2 = j.at("weights").at(2).get<long long>();
  return gen_weighted(graph_from_json(j.at("base_graph")), h, p, X);
}

json scheme_to_json(const Scheme& sc) {
  json j;
  j["approx"] = sc.approx;
  j["params"] = {{"x", sc.x},       {"h", sc.h},       {"explore_h", sc.explore_h},
                 {"ksi", sc.ksi},   {"widen", sc.widen}, {"seed", sc.seed}};
  j["S"] = sc.S.members;
  j["sampling_ok"] = sc.sampling_ok;
  j["stats"] = stats_to_json(sc.stats);
  json labels = json::array();
  i64 w = sc.g.max_weight();
  if (sc.approx) {
    for (const ApproxLabel& lab : sc.approx_labels)
      labels.push_back({{"owner", lab.owner},
                        {"s_u", lab.s_u},
                        {"dist", lab.dist_to_s == kInf ? -1 : lab.dist_to_s},
                        {"bits", measure_label_bits(lab, sc.g.n(), w)}});
  } else {
    for (const ExactLabel& lab : sc.exact_labels) {
      json entries = json::array();
      for (const auto& [s, d] : lab.entries) entries.push_back({s, d == kInf ? -1 : d});
      labels.push_back({{"owner", lab.owner},
                        {"entries", std::move(entries)},
                        {"bits", measure_label_bits(lab, sc.g.n(), w)}});
    }
  }
  j["labels"] = std::move(labels);
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace hybridlab
