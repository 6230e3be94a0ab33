#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hybridlab/lowerbound.hpp"
#include "hybridlab/rational.hpp"

namespace hybridlab {

enum class EntropyConvention { STANDARD, HALF };

struct BoundQuery {
  double n = 2;
  double gamma = 1;
  double p = 1.0;  // success probability
  double H = 0;    // entropy in bits
  double y = 0;    // free bits
  double h = 0;    // hop separation
  double delta = 1;
  int ell = 4;
  EntropyConvention entropy_convention = EntropyConvention::STANDARD;
};

struct TradeoffResult {
  double k_opt = 0;
  double h_opt = 0;
  double rounds_lb = 0;
};

enum class TableKind { ORACLE, STATELESS, STATEFUL, UNWEIGHTED };

struct StretchRow {
  std::string stretch_name;  // e.g. "3-eps", "sqrt(3)-eps", "exact"
  QuadVal stretch_base;      // stretch is stretch_base - eps (ignored when exact)
  bool exact = false;
  Rat rounds_exp;  // exponent of n in the round lower bound
  Rat label_exp;   // exponent of n in the label-size cap
};

struct UnsupportedGirth : std::runtime_error {
  int ell;
  explicit UnsupportedGirth(int ell_)
      : std::runtime_error("no density value for girth " + std::to_string(ell_) +
                           "; use ell=12 (a girth-12 graph also has girth >= 10)"),
        ell(ell_) {}
};

// max(0, min((p*H - 1 - y) / (n*gamma), h))
double node_comm_bound(const BoundQuery& q);

// Solves k^(2+delta) = n^2 * gamma; h = n / k; round bound = h.
TradeoffResult optimize_tradeoff(double n, double gamma, double delta);

// Density exponent delta for balanced bipartite graphs of girth ell.
Rat girth_density(int ell);

std::vector<StretchRow> stretch_table(TableKind kind);

// c * n^(2*delta/(2+delta)) * gamma^(delta/(2+delta))
double label_cap(double n, double gamma, double delta, double c = 1.0);

double entropy_of_planted(const GammaInstance& inst, EntropyConvention convention);

// Exponents as exact rationals for a given density exponent delta.
inline Rat rounds_exponent(const Rat& delta) { return delta / (Rat(2) + delta); }
inline Rat label_exponent(const Rat& delta) { return Rat(2) * delta / (Rat(2) + delta); }

}  // namespace hybridlab
