#include "hybridlab/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace hybridlab {

double node_comm_bound(const BoundQuery& q) {
  if (q.p <= 0 || q.p > 1) throw std::invalid_argument("p must be in (0, 1]");
  if (q.n < 1 || q.gamma < 1) throw std::invalid_argument("n and gamma must be >= 1");
  double numer = q.p * q.H - 1.0 - q.y;
  return std::max(0.0, std::min(numer / (q.n * q.gamma), q.h));
}

TradeoffResult optimize_tradeoff(double n, double gamma, double delta) {
  if (delta <= 0 || n < 2 || gamma < 1) throw std::invalid_argument("need delta > 0, n >= 2, gamma >= 1");
  TradeoffResult r;
  r.k_opt = std::pow(n * n * gamma, 1.0 / (2.0 + delta));
  r.h_opt = n / r.k_opt;
  r.rounds_lb = r.h_opt;
  return r;
}

Rat girth_density(int ell) {
  if (ell < 4 || ell % 2 != 0) throw std::invalid_argument("ell must be even and >= 4");
  switch (ell) {
    case 4:
    case 6:
    case 8:
    case 12:
      return Rat(2, ell - 2);
    case 10:
      throw UnsupportedGirth(10);
    default:  // ell >= 14
      return ell % 4 == 2 ? Rat(4, 3 * ell - 10) : Rat(4, 3 * ell - 12);
  }
}

std::vector<StretchRow> stretch_table(TableKind kind) {
  auto row = [](std::string name, QuadVal base, int ell) {
    Rat d = girth_density(ell);
    return StretchRow{std::move(name), base, false, rounds_exponent(d), label_exponent(d)};
  };
  switch (kind) {
    case TableKind::ORACLE:
      return {row("3-eps", {Rat(3), Rat(0), 0}, 4), row("5-eps", {Rat(5), Rat(0), 0}, 6),
              row("7-eps", {Rat(7), Rat(0), 0}, 8), row("11-eps", {Rat(11), Rat(0), 0}, 12)};
    case TableKind::STATELESS:
      return {row("sqrt(3)-eps", {Rat(0), Rat(1), 3}, 4),
              row("sqrt(5)-eps", {Rat(0), Rat(1), 5}, 6),
              row("1+sqrt(2)-eps", {Rat(1), Rat(1), 2}, 8)};
    case TableKind::STATEFUL:
      return {row("sqrt(2)-eps", {Rat(0), Rat(1), 2}, 4),
              row("5/3-eps", {Rat(5, 3), Rat(0), 0}, 6),
              row("7/4-eps", {Rat(7, 4), Rat(0), 0}, 8),
              row("(3+sqrt(17))/4-eps", {Rat(3, 4), Rat(1, 4), 17}, 12)};
    case TableKind::UNWEIGHTED: {
      Rat d(1);
      return {StretchRow{"exact", {Rat(1), Rat(0), 0}, true, rounds_exponent(d), label_exponent(d)}};
    }
  }
  throw std::logic_error("unreachable");
}

double label_cap(double n, double gamma, double delta, double c) {
  if (delta <= 0) throw std::invalid_argument("delta must be > 0");
  return c * std::pow(n, 2.0 * delta / (2.0 + delta)) * std::pow(gamma, delta / (2.0 + delta));
}

double entropy_of_planted(const GammaInstance& inst, EntropyConvention convention) {
  double bits = static_cast<double>(inst.X.size());
  return convention == EntropyConvention::STANDARD ? bits : bits / 2.0;
}

}  // namespace hybridlab
