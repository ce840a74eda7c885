#include "pqk/hilbert.hpp"

#include <stdexcept>

#include "pqk/linsolve.hpp"

namespace pqk {

CGDecomposition cg_coefficients(int m) {
  if (m < 0) throw std::invalid_argument("cg_coefficients: m must be >= 0");
  CGDecomposition out;
  out.m = m;
  for (int j = 0; j <= m; ++j) {
    Rat c = Rat::binomial(2 * m, j) - Rat::binomial(2 * m, j - 2);
    if (j % 2 == 1) c = -c;
    out.coeff.push_back(c);
  }
  return out;
}

Rat CGDecomposition::rank_residual() const {
  Rat s(0);
  for (int j = 0; j <= m; ++j) s += coeff[j] * Rat(m - j + 1);
  return s;
}

HilbertData solve_f_values() {
  // Unknowns f(0..11). Known rows: f(0) = ahat, f(1) = f(3) = 0, f(5) = 1,
  // f(7) = d. Pairing rows: sum_j cg_j(m) f(m-j) equals u^5 = v/1024 at
  // m = 5 and vanishes for m = 6..11 (the expansion starts in weight m).
  const int N = 12;
  std::vector<std::string> unknowns;
  for (int q = 0; q < N; ++q) unknowns.push_back("f" + std::to_string(q));
  std::vector<std::vector<Rat>> a;
  std::vector<ParamAffine> rhs;
  auto unit_row = [&](int q, ParamAffine r) {
    std::vector<Rat> row(N, Rat(0));
    row[q] = Rat(1);
    a.push_back(std::move(row));
    rhs.push_back(std::move(r));
  };
  unit_row(0, ParamAffine::param("ahat"));
  unit_row(1, ParamAffine(Rat(0)));
  unit_row(3, ParamAffine(Rat(0)));
  unit_row(5, ParamAffine(Rat(1)));
  unit_row(7, ParamAffine::param("d"));
  for (int m = 5; m <= 11; ++m) {
    CGDecomposition cg = cg_coefficients(m);
    std::vector<Rat> row(N, Rat(0));
    for (int j = 0; j <= m; ++j) row[m - j] += cg.coeff[j];
    a.push_back(std::move(row));
    rhs.push_back(m == 5 ? ParamAffine::param("v", Rat(1, 1024)) : ParamAffine(Rat(0)));
  }
  ParametricSolution sol = solve_parametric(std::move(a), std::move(rhs), unknowns);
  if (!sol.consistent || !sol.free_unknowns.empty())
    throw std::logic_error("solve_f_values: singular system");

  HilbertData h;
  for (int q = 0; q < N; ++q) h.values.push_back(sol.expression_of("f" + std::to_string(q)));
  std::vector<std::pair<Rat, ParamAffine>> pts;
  for (int q = 0; q < N; ++q) pts.push_back({Rat(q), h.values[q]});
  h.poly = UniPoly::interpolate<ParamAffine>(pts);
  return h;
}

ParamAffine HilbertData::at(int q) const {
  ParamAffine acc;
  Rat x(q);
  for (int i = poly.degree(); i >= 0; --i) acc = acc * x + poly.coeff(i);
  return acc;
}

std::pair<ParamAffine, Rat> bound_inequalities(const HilbertData& h, int q) {
  if (q < 0) throw std::invalid_argument("bound_inequalities: q must be >= 0");
  return {h.at(5 + 2 * q), Rat::binomial(11 + 2 * q, 11)};
}

AhatBounds ahat_bounds() {
  HilbertData h = solve_f_values();
  AhatBounds out;

  // Lower bound: eliminate v between f(9) >= 0 and the volume inequality
  // c2 u^4 - u^5 >= 0 expressed in (d, ahat, v); the factor on the second
  // inequality is 64, cancelling the v-coefficient exactly.
  ParamAffine f9 = h.values[9];
  // c2u^4 - u^5 >= 0 becomes -81/70 + 3d/28 + 1536 ahat/35 - 36 v/5120 >= 0.
  ParamAffine vol;
  vol.constant = Rat(-81, 70);
  vol.coeff["d"] = Rat(3, 28);
  vol.coeff["ahat"] = Rat(1536, 35);
  vol.coeff["v"] = Rat(-36, 5120);
  ParamAffine combo = f9 + vol * Rat(64);
  if (!combo.coefficient("v").is_zero())
    throw std::logic_error("ahat_bounds: v did not cancel");
  // Scale to the printed shape (-1053 + 136 d + 32768 ahat)/448.
  out.combined = combo * (Rat(32768, 448) / combo.coefficient("ahat"));
  ParamAffine at_d0 = out.combined.substituted("d", ParamAffine(Rat(0)));
  out.lower = -at_d0.constant / at_d0.coefficient("ahat");

  // Upper bound: f(11) <= C(17, 11) = 12376 at v = 1, d = 0.
  ParamAffine f11 = h.values[11].substituted("d", ParamAffine(Rat(0)))
                        .substituted("v", ParamAffine(Rat(1)));
  out.upper = (Rat::binomial(17, 11) - f11.constant) / f11.coefficient("ahat");
  return out;
}

CongruenceReport congruences() {
  // f(9) at ahat = 0: (-10692 + 1760 d + 63 v)/140 must be an integer,
  // i.e. 88 + 80 d + 63 v = 0 mod 140.
  HilbertData h = solve_f_values();
  ParamAffine f9 = h.values[9].substituted("ahat", ParamAffine(Rat(0)));
  Rat den(140);
  long long c0 = (f9.constant * den).num_ll();
  long long cd = (f9.coefficient("d") * den).num_ll();
  long long cv = (f9.coefficient("v") * den).num_ll();
  auto mod = [](long long x, long long m) { return ((x % m) + m) % m; };

  CongruenceReport rep;
  for (int d = 0; d < 140; ++d)
    for (int v = 0; v < 140; ++v) {
      if (mod(c0 + cd * d + cv * v, 140) == 0) rep.residues.insert({d, v});
      if (d % 7 == 1 && v % 20 == 4) rep.factored.insert({d, v});
      if (d % 7 == 1 || v % 20 == 4) rep.disjunction_reading.insert({d, v});
    }
  rep.matches_conjunction = rep.residues == rep.factored;
  rep.matches_disjunction = rep.residues == rep.disjunction_reading;
  return rep;
}

std::vector<std::pair<int, int>> admissible_pairs() {
  // d = 1 mod 7 with 15 <= d <= 36; v = 4 mod 20 with 1 <= v <= 1024;
  // -162/35 + 3d/7 - 144 v / 5120 >= 0; total deficiency 11 + 2v - d >= 0.
  std::vector<std::pair<int, int>> out;
  for (int d = 15; d <= 36; ++d) {
    if (d % 7 != 1) continue;
    for (int v = 4; v <= 1024; v += 20) {
      Rat lin = Rat(-162, 35) + Rat(3 * d, 7) - Rat(144LL * v, 5120);
      if (lin.sign() < 0) continue;
      if (11 + 2 * v - d < 0) continue;
      out.push_back({d, v});
    }
  }
  return out;
}

}  // namespace pqk
