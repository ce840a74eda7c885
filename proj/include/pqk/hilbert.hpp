#ifndef PQK_HILBERT_HPP
#define PQK_HILBERT_HPP

#include <set>
#include <utility>
#include <vector>

#include "pqk/affine.hpp"
#include "pqk/unipoly.hpp"

namespace pqk {

/// Coefficients of (H-2)^(x)m = sum_j (-1)^j (C(2m,j) - C(2m,j-2)) S^{m-j}H,
/// j = 0..m (the Clebsch-Gordan expansion).
struct CGDecomposition {
  int m = 0;
  std::vector<Rat> coeff;

  /// Virtual rank sum; zero for every m >= 1.
  Rat rank_residual() const;
};

CGDecomposition cg_coefficients(int m);

/// The Hilbert data at n = 5: values f(0..11) as affine forms in d, v and
/// ahat, and the interpolated degree-11 polynomial.
struct HilbertData {
  std::vector<ParamAffine> values;  // index q = 0..11
  Poly1<ParamAffine> poly;

  ParamAffine at(int q) const;  // evaluates the polynomial, any q >= 0
};

HilbertData solve_f_values();

/// 0 <= f(5+2q) and f(5+2q) <= C(11+2q, 11): returned as the pair
/// (f(5+2q), binomial bound).
std::pair<ParamAffine, Rat> bound_inequalities(const HilbertData& h, int q);

/// Exact A-hat window for isometry-free manifolds: the lower bound from
/// the combined linear inequality at d = 0, the upper one from
/// f(11) <= 12376 at v = 1, d = 0.
struct AhatBounds {
  Rat lower, upper;
  ParamAffine combined;  // (-1053 + 136 d + 32768 ahat)/448 as printed
};

AhatBounds ahat_bounds();

/// Residues (d, v) mod 140 solving the f(9)-integrality congruence at
/// ahat = 0, with the factored description.
struct CongruenceReport {
  std::set<std::pair<int, int>> residues;            // enumerated solution set
  std::set<std::pair<int, int>> factored;            // d = 1 mod 7 AND v = 4 mod 20
  std::set<std::pair<int, int>> disjunction_reading; // d = 1 mod 7 OR v = 4 mod 20
  bool matches_conjunction = false;
  bool matches_disjunction = false;
};

CongruenceReport congruences();

/// Admissible (d, v) pairs at ahat = 0: the congruences, the linear
/// inequality, and the total-deficiency bound 11 + 2v - d >= 0.
std::vector<std::pair<int, int>> admissible_pairs();

}  // namespace pqk

#endif
