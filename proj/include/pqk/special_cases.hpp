#ifndef PQK_SPECIAL_CASES_HPP
#define PQK_SPECIAL_CASES_HPP

#include <complex>
#include <optional>
#include <vector>

#include "pqk/index_engine.hpp"
#include "pqk/ratfunc.hpp"
#include "pqk/roots.hpp"

namespace pqk {

/// Linear system over Q(x) obtained by substituting c2 -> x u (and hence
/// every monomial c2^a W -> x^a u^a W). Unknowns are the c2-free top-weight
/// monomials.
struct ScalarSolve {
  const IndexContext* ctx = nullptr;
  std::vector<std::string> reduced_basis;
  ParametricSolutionT<RatFunc> sol;
  std::vector<UniPoly> constraints;  // numerators of parameter-free constraint rows

  /// Fold c2 into x-powers and reduce through the solution.
  AffineT<RatFunc> reduce(const LinearForm& f) const;
};

ScalarSolve scalar_solve(const IndexContext& ctx, const std::vector<IndexEquation>& eqs);

std::optional<Rat> rationalize(double z, long long max_den = 1000000);

/// One admissible value of the substitution scalar x, with the data the
/// system pins down at it.
struct ScalarBranch {
  bool x_rational = false;
  Rat x_exact;
  std::complex<double> x_num;
  bool data_exact = false;  // values below exact (rational x) or numeric
  Rat d_exact;
  double d_num = 0;
  bool d_integral = false;
  Rat un_exact;  // u^n
  double un_num = 0;
  std::vector<std::pair<std::string, Rat>> betti_exact;  // b4.., only when exact
};

struct BranchReport {
  int n = 0;
  UniPoly consistency;  // gcd of the constraint numerators, monic
  std::vector<ScalarBranch> branches;
  std::vector<ScalarBranch> integral_branches;
};

/// The b4 = 1 recognition computation in dimension 4n: substitute c2 = x u,
/// impose b2 = 0, b4 = 1, solve over Q(x); admissible x are the common
/// roots of the consistency polynomials.
BranchReport scalar_b4_one_branches(int n);

/// Direct verification that the all-ones characteristic numbers (all
/// Chern classes the matching power of u, u^n = 1) satisfy the fundamental
/// system, and the Betti/isometry data they force.
struct AllOnesCheck {
  int n = 0;
  bool zeros_ok = false;      // every sub-middle genuine index vanishes
  bool middle_ok = false;     // i^{0,n} = 1 and i^{1,n-1} = -1
  std::vector<std::pair<std::string, Rat>> betti;  // b4, b6, ..., b_{2n}
  Rat d;
};

AllOnesCheck scalar_all_ones(int n);

/// Dimension-16 recognition: c2 = x u with rational 3-connectedness. The
/// engine solves the full index system, which pins every characteristic
/// number as a rational function of x and cuts x by a consistency
/// polynomial; the printed intermediate formulas are carried as data and
/// validated against the derived family.
struct Dim16Branch {
  long b6 = 0, b8 = 0;
  Rat c4u2;   // c4 u^2 on the one-parameter family of the printed route
  Rat c4sq;   // c4^2 there
  bool positive = false;  // intersection-form test c4^2 >= 0
};

struct Dim16Report {
  // Derived route: the full system over Q(x).
  UniPoly consistency;  // monic; admissible x are its roots
  RatFunc d_of_x, v_of_x, b4_of_x, b6_of_x, b8_of_x, c4u2_of_x, c4sq_of_x;
  std::vector<long> derived_hits;  // integral roots with 8 <= d < 55

  // Printed-route data, validated against the derivation.
  RatFunc d_printed;                  // 7(304+56x+3x^2)/(16+20x+3x^2)
  bool printed_d_at_admissible = false;   // agrees with d_of_x on the variety
  bool volume_identity = false;           // d = 7 + v/6 + vx/48 along the family
  bool b4_identity_on_variety = false;    // printed b4(v,x) modulo consistency
  std::vector<long> printed_hits;         // integral sweep of d_printed

  long x = 0;  // the unique admissible integral value with 8 <= d < 55
  Rat d, v, b4;

  // Branch analysis at x = 4 along the printed one-parameter family
  // (parameter t = c4 u^2); the derived point must lie on it.
  bool family_passes_derived_point = false;
  std::vector<Dim16Branch> branches;
  std::optional<Dim16Branch> survivor;
};

Dim16Report dim16_search(long sweep_lo = -10000, long sweep_hi = 10000);

/// Dimension-24, b4 = 1: the printed solution list (two rational branches
/// and the degree-7 branch) with the exhaustive root-combination sweep,
/// plus the derivable confirmations (d = 105 from the all-ones data and
/// from the symbolic b4 = 1 elimination).
struct Dim24Report {
  Rat branch_a;  // rejected: not an integer
  Rat branch_b;  // dim Sp(7)
  UniPoly degree7;
  std::vector<Root> roots;

  long long combinations = 0;      // 7^6
  double sweep_min_distance = 0;   // min |d - nearest integer|, all combinations
  double sweep_min_distinct = 0;   // same over injective root choices
  double sweep_min_diagonal = 0;   // same over x1 = ... = x6

  bool branch_b_derived = false;   // 105 arises from the b4 = 1 elimination
  bool all_ones_d_105 = false;     // and from the model characteristic numbers
};

Dim24Report dim24_b4_one(bool derive = true);

/// d over the root combinations of the printed degree-7 expression; the
/// coefficient data is part of the recognition computation's statement.
std::complex<double> dim24_d_at(const std::vector<std::complex<double>>& roots, int i1,
                                int i2, int i3, int i4, int i5, int i6);

}  // namespace pqk

#endif
