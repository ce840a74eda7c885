#ifndef PQK_BETTI_HPP
#define PQK_BETTI_HPP

#include <optional>
#include <vector>

#include "pqk/rat.hpp"

namespace pqk {

/// Even Betti numbers b0, b2, ..., b_{2n} of a 4n-manifold half; the other
/// half is filled in by Poincare duality. Odd Betti numbers vanish here.
struct BettiVector {
  int n = 0;
  std::vector<long long> b;  // b[k] = b_{2k}, k = 0..n

  BettiVector(int n_, std::vector<long long> half);

  /// b_{2k} for 0 <= 2k <= 4n via duality.
  long long at(int k) const;

  bool hard_lefschetz_ok() const;  // b_{2k-4} <= b_{2k} up to the middle
  long long euler() const;         // alternating sum = sum of even entries
};

/// LHS - RHS of the linear Betti relation
/// sum_p (6p(n-1-p) - (n-1)(n-3)) b_{2p} = n(n-1) b_{2n} / 2.
Rat betti_relation(const BettiVector& bv);

/// The relation specialized to dimension 4n with b2 etc. symbolic is used
/// in tests; these helpers give the integer coefficient vector.
std::vector<Rat> betti_relation_coeffs(int n);  // index k = 0..n-1, then RHS coeff last

/// Classification of (b4, b8) pairs at n = 5 with b2 = 0:
/// 4(2 b4 - b8 - 1) = 5(b10 - b6) with b10 >= b6 forces either the pair
/// list with b6 = b10, a positive multiple of 5, or no valid (b6, b10).
enum class PairClass { forced_b6_eq_b10, positive_multiple, invalid };
PairClass classify_pair(long long b4, long long b8);

/// Pairs (b4, 2 b4 - 1) for b4 = 1..b4_max; the zero case of the
/// dichotomy. Requires b4_max <= 5 (beyond that positive multiples occur).
std::vector<std::pair<long long, long long>> lemma_pairs(long long b4_max);

struct MinEulerResult {
  long long chi = 0;
  BettiVector argmin;
};

/// Minimal Euler characteristic over b2 = 0 vectors with b4 >= b4_min
/// satisfying the Betti relation and Hard-Lefschetz, searched over a
/// window b4 <= b4_min + window (objective is monotone along feasible
/// rays, so a finite window suffices).
MinEulerResult min_euler(long long b4_min, long long window = 50);

}  // namespace pqk

#endif
