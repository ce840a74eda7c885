#ifndef PQK_BUNDLE_HPP
#define PQK_BUNDLE_HPP

#include <vector>

#include "pqk/graded_poly.hpp"

namespace pqk {

/// Virtual bundle represented by (rank, Chern character). The stored ch has
/// zero constant term; component of weight j is ch_j. Power operations all
/// route through Adams operations, so nothing ever expands formal roots.
struct BundleChar {
  long long rank = 0;
  GradedPoly ch;  // zero constant term

  BundleChar() = default;
  BundleChar(long long r, GradedPoly c);

  /// rank + ch as one polynomial.
  GradedPoly full_ch() const;
  static BundleChar from_full_ch(const GradedPoly& full);

  static BundleChar trivial(const RingPtr& ring, long long rank);

  bool self_dual() const;  // odd-weight components vanish
};

BundleChar operator+(const BundleChar& a, const BundleChar& b);
BundleChar operator-(const BundleChar& a, const BundleChar& b);

/// Tensor product: ranks multiply, Chern characters multiply.
BundleChar tensor(const BundleChar& a, const BundleChar& b);

/// Adams operation psi^k: weight-j component scales by k^j. Requires k >= 1.
BundleChar adams(int k, const BundleChar& v);

/// Exterior power via the Newton recursion
///   k * lambda^k = sum_{i=1..k} (-1)^{i-1} lambda^{k-i} * psi^i.
BundleChar exterior(int k, const BundleChar& v);

/// Symmetric power via l * sigma^l = sum_{i=1..l} sigma^{l-i} * psi^i.
BundleChar symmetric(int l, const BundleChar& v);

/// Primitive exterior power lambda^k - lambda^{k-2} (lambda of negative
/// index is zero).
BundleChar exterior0(int k, const BundleChar& v);

/// Total Chern class from the Chern character (Newton identities, exact).
GradedPoly chern_classes(const BundleChar& v);

/// Inverse: bundle character from rank and total Chern class (constant 1).
BundleChar ch_of(long long rank, const GradedPoly& total_chern);

/// Total Pontryagin class of the real bundle underlying a complexification:
/// p_i = (-1)^i c_{2i}. Throws if an odd Chern class survives.
GradedPoly pontryagin(const BundleChar& complexified);

/// Characteristic power series of a multiplicative genus, as coefficients
/// of t^k where t stands for the square of a formal root (weight 2).
struct GenusSeries {
  std::vector<Rat> coeff;  // coeff[0] == 1
};

/// Series of the A-hat genus, (x/2)/sinh(x/2) in t = x^2, up to t^terms.
GenusSeries ahat_series(int terms);

/// Multiplicative-sequence class of the genus evaluated at a total
/// Pontryagin class (constant term 1), truncated by the ring.
GradedPoly genus_class(const GenusSeries& g, const GradedPoly& pont);

}  // namespace pqk

#endif
