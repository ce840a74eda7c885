#ifndef PQK_INDEX_ENGINE_HPP
#define PQK_INDEX_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqk/affine.hpp"
#include "pqk/bundle.hpp"
#include "pqk/graded_poly.hpp"
#include "pqk/linsolve.hpp"

namespace pqk {

/// Exact linear combination of top-weight characteristic-number monomials,
/// keyed by monomial name ("c2^2*u^3").
struct LinearForm {
  std::map<std::string, Rat> coeffs;

  Rat coeff(const std::string& m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  LinearForm& operator+=(const LinearForm& o) {
    for (auto& [m, c] : o.coeffs) {
      coeffs[m] += c;
      if (coeffs[m].is_zero()) coeffs.erase(m);
    }
    return *this;
  }
  LinearForm operator*(const Rat& s) const {
    LinearForm r;
    if (s.is_zero()) return r;
    for (auto& [m, c] : coeffs) r.coeffs[m] = c * s;
    return r;
  }
};

/// Geometry of a formal positive quaternion Kaehler manifold of dimension
/// 4n: the ring of characteristic classes, the bundles E (rank 2n, Chern
/// classes c2..c_{2n}) and H (rank 2, c2(H) = -u), and the A-hat class of
/// T_C M = E (x) H. Index forms are cached per (p, q).
class IndexContext {
 public:
  explicit IndexContext(int n);

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const BundleChar& E() const { return E_; }
  const BundleChar& H() const { return H_; }
  const GradedPoly& ahat() const { return ahat_; }

  /// Weight-2n monomial names, in solver column order.
  const std::vector<std::string>& basis() const { return basis_; }

  /// (p,q) bundles exist globally only for n+p+q even; otherwise the index
  /// is a formal expression.
  bool formal(int p, int q) const { return (n_ + p + q) % 2 != 0; }

  /// <A-hat * ch(Lambda_0^p E) * ch(S^q H)> top component as a linear form.
  const LinearForm& index_form(int p, int q) const;

  const BundleChar& lambda0(int p) const;
  const BundleChar& sym_h(int q) const;

 private:
  int n_;
  RingPtr ring_;
  BundleChar E_, H_;
  GradedPoly ahat_;
  std::vector<std::string> basis_;
  mutable std::map<int, BundleChar> lam0_;
  mutable std::map<int, BundleChar> symh_;
  mutable std::map<std::pair<int, int>, LinearForm> forms_;
};

LinearForm to_linear_form(const GradedPoly& p, int weight);

struct IndexEquation {
  std::string id;
  int p = 0, q = 0;
  LinearForm lhs;
  ParamAffine rhs;
};

struct SolveOptions {
  bool b2_zero = true;        // rationally 3-connected: b2 = 0
  bool with_ahat = true;      // append i^{0,0} = ahat
  bool with_i1np1 = false;    // append i^{1,n+1} = named parameter
  bool i1np1_zero = false;    // append i^{1,n+1} = 0 instead
  bool volume_param = false;  // move u^n to the right-hand side as v/4^n
};

/// The equations of the fundamental system at level n:
/// i^{k,l} = 0 for genuine (k,l) with k+l < n, the Betti rows at k+l = n,
/// and i^{0,n+2} = d; plus the configured extras.
std::vector<IndexEquation> fundamental_system(const IndexContext& ctx, const SolveOptions& opt);

/// Name of the i^{1,n+1} parameter, "i16" at n = 5.
std::string i1np1_param_name(int n);

struct FundamentalSolution {
  const IndexContext* ctx = nullptr;
  SolveOptions options;
  std::vector<IndexEquation> equations;
  ParametricSolution sol;

  /// Affine value of a monomial under the solution (free monomials appear
  /// under their own names).
  ParamAffine value_of(const std::string& monomial) const { return sol.value_of(monomial); }

  /// Substitute the solution into a linear form.
  ParamAffine reduce(const LinearForm& f) const;

  /// Whether "sum coeffs * monomials = rhs" is implied by the system.
  bool implies(const std::map<std::string, Rat>& lhs, const ParamAffine& rhs) const;

  /// Replace the free monomial u^n by v / 4^n in an affine form.
  ParamAffine with_volume(const ParamAffine& a) const;
};

FundamentalSolution solve_fundamental(const IndexContext& ctx, const SolveOptions& opt);

/// The intersection-form combination (k c2^2 + l c2 u + m u^2 + nc c4)^2 u
/// evaluated through the solution; non-negativity is the content of the
/// positivity lemma. Exact and float variants (the float layer feeds the
/// Euler-characteristic argument, where the combination coefficients are
/// irrational).
ParamAffine positivity_form(const FundamentalSolution& fs, const Rat& k, const Rat& l,
                            const Rat& m, const Rat& nc, bool volume = true);
AffineD positivity_form_f(const FundamentalSolution& fs, double k, double l, double m,
                          double nc, bool volume = true);

/// Ratio of affine forms with a scale-invariant normal form (denominator
/// cleared to coprime integer coefficients, first one positive).
struct AffineRatio {
  ParamAffine num, den;
  void normalize();
  friend bool operator==(const AffineRatio& a, const AffineRatio& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct ParabolaReport {
  AffineRatio apex;               // m0 as a function of ahat and v
  double rectangle_max = 0;       // max of the apex-substituted bound
  double argmax_ahat = 0;
  long argmax_v = 0;
  Rat rectangle_max_exact;
  Rat argmax_ahat_exact;
};

/// The S^1-action bound: substitutes the parabola apex into the
/// (c2 u + m u^2)^2 u >= 0 family at d = 0 and maximizes the resulting
/// bound for i^{1,6} over [ahat_lo, ahat_hi] x {1..1024} (integer volume).
ParabolaReport parabola_bound(const FundamentalSolution& fs, const Rat& ahat_lo,
                              const Rat& ahat_hi);

/// Exact value of the apex-substituted bound at a rational point; used to
/// validate the printed closed form.
Rat parabola_closed_form(const FundamentalSolution& fs, const Rat& ahat, const Rat& v);

}  // namespace pqk

#endif
