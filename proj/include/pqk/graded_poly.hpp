#ifndef PQK_GRADED_POLY_HPP
#define PQK_GRADED_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pqk/rat.hpp"

namespace pqk {

/// Weighted polynomial ring truncated above a fixed weight. Weights are
/// positive integers; the weight of a monomial is the weight-dot-exponent
/// sum. Everything of larger weight is discarded (ideal quotient).
struct Ring {
  std::vector<std::string> vars;
  std::vector<int> weights;
  int truncation = 0;

  int arity() const { return static_cast<int>(vars.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
  int weight_of(const std::vector<int>& exps) const;
  std::string monomial_name(const std::vector<int>& exps) const;  // "c2^2*u^3"
  std::vector<int> parse_monomial(const std::string& name) const;

  /// All exponent tuples of exactly the given weight, in lexicographic
  /// order of the exponent vector.
  std::vector<std::vector<int>> monomials_of_weight(int w) const;

  bool same(const Ring& o) const {
    return vars == o.vars && weights == o.weights && truncation == o.truncation;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights, int truncation);

/// The standard ring for quaternionic dimension 4n: variables
/// u, c2, c4, ..., c_{2n} with weights 2, 2, 4, ..., 2n and truncation 2n.
RingPtr standard_ring(int n);

class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}
  GradedPoly(RingPtr ring, const Rat& c);

  static GradedPoly var(const RingPtr& ring, const std::string& name);
  static GradedPoly monomial(const RingPtr& ring, const std::vector<int>& exps, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const std::vector<int>& exps) const;
  Rat coeff(const std::string& monomial_name) const;
  Rat constant_term() const;

  /// Sum of all terms of exactly weight w.
  GradedPoly weight_component(int w) const;
  int max_weight_present() const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly operator*(const Rat& s) const;
  GradedPoly pow(int e) const;

  /// exp(a) = sum a^k / k!, requires zero constant term; terminates since a
  /// is nilpotent modulo the truncation ideal.
  GradedPoly exp_series() const;

  /// Substitute every occurrence of all variables by a total evaluation;
  /// values keyed by variable name (used by tests and oracles).
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void insert_term(const std::vector<int>& exps, const Rat& c);
  void check_same_ring(const GradedPoly& o) const;

  RingPtr ring_;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace pqk

#endif
