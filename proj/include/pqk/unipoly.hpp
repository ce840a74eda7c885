#ifndef PQK_UNIPOLY_HPP
#define PQK_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqk/rat.hpp"

namespace pqk {

/// Dense univariate polynomial over a field-like coefficient type K.
/// K needs +, -, *, /, ==, default-constructed zero, and K(1).
template <class K>
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(K c) { c_.push_back(std::move(c)); trim(); }
  explicit Poly1(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly1 x() { return Poly1(std::vector<K>{K{}, K(1)}); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K{}; }
  const K& lead() const {
    if (c_.empty()) throw std::domain_error("Poly1: zero polynomial has no lead");
    return c_.back();
  }

  Poly1 operator-() const {
    Poly1 r = *this;
    for (auto& v : r.c_) v = K{} - v;
    return r;
  }
  Poly1& operator+=(const Poly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(out));
  }
  Poly1 operator*(const K& s) const {
    Poly1 r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  template <class V>
  V eval(const V& at) const {
    V acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * at + V(c_[i]);
    return acc;
  }
  K eval_k(const K& at) const {
    K acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * at + c_[i];
    return acc;
  }

  Poly1 derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<K> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * K(static_cast<int>(i));
    return Poly1(std::move(out));
  }

  /// Euclidean division; requires nonzero divisor.
  std::pair<Poly1, Poly1> divmod(const Poly1& d) const {
    if (d.is_zero()) throw std::domain_error("Poly1: division by zero polynomial");
    Poly1 r = *this;
    std::vector<K> q(std::max<int>(0, degree() - d.degree() + 1));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      K f = r.lead() / d.lead();
      int shift = r.degree() - d.degree();
      q[shift] += f;
      for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= f * d.c_[i];
      r.trim();
    }
    return {Poly1(std::move(q)), r};
  }

  Poly1 monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / lead());
  }

  static Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
      Poly1 r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Unique interpolant through distinct abscissae (Lagrange, exact).
  /// V must be a vector space over K.
  template <class V>
  static Poly1<V> interpolate(const std::vector<std::pair<K, V>>& points);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K{}) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
template <class V>
Poly1<V> Poly1<K>::interpolate(const std::vector<std::pair<K, V>>& points) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::domain_error("interpolate: duplicate abscissae");
  Poly1<V> acc;
  for (int i = 0; i < n; ++i) {
    // Basis polynomial prod_{j!=i} (x - x_j) / (x_i - x_j), over K.
    Poly1<K> basis(std::vector<K>{K(1)});
    K denom(1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      basis = basis * Poly1<K>(std::vector<K>{K{} - points[j].first, K(1)});
      denom = denom * (points[i].first - points[j].first);
    }
    K scale = K(1) / denom;
    std::vector<V> term(basis.coeffs().size());
    for (size_t k = 0; k < basis.coeffs().size(); ++k)
      term[k] = points[i].second * (basis.coeffs()[k] * scale);
    acc += Poly1<V>(std::move(term));
  }
  return acc;
}

using UniPoly = Poly1<Rat>;

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace pqk

#endif
