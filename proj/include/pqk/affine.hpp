#ifndef PQK_AFFINE_HPP
#define PQK_AFFINE_HPP

#include <map>
#include <sstream>
#include <string>

#include "pqk/rat.hpp"

namespace pqk {

/// Affine expression c0 + sum coeff[name] * name over named parameters.
/// K is the scalar field (Rat for exact work, double for the float layer).
template <class K>
struct AffineT {
  K constant{};
  std::map<std::string, K> coeff;

  AffineT() = default;
  explicit AffineT(K c) : constant(std::move(c)) {}
  static AffineT param(const std::string& name, K scale = K(1)) {
    AffineT a;
    a.coeff[name] = std::move(scale);
    a.prune();
    return a;
  }

  bool is_constant() const { return coeff.empty(); }
  bool is_zero() const { return coeff.empty() && constant == K{}; }
  K coefficient(const std::string& name) const {
    auto it = coeff.find(name);
    return it == coeff.end() ? K{} : it->second;
  }

  void prune() {
    for (auto it = coeff.begin(); it != coeff.end();)
      it = it->second == K{} ? coeff.erase(it) : std::next(it);
  }

  AffineT operator-() const {
    AffineT r;
    r.constant = K{} - constant;
    for (auto& [n, c] : coeff) r.coeff[n] = K{} - c;
    return r;
  }
  AffineT& operator+=(const AffineT& o) {
    constant += o.constant;
    for (auto& [n, c] : o.coeff) coeff[n] += c;
    prune();
    return *this;
  }
  AffineT& operator-=(const AffineT& o) {
    constant -= o.constant;
    for (auto& [n, c] : o.coeff) coeff[n] -= c;
    prune();
    return *this;
  }
  friend AffineT operator+(AffineT a, const AffineT& b) { return a += b; }
  friend AffineT operator-(AffineT a, const AffineT& b) { return a -= b; }
  AffineT operator*(const K& s) const {
    AffineT r;
    r.constant = constant * s;
    for (auto& [n, c] : coeff) r.coeff[n] = c * s;
    r.prune();
    return r;
  }
  friend bool operator==(const AffineT& a, const AffineT& b) {
    return a.constant == b.constant && a.coeff == b.coeff;
  }
  friend bool operator!=(const AffineT& a, const AffineT& b) { return !(a == b); }

  /// Replace a parameter by an affine expression.
  AffineT substituted(const std::string& name, const AffineT& value) const {
    AffineT r = *this;
    auto it = r.coeff.find(name);
    if (it == r.coeff.end()) return r;
    K scale = it->second;
    r.coeff.erase(it);
    r += value * scale;
    return r;
  }

  /// Evaluate with every parameter bound; throws on unbound names.
  K eval(const std::map<std::string, K>& values) const {
    K acc = constant;
    for (auto& [n, c] : coeff) {
      auto it = values.find(n);
      if (it == values.end()) throw std::invalid_argument("AffineT::eval: unbound " + n);
      acc += c * it->second;
    }
    return acc;
  }

  std::string str() const;
};

template <>
inline std::string AffineT<Rat>::str() const {
  std::ostringstream os;
  os << constant.str();
  for (auto& [n, c] : coeff) {
    os << (c.sign() < 0 ? " - " : " + ");
    Rat a = c.abs();
    if (a == Rat(1))
      os << n;
    else
      os << a.str() << "*" << n;
  }
  return os.str();
}

using ParamAffine = AffineT<Rat>;
using AffineD = AffineT<double>;

inline AffineD to_double(const ParamAffine& a) {
  AffineD d;
  d.constant = a.constant.to_double();
  for (auto& [n, c] : a.coeff) d.coeff[n] = c.to_double();
  return d;
}

}  // namespace pqk

#endif
