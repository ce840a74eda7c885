#ifndef PQK_RATFUNC_HPP
#define PQK_RATFUNC_HPP

#include <string>

#include "pqk/unipoly.hpp"

namespace pqk {

/// Element of Q(x): quotient of two UniPoly, kept reduced with monic
/// denominator. Field scalar type for the symbolic one-parameter solves.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly(std::vector<Rat>{Rat(1)})) {}
  RatFunc(int n) : RatFunc(UniPoly(std::vector<Rat>{Rat(n)})) {}
  explicit RatFunc(const Rat& c) : RatFunc(UniPoly(std::vector<Rat>{c})) {}
  explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly(std::vector<Rat>{Rat(1)})) {}
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc x() { return RatFunc(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rat constant() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Exact evaluation; throws on a denominator root.
  Rat eval(const Rat& at) const;
  double eval_double(double at) const;

  std::string str(const std::string& var = "x") const;

 private:
  UniPoly num_, den_;
};

}  // namespace pqk

#endif
