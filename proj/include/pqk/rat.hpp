#ifndef PQK_RAT_HPP
#define PQK_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pqk {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin wrapper around GMP's mpq_class so the rest of the
/// code base has a stable value type with exact arithmetic.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<long int>(n)) {}
  Rat(long long n) : v_(from_ll(n)) {}
  Rat(long long num, long long den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const std::string& s);  // "num/den" or "num"

  static Rat binomial(long n, long k);
  static Rat factorial(long n);

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat pow(long e) const;
  Rat inv() const;

  /// Numerator / denominator as decimal strings.
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  long long num_ll() const;  // throws if out of range
  long long den_ll() const;

  double to_double() const { return v_.get_d(); }

  /// "num/den", or just "num" for integers.
  std::string str() const;

  /// Exact directional decimal rendering with `places` digits after the
  /// point; rounding toward -inf (floor) or +inf (ceil). Used when quoting
  /// one-sided bounds.
  std::string decimal_floor(int places) const;
  std::string decimal_ceil(int places) const;

  const mpq_class& raw() const { return v_; }

 private:
  static mpq_class from_ll(long long n);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace pqk

#endif
