#include "pqk/rat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace pqk {

mpq_class Rat::from_ll(long long n) {
  mpz_class z;
  if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max()) {
    z = static_cast<long>(n);
  } else {
    z.set_str(std::to_string(n), 10);
  }
  return mpq_class(z);
}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = from_ll(num) / from_ll(den);
  v_.canonicalize();
}

Rat::Rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    v_ = mpq_class(s);
  } else {
    v_ = mpq_class(mpz_class(s.substr(0, slash))) / mpq_class(mpz_class(s.substr(slash + 1)));
  }
  v_.canonicalize();
  if (v_.get_den() < 0) throw std::domain_error("Rat: bad denominator");
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::binomial(long n, long k) {
  if (k < 0 || (n >= 0 && k > n)) return Rat(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(mpq_class(z));
}

Rat Rat::factorial(long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(z));
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  if (e < 0) return inv().pow(-e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(num) / mpq_class(den));
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

long long Rat::num_ll() const {
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rat: numerator out of range");
  return v_.get_num().get_si();
}

long long Rat::den_ll() const {
  if (!v_.get_den().fits_slong_p()) throw std::overflow_error("Rat: denominator out of range");
  return v_.get_den().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

// Exact decimal digits of |r| scaled by 10^places, rounded toward the
// requested direction, rendered with a decimal point.
std::string decimal_directed(const mpq_class& v, int places, bool toward_pos_inf) {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpq_class scaled = v * pow10;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
              scaled.get_den().get_mpz_t());
  if (toward_pos_inf && r != 0) q += 1;
  bool neg = q < 0;
  mpz_class aq = abs(q);
  std::string digits = aq.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits = std::string(places + 1 - digits.size(), '0') + digits;
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

}  // namespace

std::string Rat::decimal_floor(int places) const {
  return decimal_directed(v_, places, false);
}

std::string Rat::decimal_ceil(int places) const {
  return decimal_directed(v_, places, true);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace pqk
