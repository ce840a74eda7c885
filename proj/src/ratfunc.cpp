#include "pqk/ratfunc.hpp"

#include <sstream>

namespace pqk {

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(std::vector<Rat>{Rat(1)});
    return;
  }
  UniPoly g = UniPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rat lead = den_.lead();
  if (!(lead == Rat(1))) {
    Rat inv = lead.inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rat RatFunc::constant() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not constant");
  return num_.coeff(0) / den_.coeff(0);
}

Rat RatFunc::eval(const Rat& at) const {
  Rat d = den_.eval_k(at);
  if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
  return num_.eval_k(at) / d;
}

double RatFunc::eval_double(double at) const {
  double n = 0, d = 0;
  for (int i = num_.degree(); i >= 0; --i) n = n * at + num_.coeff(i).to_double();
  for (int i = den_.degree(); i >= 0; --i) d = d * at + den_.coeff(i).to_double();
  return n / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0 && den_.coeff(0) == Rat(1)) return to_string(num_, var);
  return "(" + to_string(num_, var) + ") / (" + to_string(den_, var) + ")";
}

}  // namespace pqk
