#include "pqk/graded_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pqk {

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

int Ring::weight_of(const std::vector<int>& exps) const {
  int w = 0;
  for (int i = 0; i < arity(); ++i) w += exps[i] * weights[i];
  return w;
}

std::string Ring::monomial_name(const std::vector<int>& exps) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < arity(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << "*";
    os << vars[i];
    if (exps[i] > 1) os << "^" << exps[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::vector<int> Ring::parse_monomial(const std::string& name) const {
  std::vector<int> exps(arity(), 0);
  if (name == "1" || name.empty()) return exps;
  std::string token;
  std::istringstream is(name);
  while (std::getline(is, token, '*')) {
    auto caret = token.find('^');
    std::string var = token.substr(0, caret);
    int e = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
    int idx = index_of(var);
    if (idx < 0) throw std::invalid_argument("Ring: unknown variable " + var);
    exps[idx] += e;
  }
  return exps;
}

std::vector<std::vector<int>> Ring::monomials_of_weight(int w) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity(), 0);
  // Depth-first over variables, lexicographic order of exponent vectors.
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == arity()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int maxe = rem / weights[i];
    for (int e = 0; e <= maxe; ++e) {
      cur[i] = e;
      rec(i + 1, rem - e * weights[i]);
    }
    cur[i] = 0;
  };
  rec(0, w);
  std::sort(out.begin(), out.end());
  return out;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights, int truncation) {
  if (vars.size() != weights.size()) throw std::invalid_argument("make_ring: size mismatch");
  for (int w : weights)
    if (w <= 0) throw std::invalid_argument("make_ring: weights must be positive");
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->weights = std::move(weights);
  r->truncation = truncation;
  return r;
}

RingPtr standard_ring(int n) {
  std::vector<std::string> vars = {"u"};
  std::vector<int> weights = {2};
  for (int i = 1; i <= n; ++i) {
    vars.push_back("c" + std::to_string(2 * i));
    weights.push_back(2 * i);
  }
  return make_ring(std::move(vars), std::move(weights), 2 * n);
}

GradedPoly::GradedPoly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_[std::vector<int>(ring_->arity(), 0)] = c;
}

GradedPoly GradedPoly::var(const RingPtr& ring, const std::string& name) {
  int idx = ring->index_of(name);
  if (idx < 0) throw std::invalid_argument("GradedPoly::var: unknown variable " + name);
  std::vector<int> exps(ring->arity(), 0);
  exps[idx] = 1;
  return monomial(ring, exps, Rat(1));
}

GradedPoly GradedPoly::monomial(const RingPtr& ring, const std::vector<int>& exps,
                                const Rat& c) {
  GradedPoly p(ring);
  p.insert_term(exps, c);
  return p;
}

void GradedPoly::insert_term(const std::vector<int>& exps, const Rat& c) {
  if (c.is_zero()) return;
  if (ring_->weight_of(exps) > ring_->truncation) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPoly::check_same_ring(const GradedPoly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
    throw std::invalid_argument("GradedPoly: ring mismatch");
}

Rat GradedPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat GradedPoly::coeff(const std::string& monomial_name) const {
  return coeff(ring_->parse_monomial(monomial_name));
}

Rat GradedPoly::constant_term() const {
  return coeff(std::vector<int>(ring_->arity(), 0));
}

GradedPoly GradedPoly::weight_component(int w) const {
  GradedPoly out(ring_);
  for (const auto& [e, c] : terms_)
    if (ring_->weight_of(e) == w) out.terms_.emplace(e, c);
  return out;
}

int GradedPoly::max_weight_present() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, ring_->weight_of(e));
  return m;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (!ring_) ring_ = o.ring_;
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (!ring_) ring_ = o.ring_;
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.check_same_ring(b);
  GradedPoly out(a.ring_);
  const int trunc = a.ring_->truncation;
  std::vector<int> e(a.ring_->arity());
  for (const auto& [ea, ca] : a.terms_) {
    int wa = a.ring_->weight_of(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (wa + a.ring_->weight_of(eb) > trunc) continue;
      for (int i = 0; i < a.ring_->arity(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

GradedPoly GradedPoly::operator*(const Rat& s) const {
  GradedPoly out(ring_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

GradedPoly GradedPoly::pow(int e) const {
  GradedPoly acc(ring_, Rat(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

GradedPoly GradedPoly::exp_series() const {
  if (!constant_term().is_zero())
    throw std::domain_error("exp_series: nonzero constant term");
  GradedPoly acc(ring_, Rat(1));
  GradedPoly power(ring_, Rat(1));
  Rat kfact(1);
  // a^k vanishes once k exceeds truncation / (minimal weight), so loop to
  // the truncation bound.
  for (int k = 1; k <= ring_->truncation; ++k) {
    power = power * *this;
    if (power.is_zero()) break;
    kfact *= Rat(k);
    acc += power * kfact.inv();
  }
  return acc;
}

Rat GradedPoly::evaluate(const std::map<std::string, Rat>& values) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(ring_->vars[i]);
      if (it == values.end())
        throw std::invalid_argument("evaluate: missing value for " + ring_->vars[i]);
      t *= it->second.pow(e[i]);
    }
    total += t;
  }
  return total;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    std::string m = ring_->monomial_name(e);
    if (m != "1") os << "*" << m;
    first = false;
  }
  return os.str();
}

}  // namespace pqk
