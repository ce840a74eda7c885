#include "pqk/bundle.hpp"

#include <stdexcept>

namespace pqk {

namespace {

// k * e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, starting from e_0 = 1.
std::vector<GradedPoly> elementary_from_power_sums(const RingPtr& ring,
                                                   const std::vector<GradedPoly>& p,
                                                   int top) {
  std::vector<GradedPoly> e(top + 1, GradedPoly(ring));
  e[0] = GradedPoly(ring, Rat(1));
  for (int k = 1; k <= top; ++k) {
    GradedPoly acc(ring);
    for (int i = 1; i <= k; ++i) {
      GradedPoly term = e[k - i] * p[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[k] = acc * Rat(1, k);
  }
  return e;
}

// p_k = (-1)^{k-1} (k e_k - sum_{i=1..k-1} (-1)^{i-1} e_{k-i} p_i).
std::vector<GradedPoly> power_sums_from_elementary(const RingPtr& ring,
                                                   const std::vector<GradedPoly>& e,
                                                   int top) {
  std::vector<GradedPoly> p(top + 1, GradedPoly(ring));
  for (int k = 1; k <= top; ++k) {
    GradedPoly acc = e[k] * Rat(k);
    for (int i = 1; i < k; ++i) {
      GradedPoly term = e[k - i] * p[i];
      acc -= (i % 2 == 1) ? term : -term;
    }
    p[k] = (k % 2 == 1) ? acc : -acc;
  }
  return p;
}

}  // namespace

BundleChar::BundleChar(long long r, GradedPoly c) : rank(r), ch(std::move(c)) {
  if (!ch.constant_term().is_zero())
    throw std::invalid_argument("BundleChar: ch must have zero constant term");
}

GradedPoly BundleChar::full_ch() const {
  return ch + GradedPoly(ch.ring(), Rat(rank));
}

BundleChar BundleChar::from_full_ch(const GradedPoly& full) {
  Rat r = full.constant_term();
  if (!r.is_integer()) throw std::domain_error("BundleChar: non-integral rank");
  GradedPoly reduced = full - GradedPoly(full.ring(), r);
  return BundleChar(r.num_ll(), std::move(reduced));
}

BundleChar BundleChar::trivial(const RingPtr& ring, long long rank) {
  return BundleChar(rank, GradedPoly(ring));
}

bool BundleChar::self_dual() const {
  for (int w = 1; w <= ch.ring()->truncation; w += 2)
    if (!ch.weight_component(w).is_zero()) return false;
  return true;
}

BundleChar operator+(const BundleChar& a, const BundleChar& b) {
  return BundleChar(a.rank + b.rank, a.ch + b.ch);
}

BundleChar operator-(const BundleChar& a, const BundleChar& b) {
  return BundleChar(a.rank - b.rank, a.ch - b.ch);
}

BundleChar tensor(const BundleChar& a, const BundleChar& b) {
  return BundleChar::from_full_ch(a.full_ch() * b.full_ch());
}

BundleChar adams(int k, const BundleChar& v) {
  if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
  const RingPtr& ring = v.ch.ring();
  GradedPoly out(ring);
  for (int w = 1; w <= ring->truncation; ++w) {
    GradedPoly comp = v.ch.weight_component(w);
    if (comp.is_zero()) continue;
    out += comp * Rat(k).pow(w);
  }
  return BundleChar(v.rank, out);
}

BundleChar exterior(int k, const BundleChar& v) {
  if (k < 0) throw std::invalid_argument("exterior: k must be >= 0");
  const RingPtr& ring = v.ch.ring();
  std::vector<GradedPoly> lam(k + 1, GradedPoly(ring));
  lam[0] = GradedPoly(ring, Rat(1));
  std::vector<GradedPoly> psi(k + 1, GradedPoly(ring));
  for (int i = 1; i <= k; ++i) psi[i] = adams(i, v).full_ch();
  for (int m = 1; m <= k; ++m) {
    GradedPoly acc(ring);
    for (int i = 1; i <= m; ++i) {
      GradedPoly term = lam[m - i] * psi[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    lam[m] = acc * Rat(1, m);
  }
  return BundleChar::from_full_ch(lam[k]);
}

BundleChar symmetric(int l, const BundleChar& v) {
  if (l < 0) throw std::invalid_argument("symmetric: l must be >= 0");
  const RingPtr& ring = v.ch.ring();
  std::vector<GradedPoly> sym(l + 1, GradedPoly(ring));
  sym[0] = GradedPoly(ring, Rat(1));
  std::vector<GradedPoly> psi(l + 1, GradedPoly(ring));
  for (int i = 1; i <= l; ++i) psi[i] = adams(i, v).full_ch();
  for (int m = 1; m <= l; ++m) {
    GradedPoly acc(ring);
    for (int i = 1; i <= m; ++i) acc += sym[m - i] * psi[i];
    sym[m] = acc * Rat(1, m);
  }
  return BundleChar::from_full_ch(sym[l]);
}

BundleChar exterior0(int k, const BundleChar& v) {
  if (k < 0) throw std::invalid_argument("exterior0: k must be >= 0");
  BundleChar lk = exterior(k, v);
  if (k < 2) return lk;
  return lk - exterior(k - 2, v);
}

GradedPoly chern_classes(const BundleChar& v) {
  const RingPtr& ring = v.ch.ring();
  const int top = ring->truncation;
  std::vector<GradedPoly> p(top + 1, GradedPoly(ring));
  for (int j = 1; j <= top; ++j) p[j] = v.ch.weight_component(j) * Rat::factorial(j);
  std::vector<GradedPoly> e = elementary_from_power_sums(ring, p, top);
  GradedPoly total(ring);
  for (int k = 0; k <= top; ++k) total += e[k];
  return total;
}

BundleChar ch_of(long long rank, const GradedPoly& total_chern) {
  if (!(total_chern.constant_term() == Rat(1)))
    throw std::invalid_argument("ch_of: total Chern class must have constant term 1");
  const RingPtr& ring = total_chern.ring();
  const int top = ring->truncation;
  std::vector<GradedPoly> e(top + 1, GradedPoly(ring));
  e[0] = GradedPoly(ring, Rat(1));
  for (int k = 1; k <= top; ++k) e[k] = total_chern.weight_component(k);
  std::vector<GradedPoly> p = power_sums_from_elementary(ring, e, top);
  GradedPoly ch(ring);
  for (int j = 1; j <= top; ++j) ch += p[j] * Rat::factorial(j).inv();
  return BundleChar(rank, ch);
}

GradedPoly pontryagin(const BundleChar& complexified) {
  if (!complexified.self_dual())
    throw std::domain_error("pontryagin: bundle is not self-dual");
  GradedPoly total = chern_classes(complexified);
  const RingPtr& ring = total.ring();
  GradedPoly out(ring);
  for (int i = 0; 2 * i <= ring->truncation; ++i) {
    GradedPoly comp = total.weight_component(2 * i);
    if (comp.is_zero()) continue;
    out += (i % 2 == 0) ? comp : -comp;
  }
  // Odd components must have vanished in the Chern class as well.
  for (int w = 1; w <= ring->truncation; w += 2)
    if (!total.weight_component(w).is_zero())
      throw std::domain_error("pontryagin: odd Chern class survives");
  return out;
}

GenusSeries ahat_series(int terms) {
  // sinh(x/2)/(x/2) = sum_k t^k / (4^k (2k+1)!) with t = x^2; invert.
  std::vector<Rat> a(terms + 1);
  for (int k = 0; k <= terms; ++k) a[k] = (Rat(4).pow(k) * Rat::factorial(2 * k + 1)).inv();
  std::vector<Rat> b(terms + 1);
  b[0] = Rat(1);
  for (int k = 1; k <= terms; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc;
  }
  return GenusSeries{std::move(b)};
}

GradedPoly genus_class(const GenusSeries& g, const GradedPoly& pont) {
  if (!(pont.constant_term() == Rat(1)))
    throw std::invalid_argument("genus_class: constant term must be 1");
  if (g.coeff.empty() || !(g.coeff[0] == Rat(1)))
    throw std::invalid_argument("genus_class: series constant must be 1");
  const RingPtr& ring = pont.ring();
  const int top = ring->truncation / 2;  // p_i has weight 2i

  // log of the characteristic series, coefficients of t^k.
  std::vector<Rat> q = g.coeff;
  q.resize(top + 1, Rat(0));
  std::vector<Rat> logq(top + 1, Rat(0));
  {
    std::vector<Rat> qm1 = q;
    qm1[0] = Rat(0);
    std::vector<Rat> pw(top + 1, Rat(0));
    pw[0] = Rat(1);
    for (int m = 1; m <= top; ++m) {
      // pw <- pw * qm1 (truncated convolution)
      std::vector<Rat> nx(top + 1, Rat(0));
      for (int i = 0; i <= top; ++i) {
        if (pw[i].is_zero()) continue;
        for (int j = 0; i + j <= top; ++j) nx[i + j] += pw[i] * qm1[j];
      }
      pw = std::move(nx);
      Rat sign = (m % 2 == 1) ? Rat(1) : Rat(-1);
      for (int k = 0; k <= top; ++k) logq[k] += pw[k] * sign * Rat(1, m);
    }
  }

  // Power sums of the formal Pontryagin roots from p_i via Newton.
  std::vector<GradedPoly> e(top + 1, GradedPoly(ring));
  e[0] = GradedPoly(ring, Rat(1));
  for (int i = 1; i <= top; ++i) e[i] = pont.weight_component(2 * i);
  std::vector<GradedPoly> s = power_sums_from_elementary(ring, e, top);

  GradedPoly exponent(ring);
  for (int k = 1; k <= top; ++k) {
    if (logq[k].is_zero() || s[k].is_zero()) continue;
    exponent += s[k] * logq[k];
  }
  return exponent.exp_series();
}

}  // namespace pqk
