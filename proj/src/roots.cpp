#include "pqk/roots.hpp"

#include <algorithm>
#include <cmath>

namespace pqk {

namespace {

using C = std::complex<double>;

C horner(const std::vector<double>& c, C z) {
  C acc(0.0, 0.0);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[i];
  return acc;
}

}  // namespace

std::vector<Root> real_roots(const UniPoly& p, int digits) {
  std::vector<Root> out;
  int deg = p.degree();
  if (deg < 1) return out;

  std::vector<double> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = p.coeff(i).to_double();
  // Normalize to a monic-ish scale for stability.
  double lead = c[deg];
  for (auto& v : c) v /= lead;

  std::vector<double> dc(deg);
  for (int i = 1; i <= deg; ++i) dc[i - 1] = c[i] * i;

  // Cauchy bound for the root radius.
  double radius = 0.0;
  for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1.0 + radius;

  // Deterministic start: points on a circle, offset so no axis alignment.
  std::vector<C> z(deg);
  for (int i = 0; i < deg; ++i) {
    double ang = 2.0 * M_PI * i / deg + 0.4;
    z[i] = std::polar(0.9 * radius, ang);
  }

  double tol = std::pow(10.0, -std::min(digits + 2, 15));
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      C pv = horner(c, z[i]);
      C dv = horner(dc, z[i]);
      C newton = dv == C(0.0, 0.0) ? C(0.0, 0.0) : pv / dv;
      C sum(0.0, 0.0);
      for (int j = 0; j < deg; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      C denom = 1.0 - newton * sum;
      C step = denom == C(0.0, 0.0) ? newton : newton / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < tol) break;
  }
  // Newton polish.
  for (int i = 0; i < deg; ++i) {
    for (int k = 0; k < 8; ++k) {
      C pv = horner(c, z[i]);
      C dv = horner(dc, z[i]);
      if (std::abs(dv) == 0.0) break;
      C step = pv / dv;
      z[i] -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z[i]))) break;
    }
  }

  // Snap near-real roots, then symmetrize conjugate pairs.
  double real_tol = 1e-9;
  for (auto& zi : z)
    if (std::abs(zi.imag()) < real_tol * std::max(1.0, std::abs(zi))) zi = C(zi.real(), 0.0);
  std::vector<bool> used(deg, false);
  for (int i = 0; i < deg; ++i) {
    if (used[i] || z[i].imag() == 0.0) continue;
    int best = -1;
    double bd = 1e-6 * std::max(1.0, std::abs(z[i]));
    for (int j = 0; j < deg; ++j) {
      if (j == i || used[j] || z[j].imag() == 0.0) continue;
      double d = std::abs(z[j] - std::conj(z[i]));
      if (d < bd) { bd = d; best = j; }
    }
    if (best >= 0) {
      C avg((z[i].real() + z[best].real()) / 2.0,
            (std::abs(z[i].imag()) + std::abs(z[best].imag())) / 2.0);
      z[i] = C(avg.real(), z[i].imag() > 0 ? avg.imag() : -avg.imag());
      z[best] = std::conj(z[i]);
      used[i] = used[best] = true;
    }
  }

  out.reserve(deg);
  for (auto& zi : z) out.push_back({zi, zi.imag() == 0.0});
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return out;
}

double root_residual(const UniPoly& p, const std::vector<Root>& roots) {
  std::vector<double> c(p.degree() + 1);
  double norm1 = 0.0;
  for (int i = 0; i <= p.degree(); ++i) {
    c[i] = p.coeff(i).to_double();
    norm1 += std::abs(c[i]);
  }
  double worst = 0.0;
  for (auto& r : roots) worst = std::max(worst, std::abs(horner(c, r.z)));
  return worst / norm1;
}

}  // namespace pqk
