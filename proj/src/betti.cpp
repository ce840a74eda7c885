#include "pqk/betti.hpp"

#include <stdexcept>

namespace pqk {

BettiVector::BettiVector(int n_, std::vector<long long> half) : n(n_), b(std::move(half)) {
  if (static_cast<int>(b.size()) != n + 1)
    throw std::invalid_argument("BettiVector: need b0..b_{2n}");
  if (b[0] != 1) throw std::invalid_argument("BettiVector: b0 must be 1");
  for (long long v : b)
    if (v < 0) throw std::invalid_argument("BettiVector: negative entry");
}

long long BettiVector::at(int k) const {
  if (k < 0 || k > 2 * n) return 0;
  return k <= n ? b[k] : b[2 * n - k];
}

bool BettiVector::hard_lefschetz_ok() const {
  for (int k = 2; k <= n; ++k)
    if (at(k - 2) > at(k)) return false;
  return true;
}

long long BettiVector::euler() const {
  long long chi = 0;
  for (int k = 0; k <= 2 * n; ++k) chi += at(k);
  return chi;
}

std::vector<Rat> betti_relation_coeffs(int n) {
  std::vector<Rat> out;
  for (int p = 0; p <= n - 1; ++p) out.push_back(Rat(6 * p * (n - 1 - p) - (n - 1) * (n - 3)));
  out.push_back(Rat(n * (n - 1), 2));
  return out;
}

Rat betti_relation(const BettiVector& bv) {
  std::vector<Rat> c = betti_relation_coeffs(bv.n);
  Rat lhs(0);
  for (int p = 0; p <= bv.n - 1; ++p) lhs += c[p] * Rat(bv.at(p));
  return lhs - c[bv.n] * Rat(bv.at(bv.n));
}

PairClass classify_pair(long long b4, long long b8) {
  long long t = 2 * b4 - b8 - 1;
  if (t == 0) return PairClass::forced_b6_eq_b10;
  if (t > 0 && t % 5 == 0) return PairClass::positive_multiple;
  return PairClass::invalid;
}

std::vector<std::pair<long long, long long>> lemma_pairs(long long b4_max) {
  if (b4_max > 5) throw std::invalid_argument("lemma_pairs: only valid for b4 <= 5");
  std::vector<std::pair<long long, long long>> out;
  for (long long b4 = 1; b4 <= b4_max; ++b4)
    for (long long b8 = b4; b8 <= 2 * b4 - 1; ++b8)
      if (classify_pair(b4, b8) == PairClass::forced_b6_eq_b10) out.push_back({b4, b8});
  return out;
}

MinEulerResult min_euler(long long b4_min, long long window) {
  if (b4_min < 1) throw std::invalid_argument("min_euler: b4_min must be >= 1");
  std::optional<MinEulerResult> best;
  // chi = 2 + 2 b4 + 2 b6 + 2 b8 + b10; the relation at n = 5, b2 = 0 is
  // -4 + 8 b4 + 5 b6 - 4 b8 = 5 b10. Every term of chi is nondecreasing in
  // each variable, so bounded windows around the minimum suffice.
  for (long long b4 = b4_min; b4 <= b4_min + window; ++b4) {
    for (long long b8 = b4; b8 <= b4 + window; ++b8) {
      for (long long b6 = 0; b6 <= window; ++b6) {
        long long num = -4 + 8 * b4 + 5 * b6 - 4 * b8;
        if (num < 0 || num % 5 != 0) continue;
        long long b10 = num / 5;
        if (b10 < b6) continue;  // Hard-Lefschetz
        BettiVector bv(5, {1, 0, b4, b6, b8, b10});
        long long chi = bv.euler();
        if (!best || chi < best->chi) best = MinEulerResult{chi, bv};
      }
    }
  }
  if (!best) throw std::domain_error("min_euler: empty window");
  return *best;
}

}  // namespace pqk
