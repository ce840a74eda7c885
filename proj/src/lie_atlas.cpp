#include "pqk/lie_atlas.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pqk {

long long SimpleType::dim() const {
  long long n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B: return n * (2 * n + 1);
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

std::string SimpleType::str() const {
  switch (family) {
    case Family::A: return rank == 1 ? "Sp(1)" : "SU(" + std::to_string(rank + 1) + ")";
    case Family::B: return "SO(" + std::to_string(2 * rank + 1) + ")";
    case Family::C: return "Sp(" + std::to_string(rank) + ")";
    case Family::D: return "SO(" + std::to_string(2 * rank) + ")";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::pair<std::vector<SimpleType>, int> canonicalize(const SimpleType& t) {
  switch (t.family) {
    case Family::A:
      if (t.rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      return {{t}, 0};
    case Family::B:
      if (t.rank == 1) return {{{Family::A, 1}}, 0};
      if (t.rank == 2) return {{{Family::C, 2}}, 0};
      return {{t}, 0};
    case Family::C:
      if (t.rank == 1) return {{{Family::A, 1}}, 0};
      return {{t}, 0};
    case Family::D:
      if (t.rank == 1) return {{}, 1};  // SO(2) is a circle
      if (t.rank == 2) return {{{Family::A, 1}, {Family::A, 1}}, 0};
      if (t.rank == 3) return {{{Family::A, 3}}, 0};
      return {{t}, 0};
    default:
      return {{t}, 0};
  }
}

GroupTerm::GroupTerm(std::vector<SimpleType> fs, int torus) : torus_rank(torus) {
  for (const auto& t : fs) {
    auto [canon, extra_torus] = canonicalize(t);
    torus_rank += extra_torus;
    for (const auto& c : canon) factors.push_back(c);
  }
  std::sort(factors.begin(), factors.end());
}

int GroupTerm::rank() const {
  int r = torus_rank;
  for (const auto& f : factors) r += f.rank;
  return r;
}

long long GroupTerm::dim() const {
  long long d = torus_rank;
  for (const auto& f : factors) d += f.dim();
  return d;
}

std::string GroupTerm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "x";
    os << f.str();
    first = false;
  }
  for (int i = 0; i < torus_rank; ++i) {
    if (!first) os << "x";
    os << "S1";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

GroupTerm GroupTerm::operator*(const GroupTerm& o) const {
  std::vector<SimpleType> fs = factors;
  fs.insert(fs.end(), o.factors.begin(), o.factors.end());
  return GroupTerm(std::move(fs), torus_rank + o.torus_rank);
}

GroupTerm SO(int n) {
  if (n < 0) throw std::invalid_argument("SO: bad n");
  if (n <= 1) return GroupTerm({}, 0);
  if (n == 2) return Torus(1);
  if (n % 2 == 1) return GroupTerm({{Family::B, (n - 1) / 2}}, 0);
  return GroupTerm({{Family::D, n / 2}}, 0);
}

GroupTerm SU(int n) {
  if (n < 1) throw std::invalid_argument("SU: bad n");
  if (n == 1) return GroupTerm({}, 0);
  return GroupTerm({{Family::A, n - 1}}, 0);
}

GroupTerm Sp(int n) {
  if (n < 1) throw std::invalid_argument("Sp: bad n");
  return GroupTerm({{Family::C, n}}, 0);
}

GroupTerm U(int n) { return SU(n) * Torus(1); }
GroupTerm G2() { return GroupTerm({{Family::G2, 2}}, 0); }
GroupTerm F4() { return GroupTerm({{Family::F4, 4}}, 0); }
GroupTerm E6() { return GroupTerm({{Family::E6, 6}}, 0); }
GroupTerm E7() { return GroupTerm({{Family::E7, 7}}, 0); }
GroupTerm E8() { return GroupTerm({{Family::E8, 8}}, 0); }
GroupTerm Torus(int rank) { return GroupTerm({}, rank); }

/// Canonical simple types of rank <= max_rank, in a fixed order.
static std::vector<SimpleType> canonical_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  if (max_rank >= 2) out.push_back({Family::G2, 2});
  if (max_rank >= 4) out.push_back({Family::F4, 4});
  if (max_rank >= 6) out.push_back({Family::E6, 6});
  if (max_rank >= 7) out.push_back({Family::E7, 7});
  if (max_rank >= 8) out.push_back({Family::E8, 8});
  return out;
}

static bool admits(const EnumOptions& opt, const GroupTerm& g) {
  if (g.rank() > opt.max_rank) return false;
  if (opt.exact_rank && g.rank() != *opt.exact_rank) return false;
  long long d = g.dim();
  if (d < opt.dim_lo || d > opt.dim_hi) return false;
  if (opt.dim_mod) {
    auto [r, m] = *opt.dim_mod;
    if ((d % m + m) % m != r) return false;
  }
  return true;
}

std::vector<GroupTerm> enumerate_groups(const EnumOptions& opt) {
  std::vector<SimpleType> types = canonical_types(opt.max_rank);
  std::vector<GroupTerm> out;
  std::vector<SimpleType> cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int rank_left) {
    int torus_max = opt.allow_torus ? rank_left : 0;
    for (int t = 0; t <= torus_max; ++t) {
      GroupTerm g(cur, t);
      if (admits(opt, g)) out.push_back(std::move(g));
    }
    for (size_t j = i; j < types.size(); ++j) {
      if (types[j].rank > rank_left) continue;
      cur.push_back(types[j]);
      rec(j, rank_left - types[j].rank);  // same type may repeat
      cur.pop_back();
    }
  };
  rec(0, opt.max_rank);
  std::sort(out.begin(), out.end(), [](const GroupTerm& a, const GroupTerm& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupTerm> enumerate_groups_oracle(const EnumOptions& opt) {
  // Independent generation: count vectors over the type list, then torus.
  std::vector<SimpleType> types = canonical_types(opt.max_rank);
  std::set<GroupTerm> out;
  std::vector<int> counts(types.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int rank_used) {
    if (i == types.size()) {
      std::vector<SimpleType> fs;
      for (size_t j = 0; j < types.size(); ++j)
        for (int c = 0; c < counts[j]; ++c) fs.push_back(types[j]);
      int torus_cap = opt.allow_torus ? opt.max_rank - rank_used : 0;
      for (int t = 0; t <= torus_cap; ++t) {
        GroupTerm g(fs, t);
        if (admits(opt, g)) out.insert(std::move(g));
      }
      return;
    }
    for (int c = 0; c * types[i].rank <= opt.max_rank - rank_used; ++c) {
      counts[i] = c;
      rec(i + 1, rank_used + c * types[i].rank);
    }
    counts[i] = 0;
  };
  rec(0, 0);
  std::vector<GroupTerm> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const GroupTerm& a, const GroupTerm& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
  return v;
}

std::map<std::string, int> dims_mod(int m) {
  if (m < 2) throw std::invalid_argument("dims_mod: m must be >= 2");
  std::map<std::string, int> out;
  auto put = [&](const std::string& key, long long dim) {
    out[key] = static_cast<int>(((dim % m) + m) % m);
  };
  for (int n = 1; n <= 5; ++n) {
    put("A" + std::to_string(n), static_cast<long long>(n) * (n + 2));
    put("B" + std::to_string(n), static_cast<long long>(n) * (2 * n + 1));
    put("C" + std::to_string(n), static_cast<long long>(n) * (2 * n + 1));
    put("D" + std::to_string(n), static_cast<long long>(n) * (2 * n - 1));
  }
  put("G2", 14);
  put("F4", 52);
  return out;
}

MaxDimResult max_dim_per_rank(int r) {
  if (r < 1) throw std::invalid_argument("max_dim_per_rank: r must be >= 1");
  std::vector<SimpleType> types = canonical_types(r);
  std::vector<long long> best(r + 1, 0);
  for (int rho = 1; rho <= r; ++rho)
    for (const auto& t : types)
      if (t.rank <= rho) best[rho] = std::max(best[rho], t.dim() + best[rho - t.rank]);

  MaxDimResult res;
  res.dim = best[r];
  // Collect all extremal multisets by guided DFS.
  std::set<GroupTerm> extremal;
  std::vector<SimpleType> cur;
  std::function<void(size_t, int, long long)> rec = [&](size_t i, int rank_left,
                                                        long long dim_acc) {
    if (dim_acc == res.dim) {
      extremal.insert(GroupTerm(cur, 0));
      return;
    }
    for (size_t j = i; j < types.size(); ++j) {
      if (types[j].rank > rank_left) continue;
      if (dim_acc + types[j].dim() + best[rank_left - types[j].rank] < res.dim) continue;
      cur.push_back(types[j]);
      rec(j, rank_left - types[j].rank, dim_acc + types[j].dim());
      cur.pop_back();
    }
  };
  rec(0, r, 0);
  res.extremal.assign(extremal.begin(), extremal.end());
  std::sort(res.extremal.begin(), res.extremal.end());
  return res;
}

long long max_dim_with_exceptional(int r) {
  std::vector<SimpleType> exc = {{Family::G2, 2}, {Family::F4, 4}, {Family::E6, 6},
                                 {Family::E7, 7}, {Family::E8, 8}};
  long long best = 0;
  for (const auto& e : exc) {
    if (e.rank > r) continue;
    long long rest = e.rank == r ? 0 : max_dim_per_rank(r - e.rank).dim;
    best = std::max(best, e.dim() + rest);
  }
  return best;
}

long long recognition_threshold(int n) {
  if (n < 3) throw std::domain_error("recognition_threshold: n must be >= 3");
  if (n == 3) return 28;
  if (n <= 20) return max_dim_per_rank((n + 1) / 2 + 2).dim;
  if (n == 21) return max_dim_with_exceptional((n + 1) / 2 + 2);  // 303
  if (n == 27 || n == 28) return 496;                             // dim E8 x E8
  return (static_cast<long long>(n) * n + 5 * n + 12) / 2;
}

Recognition identify_wolf(int n, long long isom_dim) {
  if (n < 3) throw std::domain_error("identify_wolf: n must be >= 3");
  long long nn = n;
  std::optional<WolfSpace> space;
  if (isom_dim == (nn * nn + 7 * nn + 12) / 2 && (nn * nn + 7 * nn + 12) % 2 == 0)
    space = WolfSpace::GrReal;
  if (isom_dim == nn * nn + 4 * nn + 3) space = WolfSpace::GrComplex;
  if (isom_dim == 2 * nn * nn + 5 * nn + 3) space = WolfSpace::HPn;
  if (!space) return {Recognition::Kind::unknown, std::nullopt};
  if (isom_dim > recognition_threshold(n)) return {Recognition::Kind::identified, space};
  return {Recognition::Kind::matches_formula_below_threshold, space};
}

WolfDims wolf_isom_dims(int n) {
  if (n < 1) throw std::invalid_argument("wolf_isom_dims: n must be >= 1");
  WolfDims w{};
  long long nn = n;
  w.hp = (nn + 1) * (2 * nn + 3);
  w.gr_complex = nn * nn + 4 * nn + 3;
  w.gr_real = (nn + 3) * (nn + 4) / 2;
  w.hp_congruent = ((w.hp - 1) % (nn + 2)) == 0;
  w.gr_real_congruent = ((w.gr_real - 1) % (nn + 2)) == 0;
  return w;
}

std::vector<GroupTerm> survivors_above_threshold(int n) {
  if (n < 22 || n == 27 || n == 28)
    throw std::invalid_argument("survivors_above_threshold: n >= 22, n not 27/28");
  int cap = (n + 1) / 2 + 2;
  long long thr = (static_cast<long long>(n) * n + 5 * n + 12) / 2;
  EnumOptions opt;
  opt.max_rank = cap;
  opt.dim_lo = thr + 1;
  opt.dim_hi = max_dim_per_rank(cap).dim + cap;
  opt.allow_torus = true;
  return enumerate_groups(opt);
}

}  // namespace pqk
