// Embedded subgroup tables and representation facts.
//
// Every record carries a tag naming its source table or the classification
// fact it transcribes, so the data can be audited row by row:
//   so-max / su-max / sp-max  - maximal connected subgroups of the
//                               classical groups,
//   maxrank                   - maximal-rank maximal subgroups,
//   maxdim                    - subgroups of maximal dimension,
//   rep-fact                  - irreducible-representation degree facts
//                               (field type R/C/H and complete low-degree
//                               lists per simple type).
// The representation degree lists state only standard classification data;
// queries beyond a record's horizon answer "unknown" and the search
// reports the gap instead of guessing.

#include "pqk/embeddings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pqk {

namespace tables {

struct RepEntry {
  long long deg;
  RepField f;
};

struct RepFactRec {
  Family fam;
  int rank;
  std::vector<RepEntry> degrees;  // complete list of nontrivial degrees <= cutoff
  long long cutoff;
  const char* source;
};

const std::vector<RepFactRec>& rep_facts() {
  using F = Family;
  constexpr RepField R = RepField::real, C = RepField::cplx, H = RepField::quat;
  static const std::vector<RepFactRec> recs = {
      {F::A, 2, {{3, C}, {6, C}, {8, R}, {10, C}}, 12, "rep-fact: SU(3) degrees <= 12"},
      {F::A, 3, {{4, C}, {6, R}, {10, C}, {15, R}}, 16, "rep-fact: SU(4) degrees <= 16"},
      {F::A, 4, {{5, C}, {10, C}, {15, C}, {24, R}}, 30, "rep-fact: SU(5) degrees <= 30"},
      {F::A, 5, {{6, C}, {15, C}, {20, H}, {21, C}, {35, R}}, 35,
       "rep-fact: SU(6) degrees <= 35 (20 = middle exterior power, quaternionic)"},
      {F::A, 6, {{7, C}, {21, C}, {28, C}, {35, C}, {48, R}}, 48,
       "rep-fact: SU(7) degrees <= 48"},
      {F::A, 7, {{8, C}, {28, C}, {36, C}, {56, C}, {63, R}}, 63,
       "rep-fact: SU(8) degrees <= 63"},
      {F::C, 2, {{4, H}, {5, R}, {10, R}, {14, R}, {16, H}, {20, H}}, 20,
       "rep-fact: Sp(2) degrees <= 20"},
      {F::C, 3, {{6, H}, {14, R}, {14, H}, {21, R}}, 50, "rep-fact: Sp(3) degrees <= 50"},
      {F::C, 4, {{8, H}, {27, R}, {36, R}, {42, R}, {48, H}}, 48,
       "rep-fact: Sp(4) degrees <= 48"},
      {F::C, 5, {{10, H}, {44, R}, {55, R}}, 55, "rep-fact: Sp(5) degrees <= 55"},
      {F::C, 6, {{12, H}, {65, R}, {78, R}}, 78, "rep-fact: Sp(6) degrees <= 78"},
      {F::C, 7, {{14, H}, {90, R}}, 90, "rep-fact: Sp(7) degrees <= 90"},
      {F::B, 3, {{7, R}, {8, R}, {21, R}, {27, R}, {35, R}, {48, R}}, 48,
       "rep-fact: Spin(7) degrees <= 48 (all real)"},
      {F::B, 4, {{9, R}, {16, R}, {36, R}, {44, R}}, 44,
       "rep-fact: Spin(9) degrees <= 44 (all real)"},
      {F::B, 5, {{11, R}, {32, H}, {55, R}}, 55,
       "rep-fact: Spin(11) degrees <= 55 (spin rep quaternionic)"},
      {F::B, 6, {{13, R}, {64, H}, {78, R}}, 78, "rep-fact: Spin(13) degrees <= 78"},
      {F::D, 4, {{8, R}, {28, R}, {35, R}}, 35,
       "rep-fact: Spin(8) degrees <= 35 (all real; three 8-dimensional)"},
      {F::D, 5, {{10, R}, {16, C}, {45, R}}, 45,
       "rep-fact: Spin(10) degrees <= 45 (half-spin complex)"},
      {F::D, 6, {{12, R}, {32, H}, {66, R}}, 66,
       "rep-fact: Spin(12) degrees <= 66 (half-spin quaternionic)"},
      {F::D, 7, {{14, R}, {64, C}}, 64, "rep-fact: Spin(14) degrees <= 64"},
      {F::G2, 2, {{7, R}, {14, R}, {27, R}}, 30,
       "rep-fact: G2 degrees <= 30 are real, in {7, 14, 27}"},
      {F::F4, 4, {{26, R}, {52, R}}, 60, "rep-fact: F4 degrees <= 60"},
      {F::E6, 6, {{27, C}, {78, R}}, 100, "rep-fact: E6 degrees <= 100"},
      {F::E7, 7, {{56, H}, {133, R}}, 150, "rep-fact: E7 degrees <= 150"},
      {F::E8, 8, {{248, R}}, 250, "rep-fact: E8 degrees <= 250"},
  };
  return recs;
}

// Smallest and second-smallest nontrivial irreducible degrees with their
// field types, for types beyond the explicit lists.
struct Fund {
  long long deg;
  RepField f;
};

static Fund min_fund(const SimpleType& t) {
  long long r = t.rank;
  switch (t.family) {
    case Family::A: return {r + 1, r == 1 ? RepField::quat : RepField::cplx};
    case Family::B: return {2 * r + 1, RepField::real};
    case Family::C: return {2 * r, RepField::quat};
    case Family::D: return {2 * r, RepField::real};
    case Family::G2: return {7, RepField::real};
    case Family::F4: return {26, RepField::real};
    case Family::E6: return {27, RepField::cplx};
    case Family::E7: return {56, RepField::quat};
    case Family::E8: return {248, RepField::real};
  }
  return {0, RepField::real};
}

static Fund second_fund(const SimpleType& t) {
  long long r = t.rank;
  switch (t.family) {
    case Family::A:
      if (r == 2) return {6, RepField::cplx};
      if (r == 3) return {6, RepField::real};
      return {r * (r + 1) / 2, RepField::cplx};  // second exterior power
    case Family::B: {
      long long spin = 1LL << r;
      long long adj = r * (2 * r + 1);
      if (spin < adj)
        return {spin, (r % 4 == 0 || r % 4 == 3) ? RepField::real : RepField::quat};
      return {adj, RepField::real};
    }
    case Family::C: return {2 * r * r - r - 1, RepField::real};
    case Family::D: {
      if (r == 4) return {28, RepField::real};
      long long half = 1LL << (r - 1);
      long long adj = r * (2 * r - 1);
      if (half < adj) {
        RepField f = (r % 2 == 1) ? RepField::cplx
                                  : (r % 4 == 2 ? RepField::quat : RepField::real);
        return {half, f};
      }
      return {adj, RepField::real};
    }
    case Family::G2: return {14, RepField::real};
    case Family::F4: return {52, RepField::real};
    case Family::E6: return {78, RepField::real};
    case Family::E7: return {133, RepField::real};
    case Family::E8: return {3875, RepField::real};
  }
  return {0, RepField::real};
}

// Self-duality flags per type.
static bool no_complex(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::B:
    case Family::C: return true;
    case Family::D: return t.rank % 2 == 0;
    case Family::G2:
    case Family::F4:
    case Family::E7:
    case Family::E8: return true;
    case Family::E6: return false;
  }
  return false;
}

static bool all_real(const SimpleType& t) {
  switch (t.family) {
    case Family::B: return t.rank % 4 == 0 || t.rank % 4 == 3;
    case Family::D: return t.rank % 4 == 0;
    case Family::G2:
    case Family::F4:
    case Family::E8: return true;
    default: return false;
  }
}

static bool no_quat(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank != 1 && (t.rank + 1) % 4 != 2;
    case Family::D: return t.rank % 2 == 1;
    case Family::E6: return true;
    default: return all_real(t);
  }
}

}  // namespace tables

Tri has_irrep(const SimpleType& t, RepField f, long long degree, std::string* provenance) {
  auto say = [&](const char* s) {
    if (provenance) *provenance = s;
  };
  if (degree <= 1) {
    say("trivial representation is not a subgroup witness");
    return Tri::no;
  }
  if (t.family == Family::A && t.rank == 1) {
    say("rep-fact: Sp(1) has one irreducible per degree; odd real, even quaternionic");
    bool yes = (f == RepField::real && degree % 2 == 1) ||
               (f == RepField::quat && degree % 2 == 0);
    return yes ? Tri::yes : Tri::no;
  }
  if (f == RepField::cplx && tables::no_complex(t)) {
    say("rep-fact: all representations self-dual");
    return Tri::no;
  }
  if (f == RepField::quat && tables::no_quat(t)) {
    say("rep-fact: no quaternionic representations");
    return Tri::no;
  }
  if (f != RepField::real && tables::all_real(t)) {
    say("rep-fact: all representations real");
    return Tri::no;
  }
  for (const auto& rec : tables::rep_facts()) {
    if (rec.fam != t.family || rec.rank != t.rank) continue;
    if (degree <= rec.cutoff) {
      for (const auto& e : rec.degrees)
        if (e.deg == degree && e.f == f) {
          say(rec.source);
          return Tri::yes;
        }
      say(rec.source);
      return Tri::no;
    }
  }
  tables::Fund lo = tables::min_fund(t);
  tables::Fund hi = tables::second_fund(t);
  if (degree < lo.deg) {
    say("rep-fact: below the smallest nontrivial degree");
    return Tri::no;
  }
  if (degree == lo.deg) {
    say("rep-fact: fundamental representation");
    return lo.f == f ? Tri::yes : Tri::no;
  }
  if (degree < hi.deg) {
    say("rep-fact: between first and second fundamental degrees");
    return Tri::no;
  }
  if (degree == hi.deg) {
    say("rep-fact: second fundamental degree");
    return hi.f == f ? Tri::yes : Tri::no;
  }
  say("beyond stored horizon");
  return Tri::unknown;
}

std::vector<MaximalInstance> maximal_subgroup_instances(const SimpleType& h) {
  std::vector<MaximalInstance> out;
  std::set<GroupTerm> seen;
  auto add = [&](GroupTerm g, const std::string& tag) {
    if (seen.insert(g).second) out.push_back({std::move(g), tag});
  };
  if (h.family == Family::A) {
    if (h.rank == 1) {
      add(Torus(1), "maxrank: torus in Sp(1)");
      return out;
    }
    int N = h.rank + 1;
    add(SO(N), "su-max: SO(n) in SU(n)");
    if (N % 2 == 0) add(Sp(N / 2), "su-max: Sp(m), 2m = n");
    for (int k = 1; 2 * k <= N; ++k)
      add(SU(k) * SU(N - k) * Torus(1), "su-max: S(U(k) x U(n-k))");
    for (int a = 2; a < N; ++a) {
      if (N % a != 0) continue;
      int b = N / a;
      if (std::min(a, b) >= 2 && std::max(a, b) >= 3)
        add(SU(a) * SU(b), "su-max: SU(p) (x) SU(q), pq = n");
    }
  } else if (h.family == Family::C) {
    int n = h.rank;
    for (int k = 1; 2 * k <= n; ++k)
      add(Sp(k) * Sp(n - k), "sp-max: Sp(k) x Sp(n-k)");
    for (int p = 3; p <= n; ++p)
      if (n % p == 0) add(SO(p) * Sp(n / p), "sp-max: SO(p) (x) Sp(q), pq = n");
    add(U(n), "sp-max: U(n)");
  } else if (h.family == Family::B || h.family == Family::D) {
    int N = h.family == Family::B ? 2 * h.rank + 1 : 2 * h.rank;
    for (int k = 1; 2 * k <= N; ++k)
      add(SO(k) * SO(N - k), "so-max: SO(k) x SO(n-k)");
    for (int p = 3; p * p <= N; ++p)
      if (N % p == 0 && N / p >= p) add(SO(p) * SO(N / p), "so-max: SO(p) (x) SO(q), pq = n");
    if (N % 2 == 0) add(U(N / 2), "so-max: U(k), 2k = n");
    for (int p = 1; 4 * p * p <= N; ++p)
      if (N % (4 * p) == 0) add(Sp(p) * Sp(N / (4 * p)), "so-max: Sp(p) (x) Sp(q), 4pq = n");
  } else if (h.family == Family::G2) {
    add(SU(3), "maxrank: SU(3) in G2");
    add(SO(4), "maxrank: SO(4) in G2");
  }
  // F4, E6, E7, E8: no subgroup rows stored.
  return out;
}

RepRow rep_row(const SimpleType& h) {
  switch (h.family) {
    case Family::A:
      if (h.rank == 1) return {};
      return {true, RepField::cplx, h.rank + 1};
    case Family::B: return {true, RepField::real, 2 * h.rank + 1};
    case Family::C: return {true, RepField::quat, 2 * h.rank};
    case Family::D: return {true, RepField::real, 2 * h.rank};
    case Family::G2: return {true, RepField::real, 7};
    default: return {};
  }
}

std::vector<DataRecord> embedded_data_records() {
  std::vector<DataRecord> recs;
  auto row = [&](const char* content, const char* tag) {
    recs.push_back({"subgroup-row", content, tag});
  };
  row("SO(k) x SO(n-k), 1 <= k <= n-1", "so-max");
  row("SO(p) (x) SO(q), pq = n, 3 <= p <= q", "so-max");
  row("U(k), 2k = n", "so-max");
  row("Sp(p) (x) Sp(q), 4pq = n", "so-max");
  row("rho(H), H simple, rho in Irr_R(H), deg rho = n", "so-max");
  row("SO(n)", "su-max");
  row("Sp(m), 2m = n", "su-max");
  row("S(U(k) x U(n-k)), 1 <= k <= n-1", "su-max");
  row("SU(p) (x) SU(q), pq = n, p >= 3, q >= 2", "su-max");
  row("rho(H), H simple, rho in Irr_C(H), deg rho = n", "su-max");
  row("Sp(k) x Sp(n-k), 1 <= k <= n-1", "sp-max");
  row("SO(p) (x) Sp(q), pq = n, p >= 3, q >= 1", "sp-max");
  row("U(n)", "sp-max");
  row("rho(H), H simple, rho in Irr_H(H), deg rho = 2n", "sp-max");
  row("G2: SO(4), SU(3)", "maxrank");
  row("SU(n), n != 4: S(U(1) x U(n-1)); SU(4): Sp(2); SO(n): SO(n-1); "
      "Sp(n), n >= 2: Sp(n-1) x Sp(1); G2: SU(3)",
      "maxdim");
  for (const auto& rec : tables::rep_facts()) {
    std::ostringstream os;
    os << SimpleType{rec.fam, rec.rank}.str() << ": ";
    for (const auto& e : rec.degrees) {
      os << e.deg
         << (e.f == RepField::real ? "R" : e.f == RepField::cplx ? "C" : "H") << " ";
    }
    os << "(complete below " << rec.cutoff << ")";
    recs.push_back({"rep-fact", os.str(), rec.source});
  }
  return recs;
}

}  // namespace pqk
