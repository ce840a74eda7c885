// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exact checks compare rationals; decimal checks use the stated tolerances.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "pqk/betti.hpp"
#include "pqk/embeddings.hpp"
#include "pqk/hilbert.hpp"
#include "pqk/lie_atlas.hpp"
#include "pqk/report.hpp"
#include "pqk/roots.hpp"
#include "pqk/special_cases.hpp"

using namespace pqk;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& fn) {
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  if (!ok) ++failures;
  std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              note.c_str());
  std::fflush(stdout);
}

bool report_group_passes(const Report& rep, const std::string& prefix,
                         bool allow_typo = true) {
  int seen = 0;
  for (const auto& r : rep.records) {
    if (r.id.rfind(prefix, 0) != 0) continue;
    ++seen;
    if (r.status == CheckRecord::Status::fail) return false;
    if (!allow_typo && r.status != CheckRecord::Status::pass) return false;
  }
  return seen > 0;
}

}  // namespace

int main() {
  Report rep = reproduce_all();

  criterion(1, "ch(H), ch(E) and the A-hat expansion match the printed displays exactly",
            [&] {
              int ahat_coeffs = 0;
              for (const auto& d : golden::ahat_display())
                ahat_coeffs += static_cast<int>(d.terms.size());
              return ahat_coeffs >= 17 && report_group_passes(rep, "char.", false);
            });

  criterion(2, "all 14 printed index displays match; the u^4 misprint is typo-noted", [&] {
    int displays = 0;
    bool i00_typo = false;
    for (const auto& r : rep.records) {
      if (r.id.rfind("index.i", 0) != 0) continue;
      ++displays;
      if (r.status == CheckRecord::Status::fail) return false;
      if (r.id == "index.i00" && r.status == CheckRecord::Status::typo_noted) i00_typo = true;
    }
    return displays == 14 && i00_typo;
  });

  criterion(3, "solved relations c2u^4 and the c2^2u^3 inequality numerator are exact", [&] {
    return report_group_passes(rep, "solve.c2u4", false) &&
           report_group_passes(rep, "solve.c2sq_u3", false);
  });

  criterion(4, "Hilbert values f(2)..f(11) exact; interpolant has degree 11", [&] {
    return report_group_passes(rep, "hilbert.f", false) &&
           report_group_passes(rep, "hilbert.interp", false);
  });

  criterion(5, "A-hat bounds 1053/32768 and 182325/262144 with 10-digit decimals", [&] {
    AhatBounds b = ahat_bounds();
    return b.lower == Rat(1053, 32768) && b.upper == Rat(182325, 262144) &&
           b.lower.decimal_floor(10) == "0.0321350097" &&
           b.upper.decimal_ceil(10) == "0.6955146790";
  });

  criterion(6, "congruence enumeration factors as (d=1 mod 7) and (v=4 mod 20)", [&] {
    // The theorem states the conjunction; the proof display prints an
    // "or", which the enumeration refutes (typo-noted, never failed).
    CongruenceReport c = congruences();
    return c.matches_conjunction && !c.matches_disjunction &&
           report_group_passes(rep, "congruence.");
  });

  criterion(7, "admissible (d, v) pairs list", [&] {
    std::vector<std::pair<int, int>> expect;
    for (int v = 4; v <= 64; v += 20) expect.push_back({15, v});
    for (int v = 24; v <= 164; v += 20) expect.push_back({22, v});
    for (int v = 24; v <= 264; v += 20) expect.push_back({29, v});
    for (int v = 24; v <= 384; v += 20) expect.push_back({36, v});
    return admissible_pairs() == expect;
  });

  criterion(8, "group tables: isometry table, residues, largest-per-rank, thresholds", [&] {
    return report_group_passes(rep, "lie.table1", false) &&
           report_group_passes(rep, "lie.dims_mod7", false) &&
           report_group_passes(rep, "lie.maxdim_table") &&  // rank-6 tie typo-noted
           report_group_passes(rep, "lie.tableC", false);
  });

  criterion(9, "survivors above the threshold at n = 22 and the 9-element odd list", [&] {
    return report_group_passes(rep, "lie.survivors", false);
  });

  criterion(10, "obstruction checker verdicts (no inconclusives on the printed list)", [&] {
    return report_group_passes(rep, "obstruct.", false);
  });

  criterion(11, "dimension 16/20/24 searches", [&] {
    return report_group_passes(rep, "dim16.", false) &&
           report_group_passes(rep, "dim20.", false) &&
           report_group_passes(rep, "dim24.", false);
  });

  criterion(12, "Betti constraints: model configuration, minimum, pair list", [&] {
    return report_group_passes(rep, "betti.config3382", false) &&
           report_group_passes(rep, "betti.min_euler", false) &&
           report_group_passes(rep, "betti.lemma_pairs", false);
  });

  criterion(13, "optimization layer: apex, rectangle maximum, float combination", [&] {
    return report_group_passes(rep, "parabola.apex", false) &&
           report_group_passes(rep, "parabola.closed_form", false) &&
           report_group_passes(rep, "parabola.rectangle_max", false) &&
           report_group_passes(rep, "float.euler_combination", false);
  });

  criterion(14, "property suites pass on 1000+ randomized cases each", [&] {
    // The randomized property suites live in the unit binaries; here we
    // re-run the core invariants at acceptance scale.
    RingPtr ring = standard_ring(5);
    unsigned long long s = 42;
    auto rnd = [&](long long lo, long long hi) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      return lo + static_cast<long long>((s >> 11) %
                                         static_cast<unsigned long long>(hi - lo + 1));
    };
    auto rand_poly = [&]() {
      GradedPoly p(ring);
      for (int t = 0; t < 4; ++t) {
        std::vector<int> e(ring->arity());
        for (int i = 0; i < ring->arity(); ++i) e[i] = static_cast<int>(rnd(0, 2));
        if (ring->weight_of(e) > ring->truncation) continue;
        p += GradedPoly::monomial(ring, e, Rat(rnd(-9, 9), rnd(1, 4)));
      }
      return p;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      GradedPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
      if (!(a * (b + c) == a * b + a * c)) return false;
      if (!(a * b == b * a)) return false;
    }
    // Newton round trips.
    for (int trial = 0; trial < 1000; ++trial) {
      GradedPoly chern(ring, Rat(1));
      for (int i = 1; i <= 5; ++i)
        chern += GradedPoly::var(ring, "c" + std::to_string(2 * i)) * Rat(rnd(-4, 4));
      BundleChar v = ch_of(rnd(1, 12), chern);
      if (!(chern_classes(v) == chern)) return false;
    }
    // Enumeration completeness at small bounds.
    for (int r = 1; r <= 3; ++r) {
      EnumOptions o;
      o.max_rank = r;
      o.dim_lo = 1;
      o.dim_hi = 30;
      if (!(enumerate_groups(o) == enumerate_groups_oracle(o))) return false;
    }
    // Back-substitution identities on 1000 random parametric systems.
    for (int trial = 0; trial < 1000; ++trial) {
      int rows = static_cast<int>(rnd(1, 4)), cols = static_cast<int>(rnd(1, 4));
      std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
      std::vector<ParamAffine> rhs(rows);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(rnd(-3, 3));
        rhs[i] = ParamAffine::param("p", Rat(rnd(-2, 2)));
      }
      std::vector<std::string> names;
      for (int j = 0; j < cols; ++j) names.push_back("x" + std::to_string(j));
      auto sol = solve_parametric(m, rhs, names);
      if (!sol.consistent || !sol.constraints.empty()) continue;
      for (int i = 0; i < rows; ++i) {
        ParamAffine acc;
        for (int j = 0; j < cols; ++j) acc += sol.value_of(names[j]) * m[i][j];
        if (!(acc == rhs[i])) return false;
      }
    }
    return true;
  });

  // Context for the reviewer: anything typo-noted is a documented print
  // discrepancy, not a failure.
  int typos = 0;
  for (const auto& r : rep.records)
    if (r.status == CheckRecord::Status::typo_noted) ++typos;
  std::printf("---\nreproduction suite: %zu checks, %d failures, %d typo-noted\n",
              rep.records.size(), rep.failures(), typos);
  if (rep.failures() > 0) {
    for (const auto& r : rep.records)
      if (r.status == CheckRecord::Status::fail)
        std::printf("  FAILING CHECK %s: expected %s, computed %s\n", r.id.c_str(),
                    r.expected.c_str(), r.computed.c_str());
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
