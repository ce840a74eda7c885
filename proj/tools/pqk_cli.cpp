// Command-line surface for the verification engine: exact index forms,
// the fundamental system, Hilbert values, Lie-group queries, the special
// dimension searches, and the full reproduction suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pqk/betti.hpp"
#include "pqk/embeddings.hpp"
#include "pqk/hilbert.hpp"
#include "pqk/lie_atlas.hpp"
#include "pqk/report.hpp"
#include "pqk/special_cases.hpp"

using namespace pqk;

namespace {

int run_indices(int n, int p, int q) {
  IndexContext ctx(n);
  const LinearForm& f = ctx.index_form(p, q);
  std::cout << "i^{" << p << "," << q << "} at n=" << n
            << (ctx.formal(p, q) ? " (formal expression)" : "") << "\n";
  for (const auto& [m, c] : f.coeffs) std::cout << "  " << m << ": " << c.str() << "\n";
  return 0;
}

int run_solve(int n, bool b2_zero, bool with_i16, bool volume) {
  IndexContext ctx(n);
  SolveOptions opt;
  opt.b2_zero = b2_zero;
  opt.with_ahat = true;
  opt.with_i1np1 = with_i16;
  opt.volume_param = volume;
  FundamentalSolution fs = solve_fundamental(ctx, opt);
  std::cout << "equations: " << fs.equations.size() << "\n";
  std::cout << "free monomials:";
  for (const auto& f : fs.sol.free_unknowns) std::cout << " " << f;
  std::cout << "\n";
  for (const auto& c : fs.sol.constraints)
    std::cout << "parameter constraint: 0 = " << c.str() << "\n";
  for (const auto& m : ctx.basis()) {
    if (opt.volume_param && m == "u^" + std::to_string(n)) continue;
    if (fs.sol.is_free(m)) continue;
    std::cout << m << " = " << fs.value_of(m).str() << "\n";
  }
  return 0;
}

int run_hilbert(const std::string& ahat) {
  HilbertData h = solve_f_values();
  for (int q = 0; q <= 11; ++q) {
    ParamAffine v = h.values[q];
    if (!ahat.empty()) v = v.substituted("ahat", ParamAffine(Rat(ahat)));
    std::cout << "f(" << q << ") = " << v.str() << "\n";
  }
  return 0;
}

int run_bounds() {
  AhatBounds b = ahat_bounds();
  std::cout << "combined inequality: 0 <= " << b.combined.str() << "\n";
  std::cout << "lower: " << b.lower.str() << " = " << b.lower.decimal_floor(10) << "...\n";
  std::cout << "upper: " << b.upper.str() << " = " << b.upper.decimal_ceil(10)
            << " (rounded up)\n";
  return 0;
}

int run_pairs() {
  for (auto& [d, v] : admissible_pairs()) std::cout << "(" << d << ", " << v << ")\n";
  return 0;
}

GroupTerm parse_group(const std::string& s) {
  // Products separated by 'x', e.g. "Sp(2)xSU(3)xS1".
  GroupTerm g;
  std::string token;
  std::istringstream is(s);
  while (std::getline(is, token, 'x')) {
    if (token.empty()) continue;
    auto num = [&](size_t from) { return std::stoi(token.substr(from)); };
    if (token == "S1" || token == "T1" || token == "U(1)" || token == "SO(2)")
      g = g * Torus(1);
    else if (token == "G2") g = g * G2();
    else if (token == "F4") g = g * F4();
    else if (token == "E6") g = g * E6();
    else if (token == "E7") g = g * E7();
    else if (token == "E8") g = g * E8();
    else if (token.rfind("SO(", 0) == 0) g = g * SO(num(3));
    else if (token.rfind("SU(", 0) == 0) g = g * SU(num(3));
    else if (token.rfind("Sp(", 0) == 0) g = g * Sp(num(3));
    else if (token.rfind("U(", 0) == 0) g = g * U(num(2));
    else if (token.rfind("T", 0) == 0) g = g * Torus(std::stoi(token.substr(1)));
    else throw CLI::ValidationError("group", "cannot parse factor: " + token);
  }
  return g;
}

int write_or_print(const std::string& text, const std::string& write_name) {
  if (write_name.empty()) {
    std::cout << text;
    return 0;
  }
  const char* dir = std::getenv("PQK_OUTPUT_DIR");
  std::string path = (dir ? std::string(dir) : std::string(".")) + "/" + write_name;
  std::ofstream os(path);
  if (!os) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  os << text;
  std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for quaternion-Kaehler index computations"};
  app.require_subcommand(1);

  // indices
  auto* indices = app.add_subcommand("indices", "print an index linear form i^{p,q}");
  int n = 5, p = 0, q = 0;
  indices->add_option("--n", n, "quaternionic dimension parameter")->capture_default_str();
  indices->add_option("--p", p, "exterior-power index")->required();
  indices->add_option("--q", q, "symmetric-power index")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve the fundamental system");
  int sn = 5;
  bool i16 = true, vol = true;
  std::vector<std::string> assumes;
  solve->add_option("--n", sn)->capture_default_str();
  solve->add_option("--assume", assumes, "b2=0 (default) or b2=free");
  solve->add_flag("--no-i16,!--i16", i16, "include the i^{1,n+1} parameter row");
  solve->add_flag("--no-volume,!--volume", vol, "use v instead of u^n");

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "Hilbert-polynomial values f(0..11)");
  std::string ahat;
  hil->add_option("--ahat", ahat, "substitute a rational value for the A-hat genus");

  app.add_subcommand("bounds", "exact A-hat genus window");
  app.add_subcommand("pairs", "admissible (d, v) pairs at vanishing A-hat genus");

  // groups
  auto* groups = app.add_subcommand("groups", "compact Lie group queries");
  groups->require_subcommand(1);
  auto* ge = groups->add_subcommand("enumerate", "enumerate group terms");
  int g_rank = 5;
  long long g_lo = 15, g_hi = 36;
  int g_mod = 0, g_res = 0;
  bool g_notorus = false;
  ge->add_option("--max-rank", g_rank)->capture_default_str();
  ge->add_option("--dim-lo", g_lo)->capture_default_str();
  ge->add_option("--dim-hi", g_hi)->capture_default_str();
  ge->add_option("--mod", g_mod, "dimension modulus");
  ge->add_option("--residue", g_res, "dimension residue");
  ge->add_flag("--no-torus", g_notorus);
  bool g_markdown = false;
  ge->add_flag("--markdown", g_markdown, "render as a dimension-grouped table");
  auto* gm = groups->add_subcommand("mod", "dimension residues of the simple families");
  int mod_m = 7;
  gm->add_option("--m", mod_m)->capture_default_str();
  auto* gmax = groups->add_subcommand("maxdim", "largest semi-simple groups per rank");
  int maxdim_r = 12;
  gmax->add_option("--rank", maxdim_r)->capture_default_str();
  auto* gsur = groups->add_subcommand("survivors", "groups above the recognition threshold");
  int sur_n = 22;
  gsur->add_option("--n", sur_n)->capture_default_str();
  auto* gthr = groups->add_subcommand("thresholds", "recognition thresholds for n = 3..29");
  auto* gid = groups->add_subcommand("identify", "recognize a Wolf space by isometry dimension");
  int id_n = 5;
  long long id_dim = 78;
  gid->add_option("--n", id_n)->required();
  gid->add_option("--dim", id_dim)->required();
  auto* gob = groups->add_subcommand("obstruct", "embedding obstruction check");
  std::string ob_g, ob_h;
  gob->add_option("--sub", ob_g, "candidate subgroup, e.g. Sp(2)xSU(3)")->required();
  gob->add_option("--amb", ob_h, "ambient group")->required();
  auto* gdata = groups->add_subcommand("data", "dump the embedded tables and rep facts");

  // betti
  auto* betti = app.add_subcommand("betti", "Betti-number constraints");
  betti->require_subcommand(1);
  auto* brel = betti->add_subcommand("relation", "residual of the linear relation");
  std::vector<long long> bvec;
  int bn = 5;
  brel->add_option("--n", bn)->capture_default_str();
  brel->add_option("--b", bvec, "b0 b2 ... b_{2n}")->expected(-1);
  auto* bmin = betti->add_subcommand("mineuler", "minimal Euler characteristic");
  long long b4min = 3382;
  long long window = 50;
  bmin->add_option("--b4-min", b4min)->capture_default_str();
  bmin->add_option("--window", window)->capture_default_str();

  auto* d16 = app.add_subcommand("dim16", "dimension-16 recognition search");
  long sweep_lo = -10000, sweep_hi = 10000;
  d16->add_option("--lo", sweep_lo)->capture_default_str();
  d16->add_option("--hi", sweep_hi)->capture_default_str();
  auto* d20 = app.add_subcommand("dim20", "dimension-20 b4=1 recognition");
  int d20n = 5;
  d20->add_option("--n", d20n, "4 or 5")->capture_default_str();
  auto* d24 = app.add_subcommand("dim24", "dimension-24 b4=1 recognition");
  bool no_derive = false;
  d24->add_flag("--no-derive", no_derive, "skip the symbolic re-derivation");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "run the full reproduction suite");
  std::string only, format = "md", write_name;
  bool timings = false, no_sweep = false;
  repro->add_option("--only", only, "id prefix filter");
  repro->add_option("--format", format)->check(CLI::IsMember({"json", "md", "csv"}));
  repro->add_option("--write", write_name, "file name inside PQK_OUTPUT_DIR");
  repro->add_flag("--timings", timings, "include elapsed times (non-deterministic)");
  repro->add_flag("--no-sweep", no_sweep, "skip the dimension-24 combination sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (indices->parsed()) return run_indices(n, p, q);
    if (solve->parsed()) {
      bool b2_zero = true;
      for (const auto& a : assumes)
        if (a == "b2=free") b2_zero = false;
      return run_solve(sn, b2_zero, i16, vol);
    }
    if (hil->parsed()) return run_hilbert(ahat);
    if (app.get_subcommand("bounds")->parsed()) return run_bounds();
    if (app.get_subcommand("pairs")->parsed()) return run_pairs();
    if (groups->parsed()) {
      if (ge->parsed()) {
        EnumOptions o;
        o.max_rank = g_rank;
        o.dim_lo = g_lo;
        o.dim_hi = g_hi;
        if (g_mod > 0) o.dim_mod = {{g_res, g_mod}};
        o.allow_torus = !g_notorus;
        auto groups_found = enumerate_groups(o);
        if (g_markdown) {
          std::map<long long, std::vector<std::string>> by_dim;
          for (const auto& g : groups_found) by_dim[g.dim()].push_back(g.str());
          std::cout << "| dim Isom(M) | type of Isom_0(M) up to finite coverings |\n"
                    << "|---|---|\n";
          for (auto& [d, names] : by_dim) {
            std::cout << "| " << d << " | ";
            for (size_t i = 0; i < names.size(); ++i)
              std::cout << (i ? ", " : "") << names[i];
            std::cout << " |\n";
          }
          return 0;
        }
        for (const auto& g : groups_found)
          std::cout << g.str() << "  rank " << g.rank() << "  dim " << g.dim() << "\n";
        return 0;
      }
      if (gthr->parsed()) {
        std::cout << "| n | dim Isom(M) > |\n|---|---|\n";
        for (int nn = 3; nn <= 29; ++nn)
          std::cout << "| " << nn << " | " << recognition_threshold(nn) << " |\n";
        return 0;
      }
      if (gm->parsed()) {
        for (auto& [k, v] : dims_mod(mod_m)) std::cout << k << " = " << v << "\n";
        return 0;
      }
      if (gmax->parsed()) {
        std::cout << "| rank | extremal groups | dim |\n|---|---|---|\n";
        for (int r = 1; r <= maxdim_r; ++r) {
          MaxDimResult m = max_dim_per_rank(r);
          std::cout << "| " << r << " | ";
          for (size_t i = 0; i < m.extremal.size(); ++i)
            std::cout << (i ? ", " : "") << m.extremal[i].str();
          std::cout << " | " << m.dim << " |\n";
        }
        return 0;
      }
      if (gsur->parsed()) {
        for (const auto& g : survivors_above_threshold(sur_n))
          std::cout << g.str() << "  dim " << g.dim() << "\n";
        return 0;
      }
      if (gid->parsed()) {
        Recognition r = identify_wolf(id_n, id_dim);
        const char* space = !r.space                       ? "-"
                            : *r.space == WolfSpace::HPn   ? "HP^n"
                            : *r.space == WolfSpace::GrComplex ? "Gr_2(C^{n+2})"
                                                               : "Gr~_4(R^{n+4})";
        const char* kind = r.kind == Recognition::Kind::identified ? "identified"
                           : r.kind == Recognition::Kind::matches_formula_below_threshold
                               ? "matches formula, below threshold"
                               : "unknown";
        std::cout << kind << " " << space << " (threshold " << recognition_threshold(id_n)
                  << ")\n";
        return 0;
      }
      if (gob->parsed()) {
        EmbeddingReport r = embedding_obstructed(parse_group(ob_g), parse_group(ob_h));
        std::cout << (r.verdict == Verdict::obstructed    ? "obstructed"
                      : r.verdict == Verdict::chain_found ? "chain-found"
                                                          : "inconclusive")
                  << "\n";
        for (const auto& s : r.chain) std::cout << "  " << s << "\n";
        for (const auto& s : r.missing_facts) std::cout << "  missing: " << s << "\n";
        return r.verdict == Verdict::inconclusive ? 1 : 0;
      }
      if (gdata->parsed()) {
        for (const auto& rec : embedded_data_records())
          std::cout << "[" << rec.tag << "] " << rec.kind << ": " << rec.content << "\n";
        return 0;
      }
    }
    if (betti->parsed()) {
      if (brel->parsed()) {
        if (bvec.empty()) {
          std::cout << "residual of the printed model vector: "
                    << betti_relation(BettiVector(5, {1, 0, 3382, 0, 3383, 2704})).str()
                    << "\n";
          return 0;
        }
        BettiVector bv(bn, bvec);
        std::cout << "residual: " << betti_relation(bv).str() << "  chi: " << bv.euler()
                  << "\n";
        return 0;
      }
      if (bmin->parsed()) {
        MinEulerResult r = min_euler(b4min, window);
        std::cout << "chi_min = " << r.chi << " at (b4,b6,b8,b10) = (" << r.argmin.b[2]
                  << "," << r.argmin.b[3] << "," << r.argmin.b[4] << "," << r.argmin.b[5]
                  << ")\n";
        return 0;
      }
    }
    if (d16->parsed()) {
      Dim16Report r = dim16_search(sweep_lo, sweep_hi);
      std::cout << "consistency polynomial: " << to_string(r.consistency) << "\n";
      std::cout << "derived d(x) = " << r.d_of_x.str() << "\n";
      std::cout << "printed-route d(x) = " << r.d_printed.str() << "\n";
      std::cout << "volume relation d = 7 + v/6 + vx/48: "
                << (r.volume_identity ? "exact identity" : "FAILS") << "\n";
      std::cout << "derived hits (8 <= d < 55):";
      for (long x : r.derived_hits) std::cout << " " << x;
      std::cout << "; printed-route hits:";
      for (long x : r.printed_hits) std::cout << " " << x;
      std::cout << "\nx = " << r.x << ": d = " << r.d.str() << ", v = " << r.v.str()
                << ", b4 = " << r.b4.str() << "\n";
      for (const auto& br : r.branches)
        std::cout << "branch (b4,b6,b8) = (" << r.b4.str() << "," << br.b6 << "," << br.b8
                  << "): c4u^2 = " << br.c4u2.str() << ", c4^2 = " << br.c4sq.str()
                  << (br.positive ? "" : " < 0 rejected") << "\n";
      return 0;
    }
    if (d20->parsed()) {
      AllOnesCheck chk = scalar_all_ones(d20n);
      std::cout << "all-ones characteristic numbers: zeros "
                << (chk.zeros_ok ? "ok" : "FAIL") << ", middle "
                << (chk.middle_ok ? "ok" : "FAIL") << ", d = " << chk.d.str() << "\n";
      BranchReport r = scalar_b4_one_branches(d20n);
      std::cout << "consistency polynomial degree " << r.consistency.degree() << "\n";
      for (const auto& b : r.branches) {
        std::cout << "x = ";
        if (b.x_rational)
          std::cout << b.x_exact.str();
        else
          std::cout << b.x_num.real() << (b.x_num.imag() ? "+-i..." : "");
        std::cout << "  d = " << (b.data_exact ? b.d_exact.str() : std::to_string(b.d_num))
                  << (b.d_integral ? " (integral)" : "") << "\n";
      }
      return 0;
    }
    if (d24->parsed()) {
      Dim24Report r = dim24_b4_one(!no_derive);
      std::cout << "branch a: d = " << r.branch_a.str() << " (not an integer)\n";
      std::cout << "branch b: d = " << r.branch_b.str() << "\n";
      std::cout << "degree-7 roots:\n";
      for (const auto& root : r.roots)
        std::cout << "  " << root.z.real() << (root.is_real ? "" : " + i*") << ""
                  << (root.is_real ? std::string() : std::to_string(root.z.imag())) << "\n";
      std::cout << "sweep: min |d - nearest integer| = " << r.sweep_min_distance << " over "
                << r.combinations << " combinations (distinct roots: " << r.sweep_min_distinct
                << ", diagonal: " << r.sweep_min_diagonal << ")\n";
      if (!no_derive)
        std::cout << "d = 105 re-derived: elimination "
                  << (r.branch_b_derived ? "yes" : "NO") << ", model numbers "
                  << (r.all_ones_d_105 ? "yes" : "NO") << "\n";
      return 0;
    }
    if (repro->parsed()) {
      ReproduceOptions o;
      o.only = only;
      o.include_dim24_sweep = !no_sweep;
      Report rep = reproduce_all(o);
      std::string text = format == "json" ? to_json(rep, timings)
                         : format == "csv" ? to_csv(rep, timings)
                                           : to_markdown(rep, timings);
      int rc = write_or_print(text, write_name);
      if (rc != 0) return rc;
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
