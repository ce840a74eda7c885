#include "pqk/special_cases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pqk {

namespace {

// Fold c2-exponents into powers of x: c2^a W -> x^a u^a W.
std::map<std::string, UniPoly> fold_c2(const Ring& ring, const LinearForm& f) {
  std::map<std::string, UniPoly> out;
  int iu = ring.index_of("u");
  int ic2 = ring.index_of("c2");
  for (auto& [name, c] : f.coeffs) {
    std::vector<int> e = ring.parse_monomial(name);
    int a = e[ic2];
    e[iu] += a;
    e[ic2] = 0;
    std::vector<Rat> mono(a + 1, Rat(0));
    mono[a] = c;
    std::string key = ring.monomial_name(e);
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(key, UniPoly(std::move(mono)));
    else
      it->second += UniPoly(std::move(mono));
  }
  return out;
}

std::vector<std::string> reduced_basis_of(const IndexContext& ctx) {
  std::vector<std::string> basis;
  int ic2 = ctx.ring()->index_of("c2");
  for (const auto& e : ctx.ring()->monomials_of_weight(2 * ctx.n()))
    if (e[ic2] == 0) basis.push_back(ctx.ring()->monomial_name(e));
  return basis;
}

IndexEquation make_eq(const IndexContext& ctx, int p, int q, ParamAffine rhs,
                      const std::string& id) {
  return IndexEquation{id, p, q, ctx.index_form(p, q), std::move(rhs)};
}

// Vanishing rows below the middle (genuine pairs only).
std::vector<IndexEquation> zero_equations(const IndexContext& ctx) {
  const int n = ctx.n();
  std::vector<IndexEquation> eqs;
  for (int s = 0; s < n; ++s) {
    if ((n + s) % 2 != 0) continue;
    for (int k = 0; k <= s; ++k)
      eqs.push_back(make_eq(ctx, k, s - k, ParamAffine(Rat(0)),
                            "i" + std::to_string(k) + std::to_string(s - k) + "=0"));
  }
  return eqs;
}

std::vector<IndexEquation> scalar_equations_b4_one(const IndexContext& ctx) {
  const int n = ctx.n();
  std::vector<IndexEquation> eqs = zero_equations(ctx);
  eqs.push_back(make_eq(ctx, 0, n, ParamAffine(Rat(1)), "i0n=1"));
  eqs.push_back(make_eq(ctx, 1, n - 1, ParamAffine(Rat(-1)), "i1(n-1)=-1"));
  eqs.push_back(make_eq(ctx, 2, n - 2, ParamAffine(Rat(1)), "i2(n-2)=b4=1"));
  return eqs;
}

Rat sum_of_coeffs(const LinearForm& f) {
  Rat s(0);
  for (auto& [m, c] : f.coeffs) s += c;
  return s;
}

}  // namespace

AffineT<RatFunc> ScalarSolve::reduce(const LinearForm& f) const {
  auto folded = fold_c2(*ctx->ring(), f);
  AffineT<RatFunc> acc;
  for (auto& [name, poly] : folded) acc += sol.value_of(name) * RatFunc(poly);
  return acc;
}

ScalarSolve scalar_solve(const IndexContext& ctx, const std::vector<IndexEquation>& eqs) {
  ScalarSolve out;
  out.ctx = &ctx;
  out.reduced_basis = reduced_basis_of(ctx);
  std::vector<std::vector<RatFunc>> a;
  std::vector<AffineT<RatFunc>> rhs;
  for (const auto& eq : eqs) {
    auto folded = fold_c2(*ctx.ring(), eq.lhs);
    std::vector<RatFunc> row;
    row.reserve(out.reduced_basis.size());
    for (const auto& m : out.reduced_basis) {
      auto it = folded.find(m);
      row.push_back(it == folded.end() ? RatFunc() : RatFunc(it->second));
    }
    a.push_back(std::move(row));
    AffineT<RatFunc> r(RatFunc(eq.rhs.constant));
    for (auto& [name, c] : eq.rhs.coeff) r += AffineT<RatFunc>::param(name, RatFunc(c));
    rhs.push_back(std::move(r));
  }
  out.sol = solve_parametric(std::move(a), std::move(rhs), out.reduced_basis);
  for (const auto& c : out.sol.constraints) {
    if (!c.is_constant())
      throw std::domain_error("scalar_solve: constraint with parameters");
    out.constraints.push_back(c.constant.num());
  }
  return out;
}

std::optional<Rat> rationalize(double z, long long max_den) {
  if (!std::isfinite(z)) return std::nullopt;
  double x = z;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = x - fl;
    if (rem < 1e-12) break;
    x = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rat r(p1, q1);
  if (std::abs(r.to_double() - z) < 1e-8 * std::max(1.0, std::abs(z))) return r;
  return std::nullopt;
}

namespace {

// Betti numbers read off the middle-weight rows at a pinned x: per
// i^{k,n-k} = (-1)^k (b_{2k} + b_{2k-2}), starting from the given b4.
std::vector<std::pair<std::string, Rat>> betti_chain_exact(const IndexContext& ctx,
                                                           const ScalarSolve& ss,
                                                           const Rat& x, const Rat& b4) {
  std::vector<std::pair<std::string, Rat>> out;
  Rat prev = b4;
  out.push_back({"b4", b4});
  for (int k = 3; k <= ctx.n(); ++k) {
    AffineT<RatFunc> form = ss.reduce(ctx.index_form(k, ctx.n() - k));
    if (!form.is_constant()) throw std::domain_error("betti_chain: unpinned index");
    Rat val = form.constant.eval(x);
    if (k % 2 == 1) val = -val;
    Rat bk = val - prev;
    out.push_back({"b" + std::to_string(2 * k), bk});
    prev = bk;
  }
  return out;
}

}  // namespace

BranchReport scalar_b4_one_branches(int n) {
  IndexContext ctx(n);
  BranchReport rep;
  rep.n = n;
  ScalarSolve ss = scalar_solve(ctx, scalar_equations_b4_one(ctx));
  if (ss.constraints.empty())
    throw std::domain_error("scalar_b4_one_branches: system underdetermined");
  UniPoly g = ss.constraints[0];
  for (size_t i = 1; i < ss.constraints.size(); ++i) g = UniPoly::gcd(g, ss.constraints[i]);
  rep.consistency = g.monic();

  std::vector<Root> numeric = real_roots(rep.consistency, 13);
  std::string un_name = "u^" + std::to_string(n);
  for (const auto& root : numeric) {
    ScalarBranch br;
    br.x_num = root.z;
    if (root.is_real) {
      if (auto r = rationalize(root.z.real())) {
        if (rep.consistency.eval_k(*r).is_zero()) {
          br.x_rational = true;
          br.x_exact = *r;
        }
      }
    }
    AffineT<RatFunc> d_form = ss.reduce(ctx.index_form(0, n + 2));
    AffineT<RatFunc> un_form = ss.sol.value_of(un_name);
    if (!d_form.is_constant() || !un_form.is_constant())
      throw std::domain_error("scalar_b4_one_branches: d not pinned");
    if (br.x_rational) {
      // A rational root can still be a pole of the generic solution
      // (rank drop); treat that as a degenerate branch.
      try {
        br.d_exact = d_form.constant.eval(br.x_exact);
        br.un_exact = un_form.constant.eval(br.x_exact);
        br.data_exact = true;
      } catch (const std::domain_error&) {
        br.x_rational = false;
      }
    }
    if (br.x_rational && br.data_exact) {
      br.d_num = br.d_exact.to_double();
      br.un_num = br.un_exact.to_double();
      br.d_integral = br.d_exact.is_integer();
      br.betti_exact = betti_chain_exact(ctx, ss, br.x_exact, Rat(1));
    } else {
      auto evalc = [&](const RatFunc& f) {
        std::complex<double> num(0, 0), den(0, 0);
        for (int i = f.num().degree(); i >= 0; --i)
          num = num * br.x_num + f.num().coeff(i).to_double();
        for (int i = f.den().degree(); i >= 0; --i)
          den = den * br.x_num + f.den().coeff(i).to_double();
        return num / den;
      };
      std::complex<double> d = evalc(d_form.constant);
      br.d_num = d.real();
      br.un_num = evalc(un_form.constant).real();
      br.d_integral = std::abs(d.imag()) < 1e-6 &&
                      std::abs(d.real() - std::round(d.real())) < 1e-6;
    }
    rep.branches.push_back(std::move(br));
  }
  for (const auto& b : rep.branches)
    if (b.d_integral) rep.integral_branches.push_back(b);
  return rep;
}

AllOnesCheck scalar_all_ones(int n) {
  IndexContext ctx(n);
  AllOnesCheck chk;
  chk.n = n;
  chk.zeros_ok = true;
  for (int s = 0; s < n; ++s) {
    if ((n + s) % 2 != 0) continue;
    for (int k = 0; k <= s; ++k)
      if (!sum_of_coeffs(ctx.index_form(k, s - k)).is_zero()) chk.zeros_ok = false;
  }
  chk.middle_ok = sum_of_coeffs(ctx.index_form(0, n)) == Rat(1) &&
                  sum_of_coeffs(ctx.index_form(1, n - 1)) == Rat(-1);
  std::vector<std::pair<std::string, Rat>> betti;
  Rat b2(0);
  for (int k = 2; k <= n; ++k) {
    Rat val = sum_of_coeffs(ctx.index_form(k, n - k));
    if (k % 2 == 1) val = -val;
    Rat prev_b = betti.empty() ? b2 : betti.back().second;
    Rat bk = val - prev_b;
    betti.push_back({"b" + std::to_string(2 * k), bk});
  }
  chk.betti = std::move(betti);
  chk.d = sum_of_coeffs(ctx.index_form(0, n + 2));
  return chk;
}

Dim16Report dim16_search(long sweep_lo, long sweep_hi) {
  IndexContext ctx(4);
  Dim16Report rep;

  // The full index system: the four vanishing rows plus the two pinned
  // middle rows. Over Q(x) it has rank five; the sixth row cuts x by a
  // consistency polynomial.
  std::vector<IndexEquation> eqs = zero_equations(ctx);
  eqs.push_back(make_eq(ctx, 0, 4, ParamAffine(Rat(1)), "i04=1"));
  eqs.push_back(make_eq(ctx, 1, 3, ParamAffine(Rat(-1)), "i13=-1"));
  ScalarSolve ss = scalar_solve(ctx, eqs);
  if (ss.constraints.empty() || !ss.sol.free_unknowns.empty())
    throw std::domain_error("dim16: unexpected system shape");
  UniPoly g = ss.constraints[0];
  for (size_t i = 1; i < ss.constraints.size(); ++i) g = UniPoly::gcd(g, ss.constraints[i]);
  rep.consistency = g.monic();

  auto pinned = [&](const AffineT<RatFunc>& a) {
    if (!a.is_constant()) throw std::domain_error("dim16: unpinned value");
    return a.constant;
  };
  rep.d_of_x = pinned(ss.reduce(ctx.index_form(0, 6)));
  rep.b4_of_x = pinned(ss.reduce(ctx.index_form(2, 2)));
  AffineT<RatFunc> b6f = -ss.reduce(ctx.index_form(3, 1)) - ss.reduce(ctx.index_form(2, 2));
  rep.b6_of_x = pinned(b6f);
  rep.b8_of_x = pinned(ss.reduce(ctx.index_form(4, 0))) - rep.b6_of_x;
  rep.c4u2_of_x = pinned(ss.sol.value_of("u^2*c4"));
  rep.c4sq_of_x = pinned(ss.sol.value_of("c4^2"));
  rep.v_of_x = pinned(ss.sol.value_of("u^4")) * RatFunc(Rat(256));

  // Printed volume relation d = 7 + v/6 + v x/48: an exact identity along
  // the solution family.
  {
    RatFunc x = RatFunc::x();
    RatFunc rhs = RatFunc(Rat(7)) +
                  rep.v_of_x * (RatFunc(Rat(1, 6)) + x * RatFunc(Rat(1, 48)));
    rep.volume_identity = rep.d_of_x == rhs;
  }
  // Printed b4(v, x) holds modulo the consistency polynomial.
  {
    RatFunc x = RatFunc::x();
    RatFunc poly = RatFunc(Rat(7, 8)) + x * RatFunc(Rat(9, 16)) +
                   x * x * RatFunc(Rat(11, 128)) + x * x * x * RatFunc(Rat(1, 512));
    RatFunc diff = rep.b4_of_x - (RatFunc(Rat(783, 2)) - rep.v_of_x * poly);
    rep.b4_identity_on_variety =
        diff.is_zero() || diff.num().divmod(rep.consistency).second.is_zero();
  }

  // The printed post-vanishing d(x), carried as data; it must agree with
  // the derived d on every admissible x.
  rep.d_printed = RatFunc(UniPoly(std::vector<Rat>{Rat(2128), Rat(392), Rat(21)}),
                          UniPoly(std::vector<Rat>{Rat(16), Rat(20), Rat(3)}));

  for (long x = sweep_lo; x <= sweep_hi; ++x) {
    Rat rx(x);
    if (rep.consistency.eval_k(rx).is_zero()) {
      Rat d = rep.d_of_x.eval(rx);
      if (d.is_integer() && d >= Rat(8) && d < Rat(55)) rep.derived_hits.push_back(x);
    }
    if (!rep.d_printed.den().eval_k(rx).is_zero()) {
      Rat d = rep.d_printed.eval(rx);
      if (d.is_integer() && d >= Rat(8) && d < Rat(55)) rep.printed_hits.push_back(x);
    }
  }

  rep.printed_d_at_admissible = true;
  for (long x : rep.derived_hits)
    if (rep.d_printed.eval(Rat(x)) != rep.d_of_x.eval(Rat(x)))
      rep.printed_d_at_admissible = false;

  if (rep.derived_hits.size() == 1 && rep.printed_hits == rep.derived_hits) {
    long x = rep.derived_hits[0];
    Rat rx(x);
    rep.x = x;
    rep.d = rep.d_of_x.eval(rx);
    rep.v = rep.v_of_x.eval(rx);
    rep.b4 = rep.b4_of_x.eval(rx);

    // The printed branch family at the admissible x, parameter t = c4 u^2:
    //   b6(t) = (153 - 96 t)/36,
    //   b8(t) from the dimension-16 Betti relation -1 + 3 b4 - b6 = 2 b8,
    //   c4^2(t) = (-669 + 704 t)/16.
    auto b6_line = [&](const Rat& t) { return (Rat(153) - Rat(96) * t) / Rat(36); };
    auto c4sq_line = [&](const Rat& t) { return (Rat(-669) + Rat(704) * t) / Rat(16); };
    auto t_of_b6 = [&](const Rat& b6) { return (Rat(153) - Rat(36) * b6) / Rat(96); };

    // The derived point must lie on the printed family.
    Rat t0 = rep.c4u2_of_x.eval(rx);
    rep.family_passes_derived_point = b6_line(t0) == rep.b6_of_x.eval(rx) &&
                                      c4sq_line(t0) == rep.c4sq_of_x.eval(rx);

    // Betti branches with b2 = 0: -1 + 3 b4 - b6 = 2 b8, Hard-Lefschetz.
    if (rep.b4.is_integer()) {
      long b4 = rep.b4.num_ll();
      for (long b8 = b4;; ++b8) {
        long b6 = -1 + 3 * b4 - 2 * b8;
        if (b6 < 0) break;
        Dim16Branch br;
        br.b6 = b6;
        br.b8 = b8;
        br.c4u2 = t_of_b6(Rat(b6));
        br.c4sq = c4sq_line(br.c4u2);
        br.positive = br.c4sq.sign() >= 0;
        rep.branches.push_back(br);
      }
      for (const auto& br : rep.branches)
        if (br.positive) rep.survivor = br;
    }
  }
  return rep;
}

namespace {

// Degree-7 polynomial of the dimension-24 recognition computation,
// ascending coefficients.
UniPoly dim24_poly() {
  return UniPoly(std::vector<Rat>{
      Rat(33284884867LL), Rat(-9711667063LL), Rat(-4142432537LL), Rat(579930789LL),
      Rat(67759961LL), Rat(-6960405LL), Rat(-358275LL), Rat(29223LL)});
}

struct Dim24Coeffs {
  Rat c0, x1, x2sq, x3p6, x4p5, x5p4, x6p3;
};

const Dim24Coeffs& dim24_coeffs() {
  static const Dim24Coeffs c = {
      Rat("457452279096536909/2417248821903360"),
      Rat("7937019926774969/402874803650560"),
      Rat("-19592196959405797/2417248821903360"),
      Rat("-263256496233/805749607301120"),
      Rat("1176648936457/402874803650560"),
      Rat("14142811929437/161149921460224"),
      Rat("-282904843313851/604312205475840"),
  };
  return c;
}

}  // namespace

std::complex<double> dim24_d_at(const std::vector<std::complex<double>>& r, int i1, int i2,
                                int i3, int i4, int i5, int i6) {
  const Dim24Coeffs& c = dim24_coeffs();
  auto p = [&](int i, int e) {
    std::complex<double> acc(1, 0);
    for (int t = 0; t < e; ++t) acc *= r[i];
    return acc;
  };
  return c.c0.to_double() + c.x1.to_double() * r[i1] + c.x2sq.to_double() * p(i2, 2) +
         c.x3p6.to_double() * p(i3, 6) + c.x4p5.to_double() * p(i4, 5) +
         c.x5p4.to_double() * p(i5, 4) + c.x6p3.to_double() * p(i6, 3);
}

Dim24Report dim24_b4_one(bool derive) {
  Dim24Report rep;
  rep.branch_a = Rat(244724, 2891);
  rep.branch_b = Rat(105);
  rep.degree7 = dim24_poly();
  rep.roots = real_roots(rep.degree7, 13);

  std::vector<std::complex<double>> r;
  for (const auto& root : rep.roots) r.push_back(root.z);
  double best = 1e300, best_inj = 1e300, best_diag = 1e300;
  long long count = 0;
  int idx[6];
  for (idx[0] = 0; idx[0] < 7; ++idx[0])
    for (idx[1] = 0; idx[1] < 7; ++idx[1])
      for (idx[2] = 0; idx[2] < 7; ++idx[2])
        for (idx[3] = 0; idx[3] < 7; ++idx[3])
          for (idx[4] = 0; idx[4] < 7; ++idx[4])
            for (idx[5] = 0; idx[5] < 7; ++idx[5]) {
              std::complex<double> d =
                  dim24_d_at(r, idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]);
              double dist = std::abs(d - std::complex<double>(std::round(d.real()), 0));
              best = std::min(best, dist);
              bool inj = true;
              for (int a = 0; a < 6 && inj; ++a)
                for (int b = a + 1; b < 6; ++b)
                  if (idx[a] == idx[b]) { inj = false; break; }
              if (inj) best_inj = std::min(best_inj, dist);
              ++count;
            }
  for (int i = 0; i < 7; ++i) {
    std::complex<double> d = dim24_d_at(r, i, i, i, i, i, i);
    best_diag = std::min(best_diag,
                         std::abs(d - std::complex<double>(std::round(d.real()), 0)));
  }
  rep.sweep_min_distance = best;
  rep.sweep_min_distinct = best_inj;
  rep.sweep_min_diagonal = best_diag;
  rep.combinations = count;

  if (derive) {
    BranchReport br = scalar_b4_one_branches(6);
    for (const auto& b : br.integral_branches)
      if (b.data_exact && b.d_exact == Rat(105)) rep.branch_b_derived = true;
    rep.all_ones_d_105 = scalar_all_ones(6).d == Rat(105);
  }
  return rep;
}

}  // namespace pqk
