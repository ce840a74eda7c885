#include "pqk/index_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqk {

LinearForm to_linear_form(const GradedPoly& p, int weight) {
  LinearForm f;
  for (const auto& [e, c] : p.terms()) {
    if (p.ring()->weight_of(e) != weight)
      throw std::invalid_argument("to_linear_form: term of unexpected weight");
    f.coeffs[p.ring()->monomial_name(e)] = c;
  }
  return f;
}

IndexContext::IndexContext(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("IndexContext: n must be >= 2");
  ring_ = standard_ring(n);

  GradedPoly chern_E(ring_, Rat(1));
  for (int i = 1; i <= n; ++i) chern_E += GradedPoly::var(ring_, "c" + std::to_string(2 * i));
  E_ = ch_of(2 * n, chern_E);

  GradedPoly chern_H = GradedPoly(ring_, Rat(1)) - GradedPoly::var(ring_, "u");
  H_ = ch_of(2, chern_H);

  ahat_ = genus_class(ahat_series(n), pontryagin(tensor(E_, H_)));

  for (const auto& e : ring_->monomials_of_weight(2 * n))
    basis_.push_back(ring_->monomial_name(e));
}

const BundleChar& IndexContext::lambda0(int p) const {
  auto it = lam0_.find(p);
  if (it == lam0_.end()) it = lam0_.emplace(p, exterior0(p, E_)).first;
  return it->second;
}

const BundleChar& IndexContext::sym_h(int q) const {
  auto it = symh_.find(q);
  if (it == symh_.end()) it = symh_.emplace(q, symmetric(q, H_)).first;
  return it->second;
}

const LinearForm& IndexContext::index_form(int p, int q) const {
  auto key = std::make_pair(p, q);
  auto it = forms_.find(key);
  if (it != forms_.end()) return it->second;
  GradedPoly prod = ahat_ * lambda0(p).full_ch() * sym_h(q).full_ch();
  LinearForm f = to_linear_form(prod.weight_component(2 * n_), 2 * n_);
  return forms_.emplace(key, std::move(f)).first->second;
}

std::string i1np1_param_name(int n) { return "i1" + std::to_string(n + 1); }

std::vector<IndexEquation> fundamental_system(const IndexContext& ctx, const SolveOptions& opt) {
  const int n = ctx.n();
  std::vector<IndexEquation> eqs;
  auto betti = [&](int k) -> ParamAffine {
    // b_{2k} as a parameter; b0 = 1, negative index 0, b2 = 0 when the
    // rationally-3-connected flag is set.
    if (k < 0) return ParamAffine(Rat(0));
    if (k == 0) return ParamAffine(Rat(1));
    if (k == 1 && opt.b2_zero) return ParamAffine(Rat(0));
    return ParamAffine::param("b" + std::to_string(2 * k));
  };
  // Vanishing below the middle: genuine pairs only.
  for (int s = 0; s < n; ++s) {
    if ((n + s) % 2 != 0) continue;
    for (int k = 0; k <= s; ++k) {
      int l = s - k;
      eqs.push_back({"i" + std::to_string(k) + std::to_string(l) + "=0", k, l,
                     ctx.index_form(k, l), ParamAffine(Rat(0))});
    }
  }
  // Middle weight: i^{k,n-k} = (-1)^k (b_{2k} + b_{2k-2}).
  for (int k = 0; k <= n; ++k) {
    ParamAffine rhs = betti(k) + betti(k - 1);
    if (k % 2 == 1) rhs = -rhs;
    eqs.push_back({"i" + std::to_string(k) + std::to_string(n - k) + "=betti", k, n - k,
                   ctx.index_form(k, n - k), rhs});
  }
  eqs.push_back({"i0" + std::to_string(n + 2) + "=d", 0, n + 2, ctx.index_form(0, n + 2),
                 ParamAffine::param("d")});
  if (opt.with_ahat)
    eqs.push_back({"i00=ahat", 0, 0, ctx.index_form(0, 0), ParamAffine::param("ahat")});
  if (opt.i1np1_zero)
    eqs.push_back({"i1" + std::to_string(n + 1) + "=0", 1, n + 1, ctx.index_form(1, n + 1),
                   ParamAffine(Rat(0))});
  else if (opt.with_i1np1)
    eqs.push_back({"i1" + std::to_string(n + 1) + "=param", 1, n + 1,
                   ctx.index_form(1, n + 1), ParamAffine::param(i1np1_param_name(n))});
  return eqs;
}

FundamentalSolution solve_fundamental(const IndexContext& ctx, const SolveOptions& opt) {
  FundamentalSolution out;
  out.ctx = &ctx;
  out.options = opt;
  out.equations = fundamental_system(ctx, opt);

  std::vector<std::string> unknowns = ctx.basis();
  std::string un = "u^" + std::to_string(ctx.n());
  std::optional<size_t> u_col;
  if (opt.volume_param) {
    for (size_t i = 0; i < unknowns.size(); ++i)
      if (unknowns[i] == un) u_col = i;
  }

  std::vector<std::vector<Rat>> a;
  std::vector<ParamAffine> rhs;
  for (const auto& eq : out.equations) {
    std::vector<Rat> row;
    row.reserve(unknowns.size());
    for (const auto& m : unknowns) row.push_back(eq.lhs.coeff(m));
    ParamAffine r = eq.rhs;
    if (u_col) {
      // Move the u^n column to the right-hand side as v / 4^n.
      Rat c = row[*u_col];
      if (!c.is_zero())
        r -= ParamAffine::param("v", c * Rat(4).pow(ctx.n()).inv());
      row.erase(row.begin() + static_cast<long>(*u_col));
    }
    a.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }
  if (u_col) unknowns.erase(unknowns.begin() + static_cast<long>(*u_col));
  out.sol = solve_parametric(std::move(a), std::move(rhs), unknowns);
  return out;
}

ParamAffine FundamentalSolution::reduce(const LinearForm& f) const {
  ParamAffine acc;
  std::string un = "u^" + std::to_string(ctx->n());
  for (auto& [m, c] : f.coeffs) {
    if (options.volume_param && m == un) {
      acc += ParamAffine::param("v", c * Rat(4).pow(ctx->n()).inv());
    } else {
      acc += sol.value_of(m) * c;
    }
  }
  return acc;
}

bool FundamentalSolution::implies(const std::map<std::string, Rat>& lhs,
                                  const ParamAffine& rhs) const {
  LinearForm f;
  f.coeffs = lhs;
  return reduce(f) == rhs;
}

ParamAffine FundamentalSolution::with_volume(const ParamAffine& a) const {
  return a.substituted("u^" + std::to_string(ctx->n()),
                       ParamAffine::param("v", Rat(4).pow(ctx->n()).inv()));
}

namespace {

// Monomial names of the four degree-4 building blocks and their pairwise
// products times u, at n = 5.
struct SquareBasis {
  std::vector<std::vector<int>> exps;  // c2^2, c2 u, u^2, c4 as exponent tuples
  const Ring* ring;
};

template <class K, class Value>
AffineT<K> expand_square(const IndexContext& ctx, const K& k, const K& l, const K& m,
                         const K& nc, Value value_of_monomial) {
  if (ctx.n() != 5)
    throw std::invalid_argument("positivity_form: defined for n = 5");
  const RingPtr& ring = ctx.ring();
  auto e_c2sq = ring->parse_monomial("c2^2");
  auto e_c2u = ring->parse_monomial("u*c2");
  auto e_usq = ring->parse_monomial("u^2");
  auto e_c4 = ring->parse_monomial("c4");
  std::vector<std::vector<int>> basis = {e_c2sq, e_c2u, e_usq, e_c4};
  std::vector<K> q = {k, l, m, nc};
  auto e_u = ring->parse_monomial("u");
  AffineT<K> acc;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      K c = q[i] * q[j];
      if (c == K{}) continue;
      std::vector<int> e(ring->arity(), 0);
      for (int t = 0; t < ring->arity(); ++t) e[t] = basis[i][t] + basis[j][t] + e_u[t];
      acc += value_of_monomial(ring->monomial_name(e)) * c;
    }
  }
  return acc;
}

}  // namespace

ParamAffine positivity_form(const FundamentalSolution& fs, const Rat& k, const Rat& l,
                            const Rat& m, const Rat& nc, bool volume) {
  auto value = [&](const std::string& name) -> ParamAffine {
    LinearForm f;
    f.coeffs[name] = Rat(1);
    return fs.reduce(f);
  };
  ParamAffine r = expand_square<Rat>(*fs.ctx, k, l, m, nc, value);
  return volume ? fs.with_volume(r) : r;
}

AffineD positivity_form_f(const FundamentalSolution& fs, double k, double l, double m,
                          double nc, bool volume) {
  auto value = [&](const std::string& name) -> AffineD {
    LinearForm f;
    f.coeffs[name] = Rat(1);
    ParamAffine r = fs.reduce(f);
    if (volume) r = fs.with_volume(r);
    return to_double(r);
  };
  return expand_square<double>(*fs.ctx, k, l, m, nc, value);
}

void AffineRatio::normalize() {
  // Clear the denominator to coprime integers with positive first entry.
  mpz_class lcm_den(1), gcd_num(0);
  auto visit = [&](const Rat& r) {
    mpz_class d = r.raw().get_den();
    mpz_class n = r.raw().get_num();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  };
  if (!den.constant.is_zero()) visit(den.constant);
  for (auto& [n, c] : den.coeff) visit(c);
  if (gcd_num == 0) throw std::domain_error("AffineRatio: zero denominator");
  Rat scale = Rat(mpq_class(lcm_den) / mpq_class(gcd_num));
  Rat first = den.constant.is_zero() && !den.coeff.empty() ? den.coeff.begin()->second
                                                           : den.constant;
  if ((first * scale).sign() < 0) scale = -scale;
  num = num * scale;
  den = den * scale;
}

namespace {

// The bound for i^{1,6} from (c2 u + m u^2)^2 u >= 0 at d = 0 is
// g0 + g1 m + g2 m^2 with the coefficients affine in {ahat, v}.
struct QuadraticBound {
  ParamAffine g0, g1, g2;
};

QuadraticBound i16_quadratic(const FundamentalSolution& fs) {
  if (!fs.options.with_i1np1 || !fs.options.with_ahat)
    throw std::invalid_argument("parabola_bound: needs ahat and i^{1,6} rows");
  auto value = [&](const std::string& name) {
    LinearForm f;
    f.coeffs[name] = Rat(1);
    return fs.with_volume(fs.reduce(f));
  };
  ParamAffine c2sq_u3 = value("u^3*c2^2");
  ParamAffine c2_u4 = value("u^4*c2");
  ParamAffine u5 = value("u^5");
  const std::string i16 = i1np1_param_name(5);
  Rat a = c2sq_u3.coefficient(i16);
  if (a.sign() >= 0) throw std::domain_error("parabola_bound: unexpected i^{1,6} sign");
  // c2^2u^3 + 2m c2u^4 + m^2 u^5 >= 0  <=>  i16 <= g0 + g1 m + g2 m^2.
  auto drop = [&](ParamAffine p) {
    p.coeff.erase(i16);
    p = p.substituted("d", ParamAffine(Rat(0)));
    for (auto& [name, c] : p.coeff)
      if (name != "ahat" && name != "v")
        throw std::domain_error("parabola_bound: unresolved parameter " + name);
    return p;
  };
  Rat s = -a.inv();
  QuadraticBound q;
  q.g0 = drop(c2sq_u3) * s;
  q.g1 = drop(c2_u4) * (s * Rat(2));
  q.g2 = drop(u5) * s;
  return q;
}

Rat eval2(const ParamAffine& p, const Rat& ahat, const Rat& v) {
  return p.eval({{"ahat", ahat}, {"v", v}});
}

}  // namespace

Rat parabola_closed_form(const FundamentalSolution& fs, const Rat& ahat, const Rat& v) {
  QuadraticBound q = i16_quadratic(fs);
  Rat g0 = eval2(q.g0, ahat, v), g1 = eval2(q.g1, ahat, v), g2 = eval2(q.g2, ahat, v);
  if (g2.sign() <= 0) throw std::domain_error("parabola_closed_form: v must be positive");
  return g0 - g1 * g1 / (Rat(4) * g2);
}

ParabolaReport parabola_bound(const FundamentalSolution& fs, const Rat& ahat_lo,
                              const Rat& ahat_hi) {
  QuadraticBound q = i16_quadratic(fs);
  ParabolaReport rep;
  rep.apex.num = -q.g1;
  rep.apex.den = q.g2 * Rat(2);
  rep.apex.normalize();

  bool have = false;
  for (long v = 1; v <= 1024; ++v) {
    Rat rv(v);
    // Concave in ahat: candidates are the interval ends and the stationary
    // point of g0 - g1^2/(4 g2) in ahat.
    Rat g2v = eval2(q.g2, Rat(0), rv);
    std::vector<Rat> cands = {ahat_lo, ahat_hi};
    {
      // h(a) = g0(a) - g1(a)^2 / (4 g2); dh/da = g0_a - 2 g1 g1_a/(4 g2).
      Rat g0a = q.g0.coefficient("ahat");
      Rat g1a = q.g1.coefficient("ahat");
      if (!g1a.is_zero()) {
        // Solve g0a - g1(a) g1a / (2 g2) = 0 for a.
        Rat g1_const = eval2(q.g1, Rat(0), rv);
        Rat a_star = (g0a * Rat(2) * g2v / g1a - g1_const) / g1a;
        if (a_star > ahat_lo && a_star < ahat_hi) cands.push_back(a_star);
      }
    }
    for (const Rat& a : cands) {
      Rat g0 = eval2(q.g0, a, rv), g1 = eval2(q.g1, a, rv);
      Rat h = g0 - g1 * g1 / (Rat(4) * g2v);
      if (!have || h > rep.rectangle_max_exact) {
        have = true;
        rep.rectangle_max_exact = h;
        rep.argmax_ahat_exact = a;
        rep.argmax_v = v;
      }
    }
  }
  rep.rectangle_max = rep.rectangle_max_exact.to_double();
  rep.argmax_ahat = rep.argmax_ahat_exact.to_double();
  return rep;
}

}  // namespace pqk
