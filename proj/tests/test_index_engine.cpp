#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqk/index_engine.hpp"
#include "pqk/report.hpp"

using namespace pqk;

namespace {

IndexContext& ctx5() {
  static IndexContext c(5);
  return c;
}

FundamentalSolution& fs_full() {
  static FundamentalSolution fs = [] {
    SolveOptions opt;
    opt.with_ahat = true;
    opt.with_i1np1 = true;
    return solve_fundamental(ctx5(), opt);
  }();
  return fs;
}

}  // namespace

TEST_CASE("monomial basis at n = 5 has exactly 19 elements") {
  CHECK(ctx5().basis().size() == 19);
  // And the count comes from a brute-force enumeration of weight-10 tuples.
  int count = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 1; ++d)
          for (int e = 0; e <= 1; ++e)
            for (int f = 0; f <= 1; ++f)
              if (2 * a + 2 * b + 4 * c + 6 * d + 8 * e + 10 * f == 10) ++count;
  CHECK(count == 19);
}

TEST_CASE("formal flag follows the parity of n+p+q") {
  CHECK(ctx5().formal(0, 0));
  CHECK_FALSE(ctx5().formal(0, 1));
  CHECK_FALSE(ctx5().formal(0, 5));
  CHECK(ctx5().formal(1, 5));
  CHECK_FALSE(ctx5().formal(1, 6));
}

TEST_CASE("printed index coefficients, spot values") {
  CHECK(ctx5().index_form(0, 0).coeff("c10") == Rat(10, 479001600));
  CHECK(ctx5().index_form(0, 5).coeff("c10") == Rat(10, 79833600));
  CHECK(ctx5().index_form(5, 0).coeff("c10") == Rat(-1415810, 3628800));
}

TEST_CASE("all fourteen printed index displays match exactly") {
  for (const auto& d : golden::index_displays()) {
    LinearForm expect = golden::display_form(ctx5(), d);
    const LinearForm& got = ctx5().index_form(d.p, d.q);
    INFO("display i^{", d.p, ",", d.q, "}");
    CHECK(got.coeffs == expect.coeffs);
  }
}

TEST_CASE("fundamental system shape at n = 5") {
  SolveOptions plain;
  plain.with_ahat = false;
  auto eqs = fundamental_system(ctx5(), plain);
  CHECK(eqs.size() == 13);
  // The thirteen printed right-hand sides.
  std::map<std::string, std::string> rhs;
  for (const auto& e : eqs) rhs[e.id] = e.rhs.str();
  CHECK(rhs.at("i01=0") == "0");
  CHECK(rhs.at("i30=0") == "0");
  CHECK(rhs.at("i05=betti") == "1");
  CHECK(rhs.at("i14=betti") == "-1");
  CHECK(rhs.at("i23=betti") == "0 + b4");
  CHECK(rhs.at("i32=betti") == "0 - b4 - b6");
  CHECK(rhs.at("i41=betti") == "0 + b6 + b8");
  CHECK(rhs.at("i50=betti") == "0 - b10 - b8");
  CHECK(rhs.at("i07=d") == "0 + d");

  SolveOptions keep_b2;
  keep_b2.b2_zero = false;
  auto eqs2 = fundamental_system(ctx5(), keep_b2);
  for (const auto& e : eqs2)
    if (e.id == "i14=betti") CHECK(e.rhs == -(ParamAffine(Rat(1)) + ParamAffine::param("b2")));
}

TEST_CASE("solved relations match the printed solution") {
  ParamAffine c2u4;
  c2u4.constant = Rat(-81, 70);
  c2u4.coeff["d"] = Rat(3, 28);
  c2u4.coeff["ahat"] = Rat(1536, 35);
  c2u4.coeff["u^5"] = Rat(-31, 5);
  CHECK(fs_full().value_of("u^4*c2") == c2u4);
  // And as a pivot-order-independent row-space statement.
  CHECK(fs_full().implies({{"u^4*c2", Rat(1)}, {"u^5", Rat(31, 5)}},
                          c2u4 - ParamAffine::param("u^5", Rat(-31, 5))));
}

namespace {

// reduce(lhs) - rhs must lie in the span of the parameter-constraint rows
// (the system is rank-deficient by the Betti relation).
bool holds_modulo_constraints(const FundamentalSolution& fs, const IndexEquation& eq) {
  ParamAffine diff = fs.reduce(eq.lhs) - eq.rhs;
  if (diff.is_zero()) return true;
  for (const auto& con : fs.sol.constraints) {
    for (const auto& [name, c] : con.coeff) {
      if (c.is_zero()) continue;
      Rat scale = diff.coefficient(name) / c;
      if (!scale.is_zero() && diff == con * scale) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("substituting the solution back makes all equations identities") {
  const auto& fs = fs_full();
  for (const auto& eq : fs.equations) CHECK(holds_modulo_constraints(fs, eq));
}

TEST_CASE("residuals of all genuine sub-middle indices vanish") {
  for (int s = 1; s < 5; s += 2)
    for (int k = 0; k <= s; ++k)
      CHECK(fs_full().reduce(ctx5().index_form(k, s - k)).is_zero());
}

TEST_CASE("the dependent row of the system is the Betti relation") {
  SolveOptions plain;
  plain.with_ahat = false;
  FundamentalSolution fs = solve_fundamental(ctx5(), plain);
  REQUIRE(fs.sol.constraints.size() == 1);
  ParamAffine c = fs.sol.constraints[0];
  // Scale to integers: -4 + 8 b4 + 5 b6 - 4 b8 - 5 b10 = 0.
  Rat scale = Rat(5) / c.coefficient("b6");
  c = c * scale;
  ParamAffine expect;
  expect.constant = Rat(-4);
  expect.coeff["b4"] = Rat(8);
  expect.coeff["b6"] = Rat(5);
  expect.coeff["b8"] = Rat(-4);
  expect.coeff["b10"] = Rat(-5);
  CHECK(c == expect);
}

TEST_CASE("volume parameterization commutes with solving") {
  SolveOptions opt;
  opt.with_ahat = true;
  opt.with_i1np1 = true;
  opt.volume_param = true;
  FundamentalSolution fv = solve_fundamental(ctx5(), opt);
  const auto& fs = fs_full();
  for (const auto& m : ctx5().basis()) {
    if (m == "u^5") continue;
    CHECK(fv.sol.is_free(m) == fs.sol.is_free(m));
    if (!fv.sol.is_free(m)) CHECK(fv.value_of(m) == fs.with_volume(fs.value_of(m)));
  }
}

TEST_CASE("n = 2 toy system") {
  IndexContext ctx(2);
  CHECK(ctx.basis().size() == 4);  // u^2, c2 u, c2^2, c4
  SolveOptions opt;
  opt.with_ahat = false;
  opt.b2_zero = false;
  FundamentalSolution fs = solve_fundamental(ctx, opt);
  CHECK(fs.sol.consistent);
  for (const auto& eq : fs.equations) CHECK(holds_modulo_constraints(fs, eq));
  // The model characteristic numbers: d = dim Sp(3) = 21 by direct pairing.
  Rat d_model(0);
  for (auto& [m, c] : ctx.index_form(0, 4).coeffs) d_model += c;
  CHECK(d_model == Rat(21));
}

TEST_CASE("positivity forms") {
  const auto& fs = fs_full();
  // (k,l,m,n) = (1,0,0,0) and (0,0,0,1) are the pure monomials of the
  // positivity lemma.
  CHECK(positivity_form(fs, Rat(1), Rat(0), Rat(0), Rat(0)) ==
        fs.with_volume(fs.value_of("u*c2^4")));
  CHECK(positivity_form(fs, Rat(0), Rat(0), Rat(0), Rat(1)) ==
        fs.with_volume(fs.value_of("u*c4^2")));
  // (0,1,0,0): the printed c2^2 u^3 bound.
  ParamAffine expect;
  expect.constant = Rat(495392, 35840);
  expect.coeff["d"] = Rat(-14240, 35840);
  expect.coeff["ahat"] = Rat(-35651584, 35840);
  expect.coeff["i16"] = Rat(-1120, 35840);
  expect.coeff["v"] = Rat(707, 35840);
  CHECK(positivity_form(fs, Rat(0), Rat(1), Rat(0), Rat(0)) == expect);
  // (0,0,1,0): u^5 itself.
  ParamAffine u5 = positivity_form(fs, Rat(0), Rat(0), Rat(1), Rat(0));
  CHECK(u5 == ParamAffine::param("v", Rat(1, 1024)));
}

TEST_CASE("parabola apex matches the printed rational function") {
  ParabolaReport pr = parabola_bound(fs_full(), Rat(1053, 32768), Rat(182325, 262144));
  AffineRatio expect;
  expect.num.constant = Rat(41472);
  expect.num.coeff["ahat"] = Rat(-1572864);
  expect.num.coeff["v"] = Rat(217);
  expect.den.coeff["v"] = Rat(35);
  expect.normalize();
  CHECK(pr.apex == expect);
  CHECK(pr.argmax_v == 61);
  CHECK(std::abs(pr.rectangle_max - (-549.348)) < 0.01);
  // Degenerate interval at the upper endpoint with v = 1024 stays far
  // below the printed maximum.
  Rat hi(182325, 262144);
  Rat at = parabola_closed_form(fs_full(), hi, Rat(1024));
  CHECK(at < Rat(-549));
}
