#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqk/hilbert.hpp"

using namespace pqk;

TEST_CASE("Clebsch-Gordan coefficients") {
  CGDecomposition m1 = cg_coefficients(1);
  CHECK(m1.coeff == std::vector<Rat>{Rat(1), Rat(-2)});
  CGDecomposition m2 = cg_coefficients(2);
  CHECK(m2.coeff == std::vector<Rat>{Rat(1), Rat(-4), Rat(5)});
  CHECK(m2.rank_residual().is_zero());
  for (int m = 1; m <= 11; ++m) CHECK(cg_coefficients(m).rank_residual().is_zero());
  // m = 5 row: 1, -10, 44, -110, 165, -132.
  CGDecomposition m5 = cg_coefficients(5);
  CHECK(m5.coeff ==
        std::vector<Rat>{Rat(1), Rat(-10), Rat(44), Rat(-110), Rat(165), Rat(-132)});
}

TEST_CASE("pinned Hilbert values") {
  HilbertData h = solve_f_values();
  CHECK(h.values[0] == ParamAffine::param("ahat"));
  CHECK(h.values[1].is_zero());
  CHECK(h.values[3].is_zero());
  CHECK(h.values[5] == ParamAffine(Rat(1)));
  CHECK(h.values[7] == ParamAffine::param("d"));
  // f(2) display.
  ParamAffine f2;
  f2.constant = Rat(-2816, 229376);
  f2.coeff["d"] = Rat(128, 229376);
  f2.coeff["ahat"] = Rat(-360448, 229376);
  f2.coeff["v"] = Rat(-7, 229376);
  CHECK(h.values[2] == f2);
  // f(9) and f(11) displays.
  ParamAffine f9;
  f9.constant = Rat(-10692, 140);
  f9.coeff["d"] = Rat(1760, 140);
  f9.coeff["ahat"] = Rat(262144, 140);
  f9.coeff["v"] = Rat(63, 140);
  CHECK(h.values[9] == f9);
  ParamAffine f11;
  f11.constant = Rat(-9152, 14);
  f11.coeff["d"] = Rat(1144, 14);
  f11.coeff["ahat"] = Rat(262144, 14);
  f11.coeff["v"] = Rat(91, 14);
  CHECK(h.values[11] == f11);
}

TEST_CASE("interpolated polynomial reproduces the values and extends") {
  HilbertData h = solve_f_values();
  CHECK(h.poly.degree() == 11);
  for (int q = 0; q <= 11; ++q) CHECK(h.at(q) == h.values[q]);
  // f(13) evaluable: an affine form with the same parameters.
  ParamAffine f13 = h.at(13);
  CHECK_FALSE(f13.coefficient("d").is_zero());
}

TEST_CASE("bound rows") {
  HilbertData h = solve_f_values();
  auto [f11, b3] = bound_inequalities(h, 3);
  CHECK(b3 == Rat(12376));
  CHECK(f11 == h.values[11]);
  auto [f5, b0] = bound_inequalities(h, 0);
  CHECK(f5 == ParamAffine(Rat(1)));
  CHECK(b0 == Rat(1));  // 0 <= 1 <= 1, vacuous
  CHECK_THROWS_AS(bound_inequalities(h, -1), std::invalid_argument);
}

TEST_CASE("A-hat window") {
  AhatBounds b = ahat_bounds();
  CHECK(b.lower == Rat(1053, 32768));
  CHECK(b.upper == Rat(182325, 262144));
  CHECK(b.lower.to_double() == doctest::Approx(0.032135).epsilon(1e-6));
  CHECK(b.upper.to_double() == doctest::Approx(0.695515).epsilon(1e-6));
  // The v coefficient cancels exactly in the combined inequality.
  CHECK(b.combined.coefficient("v").is_zero());
}

TEST_CASE("congruence enumeration") {
  CongruenceReport c = congruences();
  CHECK(c.matches_conjunction);
  CHECK_FALSE(c.matches_disjunction);
  CHECK(c.residues.size() == 140);  // 20 residues for d times 7 for v
  CHECK(c.residues.count({36 % 140, 24 % 140}) == 1);
  CHECK(c.residues.count({0, 0}) == 0);
}

TEST_CASE("admissible pairs") {
  auto pairs = admissible_pairs();
  CHECK(pairs.size() == 44);
  CHECK(pairs.front() == std::pair<int, int>{15, 4});
  CHECK(pairs.back() == std::pair<int, int>{36, 384});
  int d15 = 0, d22 = 0, d29 = 0, d36 = 0;
  for (auto& [d, v] : pairs) {
    if (d == 15) ++d15;
    if (d == 22) ++d22;
    if (d == 29) ++d29;
    if (d == 36) ++d36;
    CHECK(v % 20 == 4);
    CHECK(11 + 2 * v - d >= 0);
  }
  CHECK(d15 == 4);
  CHECK(d22 == 8);
  CHECK(d29 == 13);
  CHECK(d36 == 19);
  // (22, 4) is excluded by the deficiency bound.
  for (auto& p : pairs) CHECK(p != std::pair<int, int>{22, 4});
}
