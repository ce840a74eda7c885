#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pqk/special_cases.hpp"

using namespace pqk;

TEST_CASE("dimension-16 search") {
  Dim16Report r = dim16_search();

  // The full system pins every characteristic number as a rational
  // function of x and cuts x by x^2 - 5x + 4 (roots: the two model
  // geometries).
  CHECK(r.consistency == UniPoly(std::vector<Rat>{Rat(4), Rat(-5), Rat(1)}));
  CHECK(r.d_of_x.eval(Rat(1)) == Rat(55));    // quaternionic projective model
  CHECK(r.d_of_x.eval(Rat(4)) == Rat(28));    // real Grassmannian model
  CHECK(r.v_of_x.eval(Rat(1)) == Rat(256));
  CHECK(r.v_of_x.eval(Rat(4)) == Rat(84));
  CHECK(r.b4_of_x.eval(Rat(1)) == Rat(1));
  CHECK(r.b4_of_x.eval(Rat(4)) == Rat(3));

  // Printed relations validated against the derivation.
  CHECK(r.volume_identity);          // d = 7 + v/6 + vx/48, exact in Q(x)
  CHECK(r.b4_identity_on_variety);   // printed b4 modulo the consistency poly
  CHECK(r.printed_d_at_admissible);
  CHECK(r.d_printed.eval(Rat(4)) == Rat(28));

  CHECK(r.derived_hits == std::vector<long>{4});
  CHECK(r.printed_hits == std::vector<long>{4});
  CHECK(r.x == 4);
  CHECK(r.d == Rat(28));
  CHECK(r.v == Rat(84));
  CHECK(r.b4 == Rat(3));

  // Derived Betti data at x = 4 and the branch family.
  CHECK(r.b6_of_x.eval(Rat(4)) == Rat(0));
  CHECK(r.b8_of_x.eval(Rat(4)) == Rat(4));
  CHECK(r.c4u2_of_x.eval(Rat(4)) == Rat(51, 32));
  CHECK(r.c4sq_of_x.eval(Rat(4)) == Rat(453, 16));
  CHECK(r.family_passes_derived_point);

  REQUIRE(r.branches.size() == 2);
  const Dim16Branch* b323 = nullptr;
  const Dim16Branch* b304 = nullptr;
  for (const auto& b : r.branches) {
    if (b.b6 == 2 && b.b8 == 3) b323 = &b;
    if (b.b6 == 0 && b.b8 == 4) b304 = &b;
  }
  REQUIRE(b323 != nullptr);
  REQUIRE(b304 != nullptr);
  CHECK(b323->c4u2 == Rat(27, 32));
  CHECK(b323->c4sq == Rat(-75, 16));
  CHECK_FALSE(b323->positive);
  CHECK(b304->c4u2 == Rat(51, 32));
  CHECK(b304->c4sq == Rat(453, 16));
  CHECK(b304->positive);
  REQUIRE(r.survivor.has_value());
  CHECK(r.survivor->b6 == 0);
  CHECK(r.survivor->b8 == 4);
}

TEST_CASE("all-ones characteristic numbers") {
  AllOnesCheck c5 = scalar_all_ones(5);
  CHECK(c5.zeros_ok);
  CHECK(c5.middle_ok);
  CHECK(c5.d == Rat(78));
  REQUIRE(c5.betti.size() == 4);
  CHECK(c5.betti[0] == std::pair<std::string, Rat>{"b4", Rat(1)});
  CHECK(c5.betti[1].second == Rat(0));
  CHECK(c5.betti[2].second == Rat(1));
  CHECK(c5.betti[3].second == Rat(0));

  AllOnesCheck c4 = scalar_all_ones(4);
  CHECK(c4.zeros_ok);
  CHECK(c4.middle_ok);
  CHECK(c4.d == Rat(55));

  // n = 2: the model datum d = dim Sp(3) = 21.
  AllOnesCheck c2 = scalar_all_ones(2);
  CHECK(c2.zeros_ok);
  CHECK(c2.middle_ok);
  CHECK(c2.d == Rat(21));
}

TEST_CASE("b4 = 1 branches at n = 5 and n = 4") {
  BranchReport r5 = scalar_b4_one_branches(5);
  REQUIRE(r5.integral_branches.size() == 1);
  const ScalarBranch& b = r5.integral_branches[0];
  CHECK(b.x_rational);
  CHECK(b.x_exact == Rat(1));
  CHECK(b.d_exact == Rat(78));
  CHECK(b.un_exact == Rat(1));
  REQUIRE(b.betti_exact.size() == 4);
  CHECK(b.betti_exact[0].second == Rat(1));   // b4
  CHECK(b.betti_exact[1].second == Rat(0));   // b6
  CHECK(b.betti_exact[2].second == Rat(1));   // b8
  CHECK(b.betti_exact[3].second == Rat(0));   // b10

  BranchReport r4 = scalar_b4_one_branches(4);
  REQUIRE(r4.integral_branches.size() == 1);
  CHECK(r4.integral_branches[0].d_exact == Rat(55));
  CHECK(r4.integral_branches[0].un_exact == Rat(1));
}

TEST_CASE("rationalize") {
  CHECK(rationalize(0.5) == Rat(1, 2));
  CHECK(rationalize(244724.0 / 2891.0) == Rat(244724, 2891));
  CHECK(rationalize(1.0) == Rat(1));
  CHECK_FALSE(rationalize(std::sqrt(2.0), 100).has_value());
}

TEST_CASE("dimension-24 recognition") {
  Dim24Report r = dim24_b4_one(true);
  CHECK(r.branch_a == Rat(244724, 2891));
  CHECK_FALSE(r.branch_a.is_integer());
  CHECK(r.branch_b == Rat(105));
  // 105 is independently re-derived: from the b4 = 1 elimination and from
  // the all-ones characteristic numbers (dim Sp(7)).
  CHECK(r.branch_b_derived);
  CHECK(r.all_ones_d_105);

  // Printed roots to 1e-6, ordering by real then imaginary part.
  REQUIRE(r.roots.size() == 7);
  std::vector<std::complex<double>> expect = {
      {-10.15093795, -2.570319306}, {-10.15093795, 2.570319306}, {-3.679678028, 0},
      {2.156753156, 0},             {7.720829360, 0},            {11.12408307, 0},
      {15.23992325, 0}};
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(std::abs(r.roots[i].z - expect[i]) < 1e-6);
    CHECK(r.roots[i].is_real == (expect[i].imag() == 0.0));
  }
  CHECK(root_residual(r.degree7, r.roots) < 1e-9);

  // Exhaustive sweep over 7^6 combinations: nothing integral. The closest
  // approach (repeated real roots) stays three orders above the numerical
  // error; over distinct root choices the gap exceeds 1e-4 comfortably.
  CHECK(r.combinations == 117649);
  CHECK(r.sweep_min_distance > 1e-7);
  CHECK(r.sweep_min_distance < 1e-4);  // the near-integer combination is real
  CHECK(r.sweep_min_distinct > 1e-4);
  CHECK(r.sweep_min_diagonal > 1e-4);
}
