#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pqk/embeddings.hpp"
#include "pqk/lie_atlas.hpp"

using namespace pqk;

TEST_CASE("dimension formulas and normalizations") {
  CHECK(SimpleType{Family::A, 4}.dim() == 24);
  CHECK(SimpleType{Family::B, 4}.dim() == 36);
  CHECK(SimpleType{Family::C, 5}.dim() == 55);
  CHECK(SimpleType{Family::D, 4}.dim() == 28);
  CHECK(G2().dim() == 14);
  CHECK(F4().dim() == 52);
  CHECK(E8().dim() == 248);
  // Exceptional identities collapse to canonical types.
  CHECK(SO(3) == Sp(1));
  CHECK(SO(4) == Sp(1) * Sp(1));
  CHECK(SO(5) == Sp(2));
  CHECK(SO(6) == SU(4));
  CHECK(SO(2) == Torus(1));
  CHECK(SU(2) == Sp(1));
  CHECK(U(1) == Torus(1));
  CHECK((Sp(2) * SU(3)).rank() == 4);
  CHECK((Sp(2) * SU(3)).dim() == 18);
  CHECK(SO(9).str() == "SO(9)");
  CHECK((G2() * Torus(1)).str() == "G2xS1");
}

TEST_CASE("random group-term arithmetic matches factor sums") {
  // dimension/rank arithmetic against a direct sum over the factors.
  unsigned long long s = 12345;
  auto rnd = [&](int lo, int hi) {
    s = s * 6364136223846793005ULL + 1;
    return lo + static_cast<int>((s >> 33) % static_cast<unsigned>(hi - lo + 1));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<SimpleType> fs;
    long long dim = 0;
    int rank = 0;
    int nf = rnd(0, 4);
    for (int i = 0; i < nf; ++i) {
      Family fam = static_cast<Family>(rnd(0, 3));
      int r = rnd(fam == Family::D ? 4 : fam == Family::B ? 3 : 1, 6);
      SimpleType t{fam, r};
      fs.push_back(t);
      dim += t.dim();
      rank += t.rank;
    }
    int torus = rnd(0, 3);
    GroupTerm g(fs, torus);
    CHECK(g.dim() == dim + torus);
    CHECK(g.rank() == rank + torus);
  }
}

TEST_CASE("enumeration completeness against the oracle") {
  for (int max_rank = 1; max_rank <= 4; ++max_rank) {
    EnumOptions o;
    o.max_rank = max_rank;
    o.dim_lo = 1;
    o.dim_hi = 40;
    CHECK(enumerate_groups(o) == enumerate_groups_oracle(o));
    o.dim_mod = {{1, 3}};
    CHECK(enumerate_groups(o) == enumerate_groups_oracle(o));
    o.dim_mod.reset();
    o.allow_torus = false;
    CHECK(enumerate_groups(o) == enumerate_groups_oracle(o));
  }
}

TEST_CASE("rank-1 enumeration") {
  EnumOptions o;
  o.max_rank = 1;
  o.dim_lo = 3;
  o.dim_hi = 3;
  auto got = enumerate_groups(o);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == Sp(1));
}

TEST_CASE("the printed isometry-group table") {
  EnumOptions o;
  o.max_rank = 5;
  o.dim_lo = 15;
  o.dim_hi = 36;
  o.dim_mod = {{1, 7}};
  auto got = enumerate_groups(o);
  CHECK(got.size() == 15);
  std::map<long long, int> by_dim;
  for (const auto& g : got) by_dim[g.dim()]++;
  CHECK(by_dim[15] == 5);
  CHECK(by_dim[22] == 3);
  CHECK(by_dim[29] == 5);
  CHECK(by_dim[36] == 2);
  CHECK(std::count(got.begin(), got.end(), SO(6)) == 1);
  CHECK(std::count(got.begin(), got.end(), G2() * Torus(1)) == 1);
  CHECK(std::count(got.begin(), got.end(), SO(4) * SO(4) * SO(3)) == 1);
  CHECK(std::count(got.begin(), got.end(), Sp(2) * Sp(1) * Torus(2)) == 1);
  CHECK(std::count(got.begin(), got.end(), SU(3) * SO(4) * Torus(1)) == 1);
  CHECK(std::count(got.begin(), got.end(), SO(9)) == 1);
  CHECK(std::count(got.begin(), got.end(), Sp(4)) == 1);
}

TEST_CASE("dimensions modulo 7") {
  auto got = dims_mod(7);
  CHECK(got.at("A1") == 3);
  CHECK(got.at("A5") == 0);
  CHECK(got.at("B4") == 1);
  CHECK(got.at("C3") == 0);
  CHECK(got.at("D4") == 0);
  CHECK(got.at("D2") == 6);
  CHECK(got.at("G2") == 0);
  CHECK(got.at("F4") == 3);
  CHECK(got.size() == 22);
  CHECK_THROWS_AS(dims_mod(1), std::invalid_argument);
}

TEST_CASE("largest semi-simple groups per rank") {
  CHECK(max_dim_per_rank(4).dim == 52);
  CHECK(max_dim_per_rank(4).extremal == std::vector<GroupTerm>{F4()});
  auto r5 = max_dim_per_rank(5);
  CHECK(r5.dim == 55);
  std::vector<GroupTerm> e5 = {Sp(5), F4() * Sp(1), SO(11)};
  std::sort(e5.begin(), e5.end());
  CHECK(r5.extremal == e5);
  auto r11 = max_dim_per_rank(11);
  CHECK(r11.dim == 269);
  std::vector<GroupTerm> e11 = {E8() * Sp(3), E8() * SO(7)};
  std::sort(e11.begin(), e11.end());
  CHECK(r11.extremal == e11);
  // Rank 6 realizes the maximum by three groups; the printed table lists
  // two of them (SO(13) ties and is omitted there).
  auto r6 = max_dim_per_rank(6);
  CHECK(r6.dim == 78);
  std::vector<GroupTerm> e6 = {E6(), Sp(6), SO(13)};
  std::sort(e6.begin(), e6.end());
  CHECK(r6.extremal == e6);
  for (int r = 13; r <= 15; ++r) {
    auto m = max_dim_per_rank(r);
    std::vector<GroupTerm> expect = {Sp(r), SO(2 * r + 1)};
    std::sort(expect.begin(), expect.end());
    CHECK(m.extremal == expect);
  }
}

TEST_CASE("recognition thresholds") {
  CHECK(recognition_threshold(3) == 28);
  CHECK(recognition_threshold(5) == 55);
  CHECK(recognition_threshold(13) == 251);
  CHECK(recognition_threshold(21) == 303);
  CHECK(recognition_threshold(22) == 303);
  CHECK(recognition_threshold(23) == 328);
  CHECK(recognition_threshold(27) == 496);
  CHECK(recognition_threshold(29) == 499);
  CHECK_THROWS_AS(recognition_threshold(2), std::domain_error);
  // Monotone non-decreasing across 4..21.
  for (int n = 4; n < 21; ++n)
    CHECK(recognition_threshold(n) <= recognition_threshold(n + 1));
}

TEST_CASE("survivors above the threshold") {
  auto cmp = [](const GroupTerm& a, const GroupTerm& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  };
  auto s22 = survivors_above_threshold(22);
  std::vector<GroupTerm> e22 = {SO(26), SO(27), Sp(13)};
  std::sort(e22.begin(), e22.end(), cmp);
  CHECK(s22 == e22);
  auto s23 = survivors_above_threshold(23);
  CHECK(s23.size() == 9);
  std::vector<GroupTerm> e23 = {SO(27),          SO(27) * Torus(1), SO(27) * SO(3),
                                SO(28),          SO(29),            Sp(14),
                                Sp(13),          Sp(13) * Torus(1), Sp(13) * Sp(1)};
  std::sort(e23.begin(), e23.end(), cmp);
  CHECK(s23 == e23);
  auto s24 = survivors_above_threshold(24);
  std::vector<GroupTerm> e24 = {SO(28), SO(29), Sp(14)};
  std::sort(e24.begin(), e24.end(), cmp);
  CHECK(s24 == e24);
  CHECK_THROWS_AS(survivors_above_threshold(27), std::invalid_argument);
}

TEST_CASE("Wolf space recognition") {
  Recognition hp = identify_wolf(5, 78);
  CHECK(hp.kind == Recognition::Kind::identified);
  CHECK(hp.space == WolfSpace::HPn);
  Recognition gr = identify_wolf(5, 36);
  CHECK(gr.kind == Recognition::Kind::matches_formula_below_threshold);
  CHECK(gr.space == WolfSpace::GrReal);
  Recognition big = identify_wolf(22, 325);
  CHECK(big.kind == Recognition::Kind::identified);
  CHECK(big.space == WolfSpace::GrReal);
  CHECK(identify_wolf(5, 37).kind == Recognition::Kind::unknown);
  // Complex Grassmannian at n = 5: 48 = 25 + 20 + 3.
  Recognition grc = identify_wolf(5, 48);
  CHECK(grc.space == WolfSpace::GrComplex);
}

TEST_CASE("Wolf isometry dimensions and congruences") {
  WolfDims w5 = wolf_isom_dims(5);
  CHECK(w5.hp == 78);
  CHECK(w5.gr_complex == 48);
  CHECK(w5.gr_real == 36);
  CHECK(w5.hp_congruent);
  CHECK(w5.gr_real_congruent);
  CHECK(wolf_isom_dims(1).hp == 10);
  for (int n = 1; n <= 40; ++n) CHECK(wolf_isom_dims(n).hp_congruent);
  for (int n = 3; n <= 39; n += 2) CHECK(wolf_isom_dims(n).gr_real_congruent);
  CHECK_FALSE(wolf_isom_dims(4).gr_real_congruent);  // 28 = 4 mod 6
}

TEST_CASE("rank-4 stabilizer list of 16 groups") {
  EnumOptions o;
  o.max_rank = 4;
  o.exact_rank = 4;
  o.dim_lo = 18;
  o.dim_hi = 36;
  auto got = enumerate_groups(o);
  CHECK(got.size() == 16);
  std::vector<GroupTerm> expect = {
      SU(5), SO(9), SO(8), Sp(4), Sp(3) * Sp(1), Sp(3) * Torus(1),
      SO(7) * Sp(1), SO(7) * Torus(1), SO(6) * Sp(1), Sp(2) * Sp(2),
      Sp(2) * SU(3), Sp(2) * G2(), G2() * G2(), G2() * SU(3),
      G2() * Sp(1) * Sp(1), G2() * Sp(1) * Torus(1)};
  for (const auto& e : expect)
    CHECK(std::count(got.begin(), got.end(), e) == 1);
}

TEST_CASE("embedding obstructions: printed lemmas") {
  CHECK(embedding_obstructed(SO(7), Sp(5)).verdict == Verdict::obstructed);
  CHECK(embedding_obstructed(SU(5), SO(9)).verdict == Verdict::obstructed);
  CHECK(embedding_obstructed(SU(5), Sp(4)).verdict == Verdict::obstructed);
  CHECK(embedding_obstructed(Sp(2) * SU(3), SO(9)).verdict == Verdict::obstructed);
  CHECK(embedding_obstructed(Sp(2) * SU(3), Sp(4)).verdict == Verdict::obstructed);
  for (int n = 6; n <= 12; ++n)
    CHECK(embedding_obstructed(SO(n + 1), Sp(n)).verdict == Verdict::obstructed);
  // SO(6) ~ SU(4) does include into Sp(5); the lemma's bound n >= 6 is sharp.
  CHECK(embedding_obstructed(SO(6), Sp(5)).verdict == Verdict::chain_found);
}

TEST_CASE("embedding chains: canonical inclusions") {
  CHECK(embedding_obstructed(Sp(4), Sp(5)).verdict == Verdict::chain_found);
  CHECK(embedding_obstructed(Sp(3), Sp(5)).verdict == Verdict::chain_found);
  CHECK(embedding_obstructed(SU(4), Sp(5)).verdict == Verdict::chain_found);
  CHECK(embedding_obstructed(G2(), SO(7)).verdict == Verdict::chain_found);
  CHECK(embedding_obstructed(SU(3), Sp(3)).verdict == Verdict::chain_found);
  CHECK(embedding_obstructed(Sp(2) * Sp(2), Sp(5)).verdict == Verdict::chain_found);
}

TEST_CASE("soundness: blockwise chains are never reported obstructed") {
  unsigned long long s = 777;
  auto rnd = [&](int lo, int hi) {
    s = s * 6364136223846793005ULL + 1;
    return lo + static_cast<int>((s >> 33) % static_cast<unsigned>(hi - lo + 1));
  };
  for (int trial = 0; trial < 300; ++trial) {
    int k = rnd(1, 4), n = k + rnd(0, 3);
    GroupTerm g, h;
    switch (rnd(0, 2)) {
      case 0: g = Sp(k); h = Sp(n); break;
      case 1: g = SO(k + 2); h = SO(n + 2); break;
      default: g = SU(k + 1); h = SU(n + 1); break;
    }
    EmbeddingReport r = embedding_obstructed(g, h);
    CHECK(r.verdict == Verdict::chain_found);
  }
}

TEST_CASE("embedded data dump is nonempty and tagged") {
  auto recs = embedded_data_records();
  CHECK(recs.size() > 30);
  for (const auto& r : recs) {
    CHECK_FALSE(r.tag.empty());
    CHECK_FALSE(r.content.empty());
  }
}
