#ifndef PQK_LIE_ATLAS_HPP
#define PQK_LIE_ATLAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pqk {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

/// Simple compact Lie group up to finite coverings, by type and rank.
struct SimpleType {
  Family family;
  int rank = 0;

  long long dim() const;
  std::string str() const;  // SU(n+1), SO(2n+1), Sp(n), SO(2n), G2, ...

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Exceptional low-rank identities collapse to canonical representatives:
/// B1 = C1 = A1, B2 -> C2, D2 -> A1 + A1, D3 -> A3, D1 -> circle.
/// Returns the canonical factors plus how much torus rank fell out.
std::pair<std::vector<SimpleType>, int> canonicalize(const SimpleType& t);

/// Product of simple factors and a torus, canonically normalized and
/// sorted. Identified up to finite coverings.
struct GroupTerm {
  std::vector<SimpleType> factors;
  int torus_rank = 0;

  GroupTerm() = default;
  GroupTerm(std::vector<SimpleType> fs, int torus);

  int rank() const;
  long long dim() const;
  bool is_simple() const { return factors.size() == 1 && torus_rank == 0; }
  std::string str() const;

  GroupTerm operator*(const GroupTerm& o) const;

  friend auto operator<=>(const GroupTerm&, const GroupTerm&) = default;
};

// Constructors with the classical normalizations applied.
GroupTerm SO(int n);
GroupTerm SU(int n);
GroupTerm Sp(int n);
GroupTerm U(int n);
GroupTerm G2();
GroupTerm F4();
GroupTerm E6();
GroupTerm E7();
GroupTerm E8();
GroupTerm Torus(int rank);

struct EnumOptions {
  int max_rank = 0;
  long long dim_lo = 0;
  long long dim_hi = 0;
  std::optional<std::pair<int, int>> dim_mod;  // (residue, modulus)
  bool allow_torus = true;
  std::optional<int> exact_rank;
};

/// All group terms meeting the constraints, canonically sorted (by
/// dimension, then rank, then factors).
std::vector<GroupTerm> enumerate_groups(const EnumOptions& opt);

/// Independent enumeration oracle (different generation order) for the
/// completeness property test.
std::vector<GroupTerm> enumerate_groups_oracle(const EnumOptions& opt);

/// Residues of dim modulo m for the families A..D at rank 1..5 plus G2 and
/// F4, keyed like the printed table.
std::map<std::string, int> dims_mod(int m);

struct MaxDimResult {
  long long dim = 0;
  std::vector<GroupTerm> extremal;  // semi-simple, rank <= r
};

MaxDimResult max_dim_per_rank(int r);

/// Largest dimension of a semi-simple group of rank <= r containing at
/// least one exceptional factor (used at n = 21).
long long max_dim_with_exceptional(int r);

/// Isometry-dimension threshold above which the recognition theorem
/// identifies the manifold; n >= 3.
long long recognition_threshold(int n);

enum class WolfSpace { HPn, GrComplex, GrReal };

struct Recognition {
  enum class Kind { identified, matches_formula_below_threshold, unknown } kind;
  std::optional<WolfSpace> space;
};

Recognition identify_wolf(int n, long long isom_dim);

/// Isometry-group dimensions of the three infinite Wolf series, plus the
/// mod-(n+2) congruence checks. The real-Grassmannian congruence holds for
/// odd n only (even n is a counterexample to the printed claim).
struct WolfDims {
  long long hp, gr_complex, gr_real;
  bool hp_congruent;       // hp = 1 mod n+2
  bool gr_real_congruent;  // gr_real = 1 mod n+2
};

WolfDims wolf_isom_dims(int n);

/// Isometry groups above the threshold for n >= 22, n not in {27, 28}:
/// rank <= ceil(n/2)+2 and dim > (n^2+5n+12)/2.
std::vector<GroupTerm> survivors_above_threshold(int n);

}  // namespace pqk

#endif
