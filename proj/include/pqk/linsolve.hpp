#ifndef PQK_LINSOLVE_HPP
#define PQK_LINSOLVE_HPP

#include <map>
#include <string>
#include <vector>

#include "pqk/affine.hpp"

namespace pqk {

/// Result of exact Gauss-Jordan elimination of A x = rhs where the right
/// hand sides are affine forms in named parameters. Unknowns that end up
/// without a pivot are reported free; every basic unknown is expressed as
/// an affine form in the parameters plus the free unknowns (free unknowns
/// enter under their own names).
template <class K>
struct ParametricSolutionT {
  bool consistent = true;
  /// Rows that reduced to 0 = nonzero affine form; with purely numeric
  /// right hand sides this means infeasibility, with parameters it is a
  /// constraint the parameters must satisfy.
  std::vector<AffineT<K>> constraints;
  int conflict_row = -1;  // index of a contradictory row when !consistent
  std::map<std::string, AffineT<K>> basic;
  std::vector<std::string> free_unknowns;

  const AffineT<K>& expression_of(const std::string& unknown) const {
    auto it = basic.find(unknown);
    if (it == basic.end())
      throw std::invalid_argument("ParametricSolution: not a basic unknown: " + unknown);
    return it->second;
  }
  bool is_free(const std::string& unknown) const {
    for (auto& f : free_unknowns)
      if (f == unknown) return true;
    return false;
  }
  /// Expression of an unknown whether basic or free.
  AffineT<K> value_of(const std::string& unknown) const {
    if (is_free(unknown)) return AffineT<K>::param(unknown);
    return expression_of(unknown);
  }
  /// Substitute the solution into a row given as unknown->coefficient,
  /// yielding an affine form in parameters and free unknowns.
  AffineT<K> reduce(const std::map<std::string, K>& row) const {
    AffineT<K> acc;
    for (auto& [name, c] : row) acc += value_of(name) * c;
    return acc;
  }
};

using ParametricSolution = ParametricSolutionT<Rat>;

/// Exact reduced-row-echelon solve. Pivoting is deterministic: scan columns
/// left to right in the order given by `unknowns`, take the first row with
/// a nonzero entry. Never pivots on a parameter (parameters live only in
/// the affine right hand sides).
template <class K>
ParametricSolutionT<K> solve_parametric(std::vector<std::vector<K>> a,
                                        std::vector<AffineT<K>> rhs,
                                        const std::vector<std::string>& unknowns) {
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(unknowns.size());
  for (auto& r : a)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("solve_parametric: ragged matrix");
  if (static_cast<int>(rhs.size()) != rows)
    throw std::invalid_argument("solve_parametric: rhs size mismatch");

  ParametricSolutionT<K> out;
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<int> pivot_row_of_col(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r)
      if (!(a[r][col] == K{})) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(a[sel], a[rank]);
    std::swap(rhs[sel], rhs[rank]);
    K inv = K(1) / a[rank][col];
    for (int j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
    rhs[rank] = rhs[rank] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == K{}) continue;
      K f = a[r][col];
      for (int j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
      rhs[r] -= rhs[rank] * f;
    }
    pivot_col_of_row[rank] = col;
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (rhs[r].is_zero()) continue;
    out.constraints.push_back(rhs[r]);
    if (rhs[r].is_constant()) {
      out.consistent = false;
      if (out.conflict_row < 0) out.conflict_row = r;
    }
  }
  for (int col = 0; col < cols; ++col)
    if (pivot_row_of_col[col] < 0) out.free_unknowns.push_back(unknowns[col]);
  for (int r = 0; r < rank; ++r) {
    int pc = pivot_col_of_row[r];
    AffineT<K> expr = rhs[r];
    for (int j = pc + 1; j < cols; ++j) {
      if (a[r][j] == K{}) continue;
      expr -= AffineT<K>::param(unknowns[j]) * a[r][j];
    }
    out.basic[unknowns[pc]] = expr;
  }
  return out;
}

}  // namespace pqk

#endif
