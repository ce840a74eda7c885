#ifndef PQK_ROOTS_HPP
#define PQK_ROOTS_HPP

#include <complex>
#include <vector>

#include "pqk/unipoly.hpp"

namespace pqk {

struct Root {
  std::complex<double> z;
  bool is_real = false;
};

/// All complex roots of p to roughly `digits` significant decimal digits
/// (capped by double precision), ordered by ascending real part, then
/// imaginary part. Real roots are flagged; conjugate pairs are symmetrized.
/// A constant polynomial yields the empty sequence.
std::vector<Root> real_roots(const UniPoly& p, int digits = 12);

/// Max |p(z)| over the reported roots, relative to the 1-norm of the
/// coefficients; used by the accuracy contract.
double root_residual(const UniPoly& p, const std::vector<Root>& roots);

}  // namespace pqk

#endif
