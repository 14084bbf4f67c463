#pragma once

// The two p-degeneracy maps from level N to level Np, the combined map alpha
// and kernels. Matrices use the row convention: row i is the image of the
// i-th domain basis vector in codomain coordinates.

#include <memory>

#include "bianchi/cohom.hpp"

namespace bianchi {

struct LinMap {
  std::shared_ptr<const CohomSubspace> domain;  // null for the doubled domain of alpha
  std::shared_ptr<const CohomSubspace> codomain;
  MatQ mat;

  int domain_dim() const { return mat.rows(); }
  int codomain_dim() const { return mat.cols(); }
};

// Coordinates in `dst` of the functionals gamma_j -> f_i(phi(gamma_j)), where
// gamma_j runs over the Schreier generators of dst and phi(gamma_j) is given
// as a matrix of the source group. Throws ProjectionFailure.
MatQ pullback_matrix(const CohomSubspace& src, const CohomSubspace& dst, const std::vector<Mat2>& images);

// Throws LevelMismatch unless dst.level = src.level * p for a prime p and
// both spaces share the field and q.
PIdeal level_ratio(const CohomSubspace& src, const CohomSubspace& dst);

LinMap restriction_map(std::shared_ptr<const CohomSubspace> src, std::shared_ptr<const CohomSubspace> dst);
// f -> (gamma -> f(diag(pi, 1) gamma diag(pi, 1)^-1)) with (pi) = p.
LinMap twisted_map(std::shared_ptr<const CohomSubspace> src, std::shared_ptr<const CohomSubspace> dst,
                   const QuadInt& pgen);
// Conjugate [a, b pi; c / pi, d]; throws NonIntegralConjugate.
Mat2 twist_conjugate(const Mat2& g, const QuadInt& pgen);

// (f, g) -> r(f) + t(g), i.e. the rows of r stacked over the rows of t.
LinMap alpha(const LinMap& r, const LinMap& t);
// Reduced echelon basis (rows, domain coordinates) of the kernel.
MatQ kernel(const LinMap& m);

}  // namespace bianchi
