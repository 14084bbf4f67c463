#include "bianchi/degmaps.hpp"

namespace bianchi {

MatQ pullback_matrix(const CohomSubspace& src, const CohomSubspace& dst, const std::vector<Mat2>& images) {
  const int k = src.dim(), n = dst.ambient_dim();
  if (static_cast<int>(images.size()) != n) throw Error(Errc::ShapeMismatch, "one image per generator");
  MatQ values(src.q, k, n);
  if (k > 0)
    for (int j = 0; j < n; ++j) {
      std::vector<Fq> v = evaluate_basis(src, images[static_cast<std::size_t>(j)]);
      for (int i = 0; i < k; ++i) values(i, j) = v[static_cast<std::size_t>(i)];
    }
  MatQ out(src.q, k, dst.dim());
  for (int i = 0; i < k; ++i) {
    std::vector<Fq> coords;
    if (!dst.coordinates(values.row_vector(i), &coords))
      throw Error(Errc::ProjectionFailure, "image of basis vector " + std::to_string(i) + " is outside the target");
    for (int j = 0; j < dst.dim(); ++j) out(i, j) = coords[static_cast<std::size_t>(j)];
  }
  return out;
}

PIdeal level_ratio(const CohomSubspace& src, const CohomSubspace& dst) {
  const PIdeal& N = src.cc->level();
  const PIdeal& M = dst.cc->level();
  if (N.d() != M.d() || src.q != dst.q) throw Error(Errc::LevelMismatch, "field or modulus differs");
  QuadInt p;
  if (!N.gen().divides_into(M.gen(), &p)) throw Error(Errc::LevelMismatch, to_string(N) + " does not divide " + to_string(M));
  PIdeal P(N.field(), p);
  if (!is_prime(P)) throw Error(Errc::LevelMismatch, to_string(M) + " / " + to_string(N) + " is not prime");
  return P;
}

LinMap restriction_map(std::shared_ptr<const CohomSubspace> src, std::shared_ptr<const CohomSubspace> dst) {
  level_ratio(*src, *dst);
  std::vector<Mat2> images;
  for (const SchreierGen& g : dst->cc->sgens()) images.push_back(g.matrix);
  MatQ m = pullback_matrix(*src, *dst, images);
  return {std::move(src), std::move(dst), std::move(m)};
}

Mat2 twist_conjugate(const Mat2& g, const QuadInt& pgen) {
  QuadInt c;
  if (!pgen.divides_into(g.c, &c)) throw Error(Errc::NonIntegralConjugate, to_string(g));
  return {g.a, g.b * pgen, c, g.d};
}

LinMap twisted_map(std::shared_ptr<const CohomSubspace> src, std::shared_ptr<const CohomSubspace> dst,
                   const QuadInt& pgen) {
  PIdeal P = level_ratio(*src, *dst);
  if (PIdeal(P.field(), pgen) != P) throw Error(Errc::LevelMismatch, to_string(pgen) + " does not generate the level ratio");
  std::vector<Mat2> images;
  for (const SchreierGen& g : dst->cc->sgens()) images.push_back(twist_conjugate(g.matrix, pgen));
  MatQ m = pullback_matrix(*src, *dst, images);
  return {std::move(src), std::move(dst), std::move(m)};
}

LinMap alpha(const LinMap& r, const LinMap& t) {
  if (r.mat.cols() != t.mat.cols() || r.mat.rows() != t.mat.rows() || r.mat.q() != t.mat.q())
    throw Error(Errc::ShapeMismatch, "alpha needs maps with equal shapes");
  return {nullptr, r.codomain, vstack(r.mat, t.mat)};
}

MatQ kernel(const LinMap& m) {
  if (m.mat.rows() == 0) return MatQ(m.mat.q(), 0, 0);
  if (m.mat.cols() == 0) return MatQ::identity(m.mat.q(), m.mat.rows());
  return left_kernel_basis(m.mat);
}

}  // namespace bianchi
