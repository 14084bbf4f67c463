#pragma once

// H^1(Gamma_0(n), Z/q) with trivial coefficients, its parabolic subspace and
// the subspace fixed by the unit-determinant matrices diag(u, 1).

#include <memory>
#include <optional>
#include <vector>

#include "bianchi/modlinalg.hpp"
#include "bianchi/schreier.hpp"

namespace bianchi {

class CoefficientModulus {
 public:
  // q must be prime, q >= 5 and coprime to the number of units of the field.
  // Throws BadModulus.
  CoefficientModulus(long q, const Field& f);
  Fq value() const noexcept { return q_; }

 private:
  Fq q_;
};

enum class SpaceKind { Full, Parabolic, ParabolicUnitInvariant };
const char* kind_name(SpaceKind k);

struct CohomSubspace {
  std::shared_ptr<const CongCtx> cc;
  Fq q = 5;
  // rows: functionals on the Schreier generators, reduced echelon
  Echelon basis;
  SpaceKind kind = SpaceKind::Full;

  int dim() const { return basis.mat.rows(); }
  int ambient_dim() const { return cc->num_sgens(); }
  // Coordinates of a functional given by its values on the Schreier
  // generators; false if it lies outside the subspace.
  bool coordinates(const std::vector<Fq>& values, std::vector<Fq>* coords) const {
    return echelon_coordinates(basis, values, coords);
  }
};

struct Cusp {
  QuadInt a, c;      // the point a/c, gcd(a, c) = 1
  Mat2 gmat;         // in SL_2(O), first column (a, c)
  QuadInt width_gen; // generator of (n : c^2)
};

// Reduces integer coefficients mod q.
std::vector<Fq> reduce_row(const IntRow& row, int cols, Fq q);

CohomSubspace h1(std::shared_ptr<const CongCtx> cc, const CoefficientModulus& q);

// One representative per Gamma_0(n)-orbit on P^1(F), ordered by coset index.
std::vector<Cusp> cusps(const CongCtx& cc);
// The cusp a/c with a matrix completing (a, c) to SL_2(O).
Cusp make_cusp(const CongCtx& cc, const QuadInt& a, const QuadInt& c);
// gamma in Gamma_0(n) with gamma(x) = y, or nothing when they are inequivalent.
std::optional<Mat2> cusp_equivalence(const CongCtx& cc, const Cusp& x, const Cusp& y);
// The two unipotent generators g [1, t; 0, 1] g^-1, t in {xi, xi*w}.
std::vector<Mat2> parabolic_elements(const CongCtx& cc, const Cusp& c);

CohomSubspace parabolic(const CohomSubspace& full);
CohomSubspace parabolic(const CohomSubspace& full, const std::vector<Cusp>& reps);

// Matrix (row convention) of f -> (gamma -> f(D gamma D^-1)), D = diag(u, 1),
// on the coordinates of the given subspace. Throws ProjectionFailure if the
// subspace is not stable.
MatQ unit_conjugation_operator(const CohomSubspace& space, const QuadInt& u);
CohomSubspace unit_invariants(const CohomSubspace& space);

// Values of every basis functional on m. Throws NotInSubgroup.
std::vector<Fq> evaluate_basis(const CohomSubspace& space, const Mat2& m);
Fq evaluate(const std::vector<Fq>& functional, const CohomSubspace& space, const Mat2& m);

// Values of every basis functional on an abelianized expression.
std::vector<Fq> apply_basis(const CohomSubspace& space, const IntRow& expr);

}  // namespace bianchi
