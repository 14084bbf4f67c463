#pragma once

// Hecke operators T_l from the coset representatives [1, k; 0, l] and
// [l, 0; 0, 1], the coset decomposition of Gamma_0(N) over Gamma_0(Np), the
// ray-trivial prime sampler and the Eisenstein (nilpotency) check.

#include <optional>

#include "bianchi/degmaps.hpp"

namespace bianchi {

// Right cosets Gamma_0(level) delta of determinant-l matrices.
struct HeckeCosets {
  PIdeal l;
  PIdeal level;
  QuadInt lambda;           // the generator used in the representatives
  std::vector<Mat2> reps;   // sigma_{k,l} for k in R(O/l), then sigma_l
};

// Throws NotPrime, NotCoprimeToLevel. The representatives are validated to be
// pairwise coset-distinct. lambda defaults to the canonical generator of l.
HeckeCosets hecke_cosets(const PIdeal& l, const PIdeal& level, std::optional<QuadInt> lambda = std::nullopt);

// x y^-1 integral of unit determinant with lower-left entry in level.
bool same_right_coset(const Mat2& x, const Mat2& y, const PIdeal& level);
// Index j with m in Gamma_0(level) reps[j], found directly from the
// columns of m mod l. Throws PermutationFailure.
int coset_index(const HeckeCosets& h, const Mat2& m);
// The same by testing every representative; returns the number of matches
// and stores the last one.
int coset_index_scan(const HeckeCosets& h, const Mat2& m, int* index);
// x * y^-1 for det(y) = lambda, exact. Throws PermutationFailure if not integral.
Mat2 divide_right(const Mat2& x, const Mat2& y, const QuadInt& lambda);

// Right coset representatives of Gamma_0(Np) in Gamma_0(N): [1, 0; k, 1] for
// k in a residue system of O/p inside N, and one [A, B; C, D] with C in N,
// D in p. Validated; throws ConstructionFailure, NotCoprime.
std::vector<Mat2> gamma01_cosets(const PIdeal& N, const PIdeal& p);

// (T_l f)(gamma) = sum_i f(delta_i gamma delta_sigma(i)^-1) on the given space.
// The image is evaluated at the pivot generators and at stability_columns
// further generators (-1: all of them), throwing ProjectionFailure when it
// leaves the space.
LinMap hecke_matrix(const HeckeCosets& h, std::shared_ptr<const CohomSubspace> space, int stability_columns = 16);
LinMap hecke_matrix(const PIdeal& l, std::shared_ptr<const CohomSubspace> space, int stability_columns = 16);

struct RayPrime {
  PIdeal prime;
  QuadInt lambda;  // generator with lambda = 1 mod conductor
  QuadInt unit;    // unit with lambda = unit * canonical generator
};

// Principal primes l not dividing the conductor and not in avoid, with a
// generator congruent to 1 mod the conductor, by increasing norm. Throws
// ExhaustedSearch when fewer than count exist below max_norm.
std::vector<RayPrime> ray_trivial_primes(const PIdeal& conductor, int count, const std::vector<PIdeal>& avoid,
                                         long max_norm);

struct EisensteinReport {
  PIdeal l;
  Int norm;
  int cosets = 0;
  bool stable = false;
  int nilpotency_index = -1;  // -1 when not nilpotent
  bool passed = false;
};

// B: rows spanning a subspace; op: endomorphism in the same coordinates (row
// convention). Checks that B is op-stable and op - (N(l) + 1) is nilpotent on it.
EisensteinReport eisenstein_check(const MatQ& B, const MatQ& op, const PIdeal& l);

}  // namespace bianchi
