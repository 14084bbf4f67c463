#include "bianchi/hecke.hpp"

#include <algorithm>

namespace bianchi {

namespace {

bool exact_div(const QuadInt& x, const QuadInt& by, QuadInt* out) {
  if (x.is_zero()) {
    *out = x;
    return true;
  }
  return by.divides_into(x, out);
}

}  // namespace

Mat2 divide_right(const Mat2& x, const Mat2& y, const QuadInt& lambda) {
  Mat2 p = x * y.adjugate();
  Mat2 out;
  if (!exact_div(p.a, lambda, &out.a) || !exact_div(p.b, lambda, &out.b) || !exact_div(p.c, lambda, &out.c) ||
      !exact_div(p.d, lambda, &out.d))
    throw Error(Errc::PermutationFailure, to_string(x) + " is not in the coset of " + to_string(y));
  return out;
}

bool same_right_coset(const Mat2& x, const Mat2& y, const PIdeal& level) {
  const Field& f = level.field();
  QuadInt dy = y.det();
  Mat2 p = x * y.adjugate();
  Mat2 z;
  if (!exact_div(p.a, dy, &z.a) || !exact_div(p.b, dy, &z.b) || !exact_div(p.c, dy, &z.c) ||
      !exact_div(p.d, dy, &z.d))
    return false;
  return f.is_unit(z.det()) && level.contains(z.c);
}

HeckeCosets hecke_cosets(const PIdeal& l, const PIdeal& level, std::optional<QuadInt> lambda) {
  if (!is_prime(l)) throw Error(Errc::NotPrime, to_string(l));
  if (!coprime(l, level)) throw Error(Errc::NotCoprimeToLevel, to_string(l) + " divides " + to_string(level));
  const Field& f = l.field();
  HeckeCosets h{l, level, lambda.value_or(l.gen()), {}};
  if (PIdeal(f, h.lambda) != l) throw Error(Errc::NotPrime, to_string(h.lambda) + " does not generate " + to_string(l));
  for (const QuadInt& k : ResidueSystem(l).reps()) h.reps.push_back({f.one(), k, f.zero(), h.lambda});
  h.reps.push_back({h.lambda, f.zero(), f.zero(), f.one()});
  for (std::size_t i = 0; i < h.reps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (same_right_coset(h.reps[i], h.reps[j], level))
        throw Error(Errc::InternalError, "Hecke representatives " + std::to_string(j) + " and " + std::to_string(i) +
                                             " share a coset");
  return h;
}

int coset_index(const HeckeCosets& h, const Mat2& m) {
  const Field& f = h.l.field();
  const int last = static_cast<int>(h.reps.size()) - 1;
  if (h.l.contains(m.a) && h.l.contains(m.c)) return last;
  // the columns of m are proportional mod l; m [1, k; 0, l]^-1 is integral
  // iff (b, d) = k (a, c) mod l
  const bool use_a = !h.l.contains(m.a);
  XGcd e = f.xgcd(use_a ? m.a : m.c, h.lambda);
  if (!e.g.is_one()) throw Error(Errc::PermutationFailure, to_string(m));
  ResidueSystem R(h.l);
  return static_cast<int>(R.index((use_a ? m.b : m.d) * e.s));
}

int coset_index_scan(const HeckeCosets& h, const Mat2& m, int* index) {
  int hits = 0;
  for (std::size_t j = 0; j < h.reps.size(); ++j)
    if (same_right_coset(m, h.reps[j], h.level)) {
      ++hits;
      if (index) *index = static_cast<int>(j);
    }
  return hits;
}

std::vector<Mat2> gamma01_cosets(const PIdeal& N, const PIdeal& p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, to_string(p));
  if (!coprime(N, p)) throw Error(Errc::NotCoprime, to_string(p) + " divides " + to_string(N));
  const Field& f = N.field();
  std::vector<Mat2> out;
  for (const QuadInt& k : prime_residue_reps_in_ideal(p, N)) out.push_back({f.one(), f.zero(), k, f.one()});
  // C in N and D in p coprime: C = n, D = pi, then A D - B C = 1
  const QuadInt& C = N.gen();
  const QuadInt& D = p.gen();
  XGcd e = f.xgcd(D, C);
  if (!e.g.is_one()) throw Error(Errc::ConstructionFailure, "C and D are not coprime");
  out.push_back({e.s, -e.t, C, D});
  PIdeal Np = N * p;
  for (const Mat2& m : out)
    if (!m.det().is_one() || !N.contains(m.c)) throw Error(Errc::ConstructionFailure, to_string(m));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (same_right_coset(out[i], out[j], Np)) throw Error(Errc::ConstructionFailure, "repeated coset");
  return out;
}

LinMap hecke_matrix(const HeckeCosets& h, std::shared_ptr<const CohomSubspace> space, int stability_columns) {
  const CongCtx& cc = *space->cc;
  if (h.level != cc.level()) throw Error(Errc::LevelMismatch, "Hecke cosets built for another level");
  if (!coprime(h.l, cc.level())) throw Error(Errc::NotCoprimeToLevel, to_string(h.l));
  const int k = space->dim(), n = space->ambient_dim();
  MatQ out(space->q, k, k);
  if (k == 0) return {space, space, std::move(out)};

  // A functional in the (reduced echelon) space is determined by its values at
  // the pivot columns; the remaining evaluated columns test stability.
  const std::vector<int>& piv = space->basis.pivots;
  std::vector<int> cols = piv;
  std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<int> rest;
  for (int j = 0; j < n; ++j)
    if (!is_piv[static_cast<std::size_t>(j)]) rest.push_back(j);
  const int extra = stability_columns < 0 ? static_cast<int>(rest.size())
                                          : std::min(stability_columns, static_cast<int>(rest.size()));
  for (int t = 0; t < extra; ++t)
    cols.push_back(rest[static_cast<std::size_t>(static_cast<long>(t) * static_cast<long>(rest.size()) / extra)]);

  MatQ values(space->q, k, static_cast<int>(cols.size()));
  for (std::size_t jj = 0; jj < cols.size(); ++jj) {
    const Mat2& g = cc.sgen(cols[jj]).matrix;
    IntRow expr;
    for (const Mat2& delta : h.reps) {
      Mat2 m = delta * g;
      int s = coset_index(h, m);
      Mat2 inner = divide_right(m, h.reps[static_cast<std::size_t>(s)], h.lambda);
      if (!cc.membership(inner)) throw Error(Errc::PermutationFailure, to_string(inner));
      IntRow e = cc.express(inner);
      expr.insert(expr.end(), e.begin(), e.end());
    }
    merge_terms(expr);
    std::vector<Fq> v = apply_basis(*space, expr);
    for (int i = 0; i < k; ++i) values(i, static_cast<int>(jj)) = v[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < k; ++r) out(i, r) = values(i, r);
  const MatQ predicted = out * space->basis.mat;
  for (int i = 0; i < k; ++i)
    for (std::size_t jj = piv.size(); jj < cols.size(); ++jj)
      if (predicted(i, cols[jj]) != values(i, static_cast<int>(jj)))
        throw Error(Errc::ProjectionFailure, "T_l image leaves the subspace");
  return {space, space, std::move(out)};
}

LinMap hecke_matrix(const PIdeal& l, std::shared_ptr<const CohomSubspace> space, int stability_columns) {
  HeckeCosets h = hecke_cosets(l, space->cc->level());
  return hecke_matrix(h, std::move(space), stability_columns);
}

std::vector<RayPrime> ray_trivial_primes(const PIdeal& conductor, int count, const std::vector<PIdeal>& avoid,
                                         long max_norm) {
  const Field& f = conductor.field();
  std::vector<RayPrime> out;
  if (count < 1) return out;
  for (const PIdeal& P : primes_up_to(f, max_norm)) {
    if (!coprime(P, conductor)) continue;
    if (std::find(avoid.begin(), avoid.end(), P) != avoid.end()) continue;
    for (const QuadInt& u : f.units()) {
      QuadInt lambda = u * P.gen();
      if (conductor.contains(lambda - f.one())) {
        out.push_back({P, lambda, u});
        break;
      }
    }
    if (static_cast<int>(out.size()) == count) return out;
  }
  throw Error(Errc::ExhaustedSearch, "only " + std::to_string(out.size()) + " ray-trivial primes of norm <= " +
                                         std::to_string(max_norm) + " for conductor " + to_string(conductor));
}

EisensteinReport eisenstein_check(const MatQ& B, const MatQ& op, const PIdeal& l) {
  EisensteinReport r;
  r.l = l;
  r.norm = l.norm();
  r.cosets = static_cast<int>(r.norm.get_si()) + 1;
  const int m = B.rows();
  if (m == 0) {
    r.stable = true;
    r.nilpotency_index = 0;
    r.passed = true;
    return r;
  }
  const Fq q = B.q();
  Echelon e = rref(B);
  if (static_cast<int>(e.pivots.size()) != m) throw Error(Errc::ShapeMismatch, "B must have independent rows");
  MatQ image = B * op;
  MatQ R(q, m, m);
  // coordinates w.r.t. the rows of B: solve through the echelon basis
  // B = X E, image_i = Y_i E, so image_i = Y_i X^-1 B.
  MatQ X(q, m, m), Y(q, m, m);
  for (int i = 0; i < m; ++i) {
    std::vector<Fq> cb, ci;
    echelon_coordinates(e, B.row_vector(i), &cb);
    if (!echelon_coordinates(e, image.row_vector(i), &ci)) return r;  // not stable
    for (int j = 0; j < m; ++j) {
      X(i, j) = cb[static_cast<std::size_t>(j)];
      Y(i, j) = ci[static_cast<std::size_t>(j)];
    }
  }
  r.stable = true;
  // X invertible: invert by row reduction of [X | I]
  Echelon inv = rref(hstack(X, MatQ::identity(q, m)));
  MatQ Xinv(q, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) Xinv(i, j) = inv.mat(i, m + j);
  R = Y * Xinv;
  Int cm = (r.norm + 1) % Int(static_cast<unsigned long>(q));
  Fq c = static_cast<Fq>(cm.get_ui());
  MatQ S = R;
  for (int i = 0; i < m; ++i) S(i, i) = (S(i, i) + q - c) % q;
  MatQ P = MatQ::identity(q, m);
  for (int k = 1; k <= m; ++k) {
    P = P * S;
    if (P.is_zero()) {
      r.nilpotency_index = k;
      r.passed = true;
      return r;
    }
  }
  return r;
}

}  // namespace bianchi
