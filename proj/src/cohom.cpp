#include "bianchi/cohom.hpp"

#include <deque>
#include <numeric>

namespace bianchi {

CoefficientModulus::CoefficientModulus(long q, const Field& f) : q_(0) {
  if (q < 5 || q >= (1L << 31) || !is_prime_u64(static_cast<std::uint64_t>(q)))
    throw Error(Errc::BadModulus, "q = " + std::to_string(q) + " must be a prime >= 5 with q not dividing 6");
  long nu = static_cast<long>(f.units().size());
  if (std::gcd(q, nu) != 1)
    throw Error(Errc::BadModulus, "q = " + std::to_string(q) + " is not coprime to the number of units");
  q_ = static_cast<Fq>(q);
}

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Full: return "full";
    case SpaceKind::Parabolic: return "parabolic";
    case SpaceKind::ParabolicUnitInvariant: return "parabolic-unit-invariant";
  }
  return "?";
}

std::vector<Fq> reduce_row(const IntRow& row, int cols, Fq q) {
  std::vector<Fq> v(static_cast<std::size_t>(cols), 0);
  const long long qq = q;
  for (const auto& [c, x] : row) {
    long long m = x % qq;
    if (m < 0) m += qq;
    v[static_cast<std::size_t>(c)] = static_cast<Fq>((v[static_cast<std::size_t>(c)] + m) % qq);
  }
  return v;
}

std::vector<Fq> apply_basis(const CohomSubspace& space, const IntRow& expr) {
  const long long q = space.q;
  std::vector<Fq> out(static_cast<std::size_t>(space.dim()), 0);
  for (int i = 0; i < space.dim(); ++i) {
    const Fq* f = space.basis.mat.row(i);
    long long s = 0;
    for (const auto& [c, x] : expr) {
      Fq fc = f[c];
      if (!fc) continue;
      long long m = x % q;
      if (m < 0) m += q;
      s = (s + m * fc) % q;
    }
    out[static_cast<std::size_t>(i)] = static_cast<Fq>(s);
  }
  return out;
}

std::vector<Fq> evaluate_basis(const CohomSubspace& space, const Mat2& m) {
  return apply_basis(space, space.cc->express(m));
}

Fq evaluate(const std::vector<Fq>& functional, const CohomSubspace& space, const Mat2& m) {
  if (static_cast<int>(functional.size()) != space.ambient_dim())
    throw Error(Errc::ShapeMismatch, "functional length");
  const long long q = space.q;
  long long s = 0;
  for (const auto& [c, x] : space.cc->express(m)) {
    long long v = x % q;
    if (v < 0) v += q;
    s = (s + v * functional[static_cast<std::size_t>(c)]) % q;
  }
  return static_cast<Fq>(s);
}

CohomSubspace h1(std::shared_ptr<const CongCtx> cc, const CoefficientModulus& modulus) {
  const Fq q = modulus.value();
  std::vector<SparseRow> rows;
  for (const IntRow& r : cc->relator_matrix()) {
    SparseRow s;
    for (const auto& [c, x] : r) {
      long long m = x % static_cast<long long>(q);
      if (m < 0) m += q;
      if (m) s.emplace_back(c, static_cast<Fq>(m));
    }
    if (!s.empty()) rows.push_back(std::move(s));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  MatQ k = sparse_kernel_basis(q, cc->num_sgens(), std::move(rows));
  CohomSubspace out;
  out.cc = std::move(cc);
  out.q = q;
  out.basis = rref(std::move(k));
  out.kind = SpaceKind::Full;
  return out;
}

Cusp make_cusp(const CongCtx& cc, const QuadInt& a, const QuadInt& c) {
  const Field& f = cc.field();
  XGcd e = f.xgcd(a, c);
  if (!e.g.is_one()) throw Error(Errc::NotCoprime, "cusp " + to_string(a) + " / " + to_string(c));
  Cusp out;
  out.a = a;
  out.c = c;
  out.gmat = {a, -e.t, c, e.s};
  out.width_gen = ideal_quotient(cc.level(), c * c).gen();
  return out;
}

namespace {

std::vector<int> borel_generators(const CongCtx& cc) {
  std::vector<int> g{kT1, kTw};
  if (cc.presentation().has_diagonal_unit()) g.push_back(kE);
  return g;
}

Cusp cusp_from_matrix(const CongCtx& cc, const Mat2& g) {
  Cusp out;
  out.a = g.a;
  out.c = g.c;
  out.gmat = g;
  out.width_gen = ideal_quotient(cc.level(), g.c * g.c).gen();
  return out;
}

}  // namespace

std::vector<Cusp> cusps(const CongCtx& cc) {
  // Cusps are the double cosets Gamma_0(n) \ SL_2(O) / B, i.e. the orbits of
  // the upper triangular group B on the coset space.
  const int n = cc.num_cosets();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Cusp> out;
  const auto gens = borel_generators(cc);
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> stack{x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int g : gens)
        for (int z : {cc.act(g, y), cc.act_inverse(g, y)})
          if (!seen[static_cast<std::size_t>(z)]) {
            seen[static_cast<std::size_t>(z)] = true;
            stack.push_back(z);
          }
    }
    out.push_back(cusp_from_matrix(cc, cc.transversal_matrix(x)));
  }
  return out;
}

std::optional<Mat2> cusp_equivalence(const CongCtx& cc, const Cusp& x, const Cusp& y) {
  const Field& f = cc.field();
  const auto& pres = cc.presentation();
  const int from = cc.coset_of(y.gmat), to = cc.coset_of(x.gmat);
  const int n = cc.num_cosets();
  // BFS for b in B with coset(y.gmat) . b = coset(x.gmat)
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<std::pair<int, int>> via(static_cast<std::size_t>(n));
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = -1;
  const auto gens = borel_generators(cc);
  while (!queue.empty() && parent[static_cast<std::size_t>(to)] == -2) {
    int u = queue.front();
    queue.pop_front();
    for (int g : gens)
      for (int e : {1, -1}) {
        int v = e > 0 ? cc.act(g, u) : cc.act_inverse(g, u);
        if (parent[static_cast<std::size_t>(v)] != -2) continue;
        parent[static_cast<std::size_t>(v)] = u;
        via[static_cast<std::size_t>(v)] = {g, e};
        queue.push_back(v);
      }
  }
  if (parent[static_cast<std::size_t>(to)] == -2) return std::nullopt;
  Word b;
  std::vector<std::pair<int, int>> steps;
  for (int v = to; v != from; v = parent[static_cast<std::size_t>(v)]) steps.push_back(via[static_cast<std::size_t>(v)]);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) b.push(it->first, it->second);
  Mat2 gamma = y.gmat * word_to_matrix(b, pres) * x.gmat.inverse(f);
  if (!cc.membership(gamma)) throw Error(Errc::InternalError, "cusp certificate outside the subgroup");
  return gamma;
}

std::vector<Mat2> parabolic_elements(const CongCtx& cc, const Cusp& c) {
  const Field& f = cc.field();
  Mat2 ginv = c.gmat.inverse(f);
  std::vector<Mat2> out;
  for (const QuadInt& t : {c.width_gen, c.width_gen * f.omega()}) {
    Mat2 u{f.one(), t, f.zero(), f.one()};
    out.push_back(c.gmat * u * ginv);
  }
  return out;
}

namespace {

CohomSubspace restrict_to(const CohomSubspace& space, const MatQ& coords, SpaceKind kind) {
  CohomSubspace out;
  out.cc = space.cc;
  out.q = space.q;
  out.kind = kind;
  if (coords.rows() == 0)
    out.basis = rref(MatQ(space.q, 0, space.ambient_dim()));
  else
    out.basis = rref(coords * space.basis.mat);
  return out;
}

}  // namespace

CohomSubspace parabolic(const CohomSubspace& full) { return parabolic(full, cusps(*full.cc)); }

CohomSubspace parabolic(const CohomSubspace& full, const std::vector<Cusp>& reps) {
  const int k = full.dim();
  MatQ cond(full.q, k, 0);
  for (const Cusp& c : reps)
    for (const Mat2& p : parabolic_elements(*full.cc, c)) {
      std::vector<Fq> v = evaluate_basis(full, p);
      MatQ col(full.q, k, 1);
      for (int i = 0; i < k; ++i) col(i, 0) = v[static_cast<std::size_t>(i)];
      cond = hstack(cond, col);
    }
  MatQ x = k == 0 ? MatQ(full.q, 0, 0) : (cond.cols() == 0 ? MatQ::identity(full.q, k) : left_kernel_basis(cond));
  return restrict_to(full, x, SpaceKind::Parabolic);
}

MatQ unit_conjugation_operator(const CohomSubspace& space, const QuadInt& u) {
  const CongCtx& cc = *space.cc;
  const Field& f = cc.field();
  const int k = space.dim(), n = space.ambient_dim();
  QuadInt uinv = f.unit_inverse(u);
  MatQ images(space.q, k, n);
  for (int j = 0; j < n; ++j) {
    const Mat2& g = cc.sgen(j).matrix;
    Mat2 conj{g.a, u * g.b, uinv * g.c, g.d};
    std::vector<Fq> v = apply_basis(space, cc.express(conj));
    for (int i = 0; i < k; ++i) images(i, j) = v[static_cast<std::size_t>(i)];
  }
  MatQ op(space.q, k, k);
  for (int i = 0; i < k; ++i) {
    std::vector<Fq> coords;
    if (!space.coordinates(images.row_vector(i), &coords))
      throw Error(Errc::ProjectionFailure, "unit conjugate leaves the subspace");
    for (int j = 0; j < k; ++j) op(i, j) = coords[static_cast<std::size_t>(j)];
  }
  return op;
}

CohomSubspace unit_invariants(const CohomSubspace& space) {
  if (space.kind == SpaceKind::Full)
    throw Error(Errc::ShapeMismatch, "unit_invariants expects a parabolic subspace");
  const Field& f = space.cc->field();
  // i resp. w generate the units for d = 1, 3; otherwise the units are +-1
  // and diag(-1, 1) still acts non-trivially by conjugation.
  QuadInt u = f.unit_generator();
  if (space.dim() == 0) {
    CohomSubspace out = space;
    out.kind = SpaceKind::ParabolicUnitInvariant;
    return out;
  }
  MatQ op = unit_conjugation_operator(space, u);
  MatQ x = left_kernel_basis(op - MatQ::identity(space.q, space.dim()));
  return restrict_to(space, x, SpaceKind::ParabolicUnitInvariant);
}

}  // namespace bianchi
