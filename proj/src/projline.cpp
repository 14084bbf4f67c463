#include "bianchi/projline.hpp"

namespace bianchi {

ProjectiveLine::ProjectiveLine(const PIdeal& n) : residues_(n) {
  const std::int64_t N = residues_.size();
  if (N > kMaxModulusNorm)
    throw Error(Errc::InternalError, "modulus norm " + std::to_string(N) + " exceeds the desk-scale limit");

  std::vector<std::vector<bool>> in_prime;
  for (const PrimePower& pp : factor(n)) {
    ResidueSystem rp(pp.prime);
    std::vector<bool> mask(static_cast<std::size_t>(N));
    for (std::int64_t i = 0; i < N; ++i) mask[static_cast<std::size_t>(i)] = rp.index(residues_.rep(i)) == 0;
    in_prime.push_back(std::move(mask));
  }
  unit_mask_.assign(static_cast<std::size_t>(N), true);
  for (const auto& mask : in_prime)
    for (std::int64_t i = 0; i < N; ++i)
      if (mask[static_cast<std::size_t>(i)]) unit_mask_[static_cast<std::size_t>(i)] = false;
  for (std::int64_t i = 0; i < N; ++i)
    if (unit_mask_[static_cast<std::size_t>(i)]) units_.push_back(i);

  table_.assign(static_cast<std::size_t>(N * N), -1);
  for (std::int64_t ci = 0; ci < N; ++ci) {
    for (std::int64_t di = 0; di < N; ++di) {
      bool ok = true;
      for (const auto& mask : in_prime)
        if (mask[static_cast<std::size_t>(ci)] && mask[static_cast<std::size_t>(di)]) {
          ok = false;
          break;
        }
      if (!ok || table_[static_cast<std::size_t>(ci * N + di)] >= 0) continue;
      // lexicographic iteration: the first member met is the least of its orbit
      auto idx = static_cast<std::int32_t>(points_.size());
      points_.emplace_back(ci, di);
      for (std::int64_t u : units_)
        table_[static_cast<std::size_t>(residues_.mul(u, ci) * N + residues_.mul(u, di))] = idx;
    }
  }
}

P1Point ProjectiveLine::point(int i) const {
  const auto& [ci, di] = points_.at(static_cast<std::size_t>(i));
  return {residues_.rep(ci), residues_.rep(di), i};
}

std::vector<P1Point> ProjectiveLine::points() const {
  std::vector<P1Point> out;
  for (int i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

int ProjectiveLine::lookup(std::int64_t ci, std::int64_t di) const {
  return table_[static_cast<std::size_t>(ci * residues_.size() + di)];
}

P1Point ProjectiveLine::normalize(const QuadInt& c, const QuadInt& d) const {
  int idx = lookup(residues_.index(c), residues_.index(d));
  if (idx < 0)
    throw Error(Errc::NotProjectivePoint,
                "(" + to_string(c) + " : " + to_string(d) + ") mod " + to_string(modulus()));
  return point(idx);
}

int ProjectiveLine::apply(const Mat2& g, int x) const {
  if (g.det().norm() != 1) throw Error(Errc::BadDeterminant, to_string(g));
  const auto& [ci, di] = points_.at(static_cast<std::size_t>(x));
  const ResidueSystem& R = residues_;
  std::int64_t a = R.index(g.a), b = R.index(g.b), c = R.index(g.c), d = R.index(g.d);
  std::int64_t nc = R.add(R.mul(ci, a), R.mul(di, c));
  std::int64_t nd = R.add(R.mul(ci, b), R.mul(di, d));
  int idx = lookup(nc, nd);
  if (idx < 0) throw Error(Errc::InternalError, "action left P^1");
  return idx;
}

Int p1_size_formula(const PIdeal& n) {
  // N(n) * prod (1 + 1/N(p)) = prod N(p)^(e-1) * (N(p) + 1)
  Int total = 1;
  for (const PrimePower& pp : factor(n)) {
    Int np = pp.prime.norm();
    for (int e = 1; e < pp.exponent; ++e) total *= np;
    total *= np + 1;
  }
  return total;
}

P1Point p1_normalize(const QuadInt& c, const QuadInt& d, const ProjectiveLine& p1) {
  return p1.normalize(c, d);
}

std::vector<P1Point> p1_enumerate(const PIdeal& n) { return ProjectiveLine(n).points(); }

P1Point p1_apply(const Mat2& g, const P1Point& x, const ProjectiveLine& p1) {
  return p1.point(p1.apply(g, x.index));
}

}  // namespace bianchi
