#pragma once

// The projective line P^1(O/n): right cosets of Gamma_0(n) in SL_2(O_d),
// indexed by bottom rows (c : d) up to units of O/n.

#include <cstdint>
#include <vector>

#include "bianchi/ideals.hpp"
#include "bianchi/mat2.hpp"

namespace bianchi {

struct P1Point {
  QuadInt c;
  QuadInt d;
  int index;
};

class ProjectiveLine {
 public:
  // Largest residue ring for which the (c, d) lookup table is built.
  static constexpr std::int64_t kMaxModulusNorm = 4096;

  explicit ProjectiveLine(const PIdeal& n);

  const PIdeal& modulus() const noexcept { return residues_.modulus(); }
  const ResidueSystem& residues() const noexcept { return residues_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  P1Point point(int i) const;
  std::vector<P1Point> points() const;

  // Canonical representative of (c : d): the lexicographically least pair of
  // residue indices among all unit multiples. Throws NotProjectivePoint.
  P1Point normalize(const QuadInt& c, const QuadInt& d) const;
  // -1 when the residues do not form a projective point.
  int lookup(std::int64_t ci, std::int64_t di) const;

  bool is_unit_residue(std::int64_t i) const { return unit_mask_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& unit_residues() const noexcept { return units_; }

  // (c : d) * g. Throws BadDeterminant unless det(g) is a unit of O_d.
  int apply(const Mat2& g, int x) const;

 private:
  ResidueSystem residues_;
  std::vector<std::pair<std::int64_t, std::int64_t>> points_;
  std::vector<std::int32_t> table_;
  std::vector<bool> unit_mask_;
  std::vector<std::int64_t> units_;
};

// Expected size N(n) * prod_{p | n} (1 + 1/N(p)).
Int p1_size_formula(const PIdeal& n);

// Convenience wrappers mirroring the operation names.
P1Point p1_normalize(const QuadInt& c, const QuadInt& d, const ProjectiveLine& p1);
std::vector<P1Point> p1_enumerate(const PIdeal& n);
P1Point p1_apply(const Mat2& g, const P1Point& x, const ProjectiveLine& p1);

}  // namespace bianchi
