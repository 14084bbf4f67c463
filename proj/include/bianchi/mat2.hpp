#pragma once

#include <string>

#include "bianchi/qfield.hpp"

namespace bianchi {

// 2x2 matrix [a b; c d] over O_d.
struct Mat2 {
  QuadInt a, b, c, d;

  static Mat2 identity(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }

  QuadInt det() const { return a * d - b * c; }
  // Inverse of a matrix whose determinant is a unit of O_d.
  Mat2 inverse(const Field& f) const;
  // Adjugate [d -b; -c a], the inverse up to the determinant.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }
  bool is_minus_identity() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

std::string to_string(const Mat2& m);

}  // namespace bianchi
