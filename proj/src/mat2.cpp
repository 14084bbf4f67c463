#include "bianchi/mat2.hpp"

namespace bianchi {

Mat2 Mat2::inverse(const Field& f) const {
  QuadInt det_inv = f.unit_inverse(det());
  return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

bool Mat2::is_minus_identity() const {
  return a.a() == -1 && a.b() == 0 && b.is_zero() && c.is_zero() && d.a() == -1 && d.b() == 0;
}

std::string to_string(const Mat2& m) {
  return "[" + to_string(m.a) + ", " + to_string(m.b) + "; " + to_string(m.c) + ", " +
         to_string(m.d) + "]";
}

}  // namespace bianchi
