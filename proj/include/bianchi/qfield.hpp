#pragma once

// Exact arithmetic in the ring of integers O_d of Q(sqrt(-d)) for the five
// norm-Euclidean imaginary quadratic fields d = 1, 2, 3, 7, 11.
//
// Elements are written a + b*w in the basis (1, w) where
//   w = sqrt(-d)          for d = 1, 2
//   w = (1 + sqrt(-d))/2  for d = 3, 7, 11
// so that w^2 = tr*w - nm with (tr, nm) = (0, d) or (1, (1+d)/4).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi {

using Int = mpz_class;

// Coefficients (tr, nm) of the minimal polynomial X^2 - tr*X + nm of w.
struct OmegaRule {
  int tr;
  int nm;
};

OmegaRule omega_rule(int d);
bool is_supported_field(int d) noexcept;

class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(int d, Int a, Int b = 0) : a_(std::move(a)), b_(std::move(b)), d_(static_cast<std::uint8_t>(d)) {}

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  int d() const noexcept { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  QuadInt conj() const;
  Int norm() const;
  Int trace() const;

  QuadInt operator-() const { return {d_, -a_, -b_}; }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const Int& k) { return {x.d_, x.a_ * k, x.b_ * k}; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }
  // Lexicographic on (a, b); used only for canonical choices.
  friend bool lex_less(const QuadInt& x, const QuadInt& y) {
    return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
  }

  // True iff y divides x exactly; on success stores the quotient.
  bool divides_into(const QuadInt& x, QuadInt* quotient) const;

 private:
  Int a_ = 0;
  Int b_ = 0;
  std::uint8_t d_ = 1;
};

struct DivMod {
  QuadInt q;
  QuadInt r;
};

struct XGcd {
  QuadInt g;
  QuadInt s;
  QuadInt t;
};

// The field context: d, the rule for w and the unit group.
class Field {
 public:
  // Throws Error(UnsupportedField) unless d is one of 1, 2, 3, 7, 11.
  static const Field& get(int d);

  int d() const noexcept { return d_; }
  OmegaRule rule() const noexcept { return rule_; }

  QuadInt make(long a, long b = 0) const { return {d_, Int(a), Int(b)}; }
  QuadInt make(const Int& a, const Int& b) const { return {d_, a, b}; }
  QuadInt zero() const { return make(0); }
  QuadInt one() const { return make(1); }
  QuadInt omega() const { return make(0, 1); }

  // All units of O_d, starting with 1 and generated by unit_generator().
  std::span<const QuadInt> units() const noexcept { return units_; }
  const QuadInt& unit_generator() const noexcept { return units_[1]; }
  bool is_unit(const QuadInt& x) const;
  QuadInt unit_inverse(const QuadInt& u) const;
  // Exponent k with unit_generator()^k == u.
  int unit_log(const QuadInt& u) const;

  // a = q*b + r with N(r) < N(b).
  DivMod divmod(const QuadInt& a, const QuadInt& b) const;
  // g = s*a + t*b, g = gcd(a, b) as a canonical associate.
  XGcd xgcd(const QuadInt& a, const QuadInt& b) const;
  QuadInt gcd(const QuadInt& a, const QuadInt& b) const { return xgcd(a, b).g; }

  // Canonical associate: among the unit multiples with a > 0 or (a = 0, b > 0)
  // the lexicographically largest (a, b). Zero maps to zero.
  QuadInt normalize(const QuadInt& x) const;
  // The unit u with u*x == normalize(x) (1 for x = 0).
  QuadInt normalizing_unit(const QuadInt& x) const;

  QuadInt parse(std::string_view text) const;
  std::string format(const QuadInt& x) const;

 private:
  explicit Field(int d);

  int d_;
  OmegaRule rule_;
  std::vector<QuadInt> units_;
};

QuadInt pow(const QuadInt& x, unsigned e);
std::string to_string(const QuadInt& x);

}  // namespace bianchi
