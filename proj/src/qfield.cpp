#include "bianchi/qfield.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace bianchi {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotFound: return "NotFound";
    case Errc::NotProjectivePoint: return "NotProjectivePoint";
    case Errc::BadDeterminant: return "BadDeterminant";
    case Errc::BadGeneratorId: return "BadGeneratorId";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::BadModulus: return "BadModulus";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::ProjectionFailure: return "ProjectionFailure";
    case Errc::NonIntegralConjugate: return "NonIntegralConjugate";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotCoprimeToLevel: return "NotCoprimeToLevel";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ConstructionFailure: return "ConstructionFailure";
    case Errc::PermutationFailure: return "PermutationFailure";
    case Errc::ExhaustedSearch: return "ExhaustedSearch";
    case Errc::NotStable: return "NotStable";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_supported_field(int d) noexcept {
  return d == 1 || d == 2 || d == 3 || d == 7 || d == 11;
}

OmegaRule omega_rule(int d) {
  if (!is_supported_field(d))
    throw Error(Errc::UnsupportedField, "d = " + std::to_string(d));
  if (d % 4 == 3) return {1, (1 + d) / 4};
  return {0, d};
}

QuadInt QuadInt::conj() const {
  // conj(w) = tr - w
  OmegaRule r = omega_rule(d_);
  return {d_, a_ + r.tr * b_, -b_};
}

Int QuadInt::norm() const {
  OmegaRule r = omega_rule(d_);
  return a_ * a_ + r.tr * a_ * b_ + r.nm * b_ * b_;
}

Int QuadInt::trace() const {
  OmegaRule r = omega_rule(d_);
  return 2 * a_ + r.tr * b_;
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  const int tr = (x.d_ % 4 == 3) ? 1 : 0;
  const int nm = tr ? (1 + x.d_) / 4 : x.d_;
  Int bb = x.b_ * y.b_;
  Int a = x.a_ * y.a_ - nm * bb;
  Int b = x.a_ * y.b_ + x.b_ * y.a_;
  if (tr) b += bb;
  return {x.d_, std::move(a), std::move(b)};
}

QuadInt& QuadInt::operator*=(const QuadInt& o) { return *this = *this * o; }

bool QuadInt::divides_into(const QuadInt& x, QuadInt* quotient) const {
  if (is_zero()) return false;
  QuadInt num = x * conj();
  Int n = norm();
  if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t()))
    return false;
  if (quotient) {
    Int qa, qb;
    mpz_divexact(qa.get_mpz_t(), num.a_.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), num.b_.get_mpz_t(), n.get_mpz_t());
    *quotient = QuadInt(d_, qa, qb);
  }
  return true;
}

QuadInt pow(const QuadInt& x, unsigned e) {
  QuadInt r(x.d(), 1, 0);
  QuadInt base = x;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

const Field& Field::get(int d) {
  static const Field f1(1), f2(2), f3(3), f7(7), f11(11);
  switch (d) {
    case 1: return f1;
    case 2: return f2;
    case 3: return f3;
    case 7: return f7;
    case 11: return f11;
    default:
      throw Error(Errc::UnsupportedField,
                  "d = " + std::to_string(d) + " is not one of 1, 2, 3, 7, 11");
  }
}

Field::Field(int d) : d_(d), rule_(omega_rule(d)) {
  QuadInt gen;
  switch (d) {
    case 1: gen = make(0, 1); break;  // i
    case 3: gen = make(0, 1); break;  // w, a primitive 6th root of unity
    default: gen = make(-1); break;
  }
  QuadInt u = one();
  do {
    units_.push_back(u);
    u *= gen;
  } while (!u.is_one());
}

bool Field::is_unit(const QuadInt& x) const { return x.norm() == 1; }

QuadInt Field::unit_inverse(const QuadInt& u) const {
  if (!is_unit(u)) throw Error(Errc::DivisionByZero, format(u) + " is not a unit");
  return u.conj();
}

int Field::unit_log(const QuadInt& u) const {
  for (std::size_t k = 0; k < units_.size(); ++k)
    if (units_[k] == u) return static_cast<int>(k);
  throw Error(Errc::InternalError, format(u) + " is not a unit");
}

namespace {

// Nearest integer to num/den (den > 0), ties toward -infinity.
Int round_nearest(const Int& num, const Int& den) {
  Int twice = 2 * num - den;
  Int r;
  Int den2 = 2 * den;
  mpz_cdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  return r;
}

}  // namespace

DivMod Field::divmod(const QuadInt& a, const QuadInt& b) const {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "divmod by zero");
  // a/b = (X + Y w)/n exactly.
  QuadInt num = a * b.conj();
  Int n = b.norm();
  Int qa, qb;
  if (rule_.tr == 0) {
    qa = round_nearest(num.a(), n);
    qb = round_nearest(num.b(), n);
  } else {
    // For w = (1+sqrt(-d))/2 round the w-coordinate first, then the real part
    // of the residual: error^2 <= 1/4 + d/16 < 1 for d = 3, 7, 11.
    qb = round_nearest(num.b(), n);
    // real part of (X + Y w)/n - qb*w is X/n + (Y/n - qb)/2 = (2X + Y - qb n)/(2n)
    qa = round_nearest(2 * num.a() + num.b() - qb * n, 2 * n);
  }
  QuadInt q = make(qa, qb);
  QuadInt r = a - q * b;
  if (!(r.norm() < n))
    throw Error(Errc::InternalError, "Euclidean remainder not smaller for " + format(a) + " / " + format(b));
  return {std::move(q), std::move(r)};
}

QuadInt Field::normalizing_unit(const QuadInt& x) const {
  if (x.is_zero()) return one();
  const QuadInt* best_u = nullptr;
  QuadInt best;
  for (const QuadInt& u : units_) {
    QuadInt y = u * x;
    bool positive = y.a() > 0 || (y.a() == 0 && y.b() > 0);
    if (!positive) continue;
    if (!best_u || lex_less(best, y)) {
      best = y;
      best_u = &u;
    }
  }
  return *best_u;
}

QuadInt Field::normalize(const QuadInt& x) const {
  if (x.is_zero()) return x;
  return normalizing_unit(x) * x;
}

XGcd Field::xgcd(const QuadInt& a, const QuadInt& b) const {
  // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
  QuadInt r0 = a, r1 = b;
  QuadInt s0 = one(), s1 = zero();
  QuadInt t0 = zero(), t1 = one();
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    QuadInt s2 = s0 - qr.q * s1;
    QuadInt t2 = t0 - qr.q * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  QuadInt u = normalizing_unit(r0);
  return {u * r0, u * s0, u * t0};
}

QuadInt Field::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s += ch;
  if (s.empty()) throw Error(Errc::ParseError, "empty element");
  Int a = 0, b = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (any) {
      throw Error(Errc::ParseError, std::string(text));
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    bool is_w = false;
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'w') throw Error(Errc::ParseError, std::string(text));
      is_w = true;
      ++pos;
    } else if (pos < s.size() && s[pos] == 'w') {
      is_w = true;
      ++pos;
    }
    if (digits.empty() && !is_w) throw Error(Errc::ParseError, std::string(text));
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    if (sign < 0) coeff = -coeff;
    (is_w ? b : a) += coeff;
    any = true;
  }
  return make(a, b);
}

std::string Field::format(const QuadInt& x) const { return to_string(x); }

std::string to_string(const QuadInt& x) {
  std::ostringstream os;
  os << x.a().get_str();
  if (x.b() < 0)
    os << "-" << Int(-x.b()).get_str() << "*w";
  else
    os << "+" << x.b().get_str() << "*w";
  return os.str();
}

}  // namespace bianchi
