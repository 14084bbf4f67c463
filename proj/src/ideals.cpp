#include "bianchi/ideals.hpp"

#include <algorithm>
#include <numeric>

namespace bianchi {

namespace {

struct Hermite {
  Int A, B, C;
};

Hermite hermite_form(const QuadInt& g) {
  const Field& f = Field::get(g.d());
  QuadInt v2 = g * f.omega();
  const Int &a1 = g.a(), &b1 = g.b(), &a2 = v2.a(), &b2 = v2.b();
  Int C, x, y;
  mpz_gcdext(C.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
  Int Bp = x * a1 + y * a2;
  Int det = a1 * b2 - a2 * b1;
  Int A = abs(det) / C;
  Int B;
  mpz_fdiv_r(B.get_mpz_t(), Bp.get_mpz_t(), A.get_mpz_t());
  return {A, B, C};
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw Error(Errc::InternalError, "residue coordinate overflow");
  return v.get_si();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

std::vector<unsigned long> rational_prime_factors(Int n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; Int(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) ps.push_back(n.get_ui());
  return ps;
}

std::vector<PIdeal> primes_above(const Field& f, unsigned long p) {
  OmegaRule r = f.rule();
  std::vector<PIdeal> out;
  for (unsigned long x = 0; x < p; ++x) {
    // X^2 - tr X + nm = 0 mod p
    Int v = Int(x) * x - Int(r.tr) * x + r.nm;
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
    QuadInt g = f.gcd(f.make(Int(p), Int(0)), f.make(Int(-static_cast<long>(x)), Int(1)));
    PIdeal P(f, g);
    if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
  }
  if (out.empty()) out.emplace_back(f, f.make(Int(p), Int(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PIdeal::PIdeal(const Field& f, const QuadInt& gen) : gen_(f.normalize(gen)) {}

bool PIdeal::contains(const QuadInt& x) const {
  if (gen_.is_zero()) return x.is_zero();
  return gen_.divides_into(x, nullptr);
}

Int PIdeal::integer_generator() const {
  if (gen_.is_zero()) throw Error(Errc::ZeroModulus, "zero ideal");
  return hermite_form(gen_).A;
}

bool operator<(const PIdeal& x, const PIdeal& y) {
  Int nx = x.norm(), ny = y.norm();
  if (nx != ny) return nx < ny;
  return lex_less(x.gen_, y.gen_);
}

std::string to_string(const PIdeal& n) { return "(" + to_string(n.gen()) + ")"; }

PIdeal parse_ideal(const Field& f, std::string_view text) { return PIdeal(f, f.parse(text)); }

PIdeal ideal_sum(const PIdeal& x, const PIdeal& y) {
  const Field& f = x.field();
  return PIdeal(f, f.gcd(x.gen(), y.gen()));
}

PIdeal ideal_quotient(const PIdeal& n, const QuadInt& x) {
  const Field& f = n.field();
  if (n.is_zero()) return n;
  QuadInt g = f.gcd(n.gen(), x);
  QuadInt q;
  if (!g.divides_into(n.gen(), &q)) throw Error(Errc::InternalError, "gcd does not divide");
  return PIdeal(f, q);
}

bool coprime(const PIdeal& x, const PIdeal& y) { return ideal_sum(x, y).is_unit_ideal(); }

std::vector<PrimePower> factor(const PIdeal& n) {
  if (n.is_zero()) throw Error(Errc::ZeroModulus, "factor of the zero ideal");
  const Field& f = n.field();
  std::vector<PrimePower> out;
  QuadInt rest = n.gen();
  for (unsigned long p : rational_prime_factors(n.norm())) {
    for (const PIdeal& P : primes_above(f, p)) {
      int e = 0;
      QuadInt q;
      while (P.gen().divides_into(rest, &q)) {
        rest = q;
        ++e;
      }
      if (e > 0) out.push_back({P, e});
    }
  }
  if (!f.is_unit(rest)) throw Error(Errc::InternalError, "factorization incomplete for " + to_string(n));
  std::sort(out.begin(), out.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  return out;
}

bool is_prime(const PIdeal& p) {
  if (p.is_zero() || p.is_unit_ideal()) return false;
  auto fs = factor(p);
  return fs.size() == 1 && fs[0].exponent == 1;
}

std::vector<PIdeal> divisors(const PIdeal& n) {
  const Field& f = n.field();
  std::vector<PIdeal> out{PIdeal(f, f.one())};
  for (const PrimePower& pp : factor(n)) {
    std::vector<PIdeal> next;
    for (const PIdeal& dv : out) {
      PIdeal cur = dv;
      next.push_back(cur);
      for (int e = 1; e <= pp.exponent; ++e) {
        cur = cur * pp.prime;
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PIdeal> primes_up_to(const Field& f, long bound) {
  std::vector<PIdeal> out;
  for (long p = 2; p <= bound; ++p) {
    bool prime = true;
    for (long k = 2; k * k <= p; ++k)
      if (p % k == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    for (const PIdeal& P : primes_above(f, static_cast<unsigned long>(p)))
      if (P.norm() <= bound) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PIdeal search_prime_coprime_normminus1(const Field& f, long exponent, long normbound) {
  if (exponent < 3 || exponent % 2 == 0)
    throw Error(Errc::BadModulus, "exponent must be odd and >= 3");
  for (const PIdeal& P : primes_up_to(f, normbound)) {
    long nm = P.norm().get_si();
    if (std::gcd(nm - 1, exponent) == 1) return P;
  }
  throw Error(Errc::NotFound, "no prime of norm <= " + std::to_string(normbound) +
                                  " with gcd(N-1, " + std::to_string(exponent) + ") = 1");
}

ResidueSystem::ResidueSystem(const PIdeal& n) : modulus_(n), rule_(omega_rule(n.d())) {
  if (n.is_zero()) throw Error(Errc::ZeroModulus, "residue system of the zero ideal");
  Hermite h = hermite_form(n.gen());
  A_ = to_i64(h.A);
  B_ = to_i64(h.B);
  C_ = to_i64(h.C);
  size_ = A_ * C_;
}

std::int64_t ResidueSystem::index(std::int64_t x, std::int64_t y) const {
  std::int64_t k = floor_div(y, C_);
  y -= k * C_;
  x -= k * B_;
  x = floor_mod(x, A_);
  return x + A_ * y;
}

std::int64_t ResidueSystem::index(const QuadInt& v) const {
  if (v.a().fits_slong_p() && v.b().fits_slong_p()) {
    std::int64_t x = v.a().get_si(), y = v.b().get_si();
    // keep the intermediate k*B inside 64 bits
    if (y > -(1L << 40) && y < (1L << 40)) return index(x, y);
  }
  Int k, C = Int(static_cast<long>(C_)), A = Int(static_cast<long>(A_));
  mpz_fdiv_q(k.get_mpz_t(), v.b().get_mpz_t(), C.get_mpz_t());
  Int y = v.b() - k * C;
  Int x = v.a() - k * Int(static_cast<long>(B_));
  Int xr;
  mpz_fdiv_r(xr.get_mpz_t(), x.get_mpz_t(), A.get_mpz_t());
  return xr.get_si() + A_ * y.get_si();
}

QuadInt ResidueSystem::rep(std::int64_t idx) const {
  return QuadInt(modulus_.d(), Int(static_cast<long>(idx % A_)), Int(static_cast<long>(idx / A_)));
}

std::vector<QuadInt> ResidueSystem::reps() const {
  std::vector<QuadInt> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t i = 0; i < size_; ++i) out.push_back(rep(i));
  return out;
}

std::int64_t ResidueSystem::add(std::int64_t i, std::int64_t j) const {
  return index(i % A_ + j % A_, i / A_ + j / A_);
}

std::int64_t ResidueSystem::sub(std::int64_t i, std::int64_t j) const {
  return index(i % A_ - j % A_, i / A_ - j / A_);
}

std::int64_t ResidueSystem::mul(std::int64_t i, std::int64_t j) const {
  std::int64_t x1 = i % A_, y1 = i / A_, x2 = j % A_, y2 = j / A_;
  std::int64_t yy = y1 * y2;
  return index(x1 * x2 - rule_.nm * yy, x1 * y2 + x2 * y1 + rule_.tr * yy);
}

ResidueSystem residue_system(const PIdeal& n) { return ResidueSystem(n); }

std::vector<QuadInt> prime_residue_reps_in_ideal(const PIdeal& l, const PIdeal& constraint) {
  if (!coprime(l, constraint))
    throw Error(Errc::NotCoprime, to_string(l) + " + " + to_string(constraint) + " != (1)");
  const Field& f = l.field();
  XGcd e = f.xgcd(l.gen(), constraint.gen());
  // t*c = 1 mod l and 0 mod c
  QuadInt idem = e.t * constraint.gen();
  ResidueSystem small(l * constraint);
  std::vector<QuadInt> out;
  for (const QuadInt& r : ResidueSystem(l).reps()) out.push_back(small.reduce(r * idem));
  return out;
}

}  // namespace bianchi
