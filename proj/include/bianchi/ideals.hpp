#pragma once

// Principal ideals of O_d (all five supported fields have class number one),
// residue rings O/n and factorization into prime ideals.

#include <cstdint>
#include <vector>

#include "bianchi/qfield.hpp"

namespace bianchi {

class PIdeal {
 public:
  PIdeal() = default;
  // The generator is replaced by its canonical associate.
  PIdeal(const Field& f, const QuadInt& gen);

  const QuadInt& gen() const noexcept { return gen_; }
  int d() const noexcept { return gen_.d(); }
  const Field& field() const { return Field::get(gen_.d()); }
  Int norm() const { return gen_.norm(); }
  bool is_zero() const { return gen_.is_zero(); }
  bool is_unit_ideal() const { return gen_.is_one(); }

  bool contains(const QuadInt& x) const;
  // this | other, i.e. other is contained in this.
  bool divides(const PIdeal& other) const { return contains(other.gen_); }

  // Smallest positive rational integer in the ideal (the generator of n ∩ Z).
  Int integer_generator() const;

  friend PIdeal operator*(const PIdeal& x, const PIdeal& y) {
    return PIdeal(x.field(), x.gen_ * y.gen_);
  }
  friend bool operator==(const PIdeal& x, const PIdeal& y) { return x.gen_ == y.gen_; }
  friend bool operator!=(const PIdeal& x, const PIdeal& y) { return !(x == y); }
  friend bool operator<(const PIdeal& x, const PIdeal& y);

 private:
  QuadInt gen_;
};

std::string to_string(const PIdeal& n);  // "(a+b*w)"
PIdeal parse_ideal(const Field& f, std::string_view text);

PIdeal ideal_sum(const PIdeal& x, const PIdeal& y);
PIdeal ideal_quotient(const PIdeal& n, const QuadInt& x);  // (n : x) = n / gcd(n, x)
bool coprime(const PIdeal& x, const PIdeal& y);

struct PrimePower {
  PIdeal prime;
  int exponent;
};

// Prime factorization ordered by (norm, generator). Throws ZeroModulus on (0).
std::vector<PrimePower> factor(const PIdeal& n);
bool is_prime(const PIdeal& p);
// All canonical divisors of n, ordered by (norm, generator).
std::vector<PIdeal> divisors(const PIdeal& n);
// All prime ideals of norm <= bound ordered by (norm, generator).
std::vector<PIdeal> primes_up_to(const Field& f, long bound);

// A prime q with gcd(N(q) - 1, exponent) = 1 and N(q) <= normbound, smallest
// norm first. Throws NotFound when the bound is too small.
PIdeal search_prime_coprime_normminus1(const Field& f, long exponent, long normbound);

// Residue ring O/n. Representatives are x + y*w with 0 <= x < A, 0 <= y < C
// where n = Z*A + Z*(B + C*w) is the Hermite form of the ideal lattice.
class ResidueSystem {
 public:
  explicit ResidueSystem(const PIdeal& n);

  const PIdeal& modulus() const noexcept { return modulus_; }
  std::int64_t size() const noexcept { return size_; }
  std::int64_t hermite_a() const noexcept { return A_; }
  std::int64_t hermite_b() const noexcept { return B_; }
  std::int64_t hermite_c() const noexcept { return C_; }

  std::int64_t index(const QuadInt& x) const;
  std::int64_t index(std::int64_t x, std::int64_t y) const;
  QuadInt rep(std::int64_t idx) const;
  QuadInt reduce(const QuadInt& x) const { return rep(index(x)); }
  std::vector<QuadInt> reps() const;

  std::int64_t add(std::int64_t i, std::int64_t j) const;
  std::int64_t sub(std::int64_t i, std::int64_t j) const;
  std::int64_t mul(std::int64_t i, std::int64_t j) const;

 private:
  PIdeal modulus_;
  OmegaRule rule_;
  std::int64_t A_ = 1, B_ = 0, C_ = 1, size_ = 1;
};

ResidueSystem residue_system(const PIdeal& n);

// A full residue system of O/l whose members all lie in `constraint`.
// Throws NotCoprime unless l + constraint = (1).
std::vector<QuadInt> prime_residue_reps_in_ideal(const PIdeal& l, const PIdeal& constraint);

}  // namespace bianchi
