#pragma once

// End-to-end verification at a pair of levels (N, Np) and the JSON views used
// by the command line tool.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "bianchi/hecke.hpp"

namespace bianchi {

struct RunConfig {
  int field_d = 1;
  std::string level = "2+1*w";
  std::string prime = "1+1*w";
  long modulus = 7;
  int test_prime_count = 5;
  long max_prime_norm = 400;
  std::optional<std::string> conductor;
  std::string format = "json";
  std::uint64_t seed = 1;
  int random_checks = 50;
  bool timings = false;
};

// Raised for configurations that violate a standing hypothesis; the message
// names the hypothesis.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidatedConfig {
  const Field* field;
  PIdeal N, p, Np, conductor;
  CoefficientModulus q;
};

// Throws ConfigError.
ValidatedConfig validate(const RunConfig& cfg);

struct HeckeCheck {
  RayPrime prime;
  bool alpha_equivariant = false;
  EisensteinReport eisenstein;
};

struct VerifyReport {
  int d = 1;
  std::string level, prime;
  long q = 0;
  int h1_N = 0, h1p_N = 0, h1pu_N = 0;
  int h1_Np = 0, h1p_Np = 0, h1pu_Np = 0;
  int cusps_N = 0, cusps_Np = 0;
  int restriction_rank = 0, twisted_rank = 0;
  int alpha_rank = 0, alpha_kernel_dim = 0;
  bool restriction_injective = false;
  bool coset_certificates = false;
  bool hecke_commute = false;
  std::vector<HeckeCheck> hecke;
  std::vector<std::pair<std::string, double>> timings;

  bool passed() const;
};

VerifyReport run_verify(const RunConfig& cfg);

nlohmann::json to_json(const VerifyReport& r, bool with_timings);
std::string to_table(const VerifyReport& r);

nlohmann::json element_json(const QuadInt& x);
nlohmann::json matrix_json(const MatQ& m);
nlohmann::json mat2_json(const Mat2& m);

// Inspection views. They throw ConfigError for bad input.
nlohmann::json inspect_p1(const RunConfig& cfg);
nlohmann::json inspect_cosets(const RunConfig& cfg, const std::string& ell);
nlohmann::json inspect_dims(const RunConfig& cfg);
nlohmann::json inspect_hecke(const RunConfig& cfg, const std::string& ell);
nlohmann::json inspect_degeneracy(const RunConfig& cfg);
nlohmann::json find_primes(const RunConfig& cfg, long exponent);

}  // namespace bianchi
