#include <CLI11.hpp>

#include <iostream>

#include "bianchi/verify.hpp"

using namespace bianchi;

namespace {

int emit(const nlohmann::json& j) {
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic H^1 of Bianchi congruence subgroups mod q, degeneracy maps and Hecke operators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; flags take precedence");
  app.allow_config_extras(false);

  RunConfig cfg;
  std::string conductor;
  std::string ell = "3";
  long exponent = 3;
  app.add_option("--field-d,--field_d", cfg.field_d, "d in {1, 2, 3, 7, 11}")->capture_default_str();
  app.add_option("--level", cfg.level, "generator of the level N, e.g. 2+1*w")->capture_default_str();
  app.add_option("--prime", cfg.prime, "generator of the prime p")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "coefficient prime q")->capture_default_str();
  app.add_option("--test-primes,--test_primes", cfg.test_prime_count, "number of ray-trivial primes")->capture_default_str();
  app.add_option("--max-norm,--max_norm", cfg.max_prime_norm, "norm bound of the prime searches")->capture_default_str();
  app.add_option("--conductor", conductor, "ray conductor (default: the level)");
  app.add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed of the randomized checks")->capture_default_str();
  app.add_flag("--timings", cfg.timings, "include timings in the JSON report");

  CLI::App* verify = app.add_subcommand("verify", "end-to-end check that ker alpha is Eisenstein");
  CLI::App* inspect = app.add_subcommand("inspect", "serialized output of one module");
  inspect->require_subcommand(1);
  inspect->fallthrough();
  CLI::App* i_p1 = inspect->add_subcommand("p1", "points of P^1(O/N)");
  CLI::App* i_cosets = inspect->add_subcommand("cosets", "Hecke coset representatives for --ell and the Gamma_0(Np) cosets");
  CLI::App* i_dims = inspect->add_subcommand("dims", "dimensions and cusps at --level");
  CLI::App* i_hecke = inspect->add_subcommand("hecke", "matrix of T_ell on the parabolic unit-invariant space");
  CLI::App* i_deg = inspect->add_subcommand("degeneracy", "the two degeneracy maps and ker alpha");
  for (CLI::App* s : {i_p1, i_cosets, i_dims, i_hecke, i_deg}) s->fallthrough();
  for (CLI::App* s : {i_cosets, i_hecke}) s->add_option("--ell", ell, "generator of the prime ell")->capture_default_str();
  CLI::App* findprimes = app.add_subcommand("findprimes", "auxiliary primes and ray-trivial primes");
  findprimes->add_option("--exponent", exponent, "odd exponent >= 3")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!conductor.empty()) cfg.conductor = conductor;

  try {
    if (verify->parsed()) {
      VerifyReport r = run_verify(cfg);
      if (cfg.format == "table")
        std::cout << to_table(r);
      else
        std::cout << to_json(r, cfg.timings).dump(2) << "\n";
      return r.passed() ? 0 : 1;
    }
    if (i_p1->parsed()) return emit(inspect_p1(cfg));
    if (i_cosets->parsed()) return emit(inspect_cosets(cfg, ell));
    if (i_dims->parsed()) return emit(inspect_dims(cfg));
    if (i_hecke->parsed()) return emit(inspect_hecke(cfg, ell));
    if (i_deg->parsed()) return emit(inspect_degeneracy(cfg));
    if (findprimes->parsed()) return emit(find_primes(cfg, exponent));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
