// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bianchi/verify.hpp"
#include "support.hpp"

using namespace bianchi;
using bianchi::testing::random_element;

namespace {

const int kFields[] = {1, 2, 3, 7, 11};
bool g_failed = false;

PIdeal I(int d, const std::string& s) { return parse_ideal(Field::get(d), s); }

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << " first failure: " << what;
      ok = false;
    }
  }
};

void report(int k, const char* title, Outcome& o, const std::string& summary) {
  if (!o.ok) g_failed = true;
  std::cout << "criterion " << k << " " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  " << summary
            << o.notes.str() << std::endl;
}

std::shared_ptr<const CongCtx> ctx(const PIdeal& n, const BuildOptions& opt = {}) {
  return std::make_shared<const CongCtx>(build_congruence(n, opt));
}

// Criterion 1: N(l)+1 pairwise distinct right cosets covering the double coset.
void criterion1() {
  Outcome o;
  struct Case {
    int d;
    const char* level;
    const char* l;
  };
  const std::vector<Case> cases = {{1, "2+1*w", "1+1*w"}, {1, "2+1*w", "3"}, {1, "2+1*w", "2-1*w"},
                                   {2, "3+1*w", "1+1*w"}, {3, "4+1*w", "2"},  {7, "3+1*w", "w"},
                                   {11, "4+1*w", "1+1*w"}};
  std::mt19937_64 rng(101);
  long samples = 0;
  for (const Case& c : cases) {
    PIdeal n = I(c.d, c.level), l = I(c.d, c.l);
    HeckeCosets h = hecke_cosets(l, n);
    const std::string tag = "d=" + std::to_string(c.d) + " l=" + to_string(l);
    o.require(static_cast<long>(h.reps.size()) == l.norm().get_si() + 1, tag + " count");
    for (std::size_t i = 0; i < h.reps.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) o.require(!same_right_coset(h.reps[i], h.reps[j], n), tag + " distinct");
    auto cc = ctx(n);
    // Gamma_0(n) sigma Gamma_0(n) with sigma = [1, 0; 0, lambda]
    for (int t = 0; t < 500; ++t) {
      Mat2 m = random_element(*cc, rng) * h.reps.front() * random_element(*cc, rng);
      int idx = -1;
      const int hits = coset_index_scan(h, m, &idx);
      o.require(hits == 1, tag + " partition");
      o.require(hits == 1 && coset_index(h, m) == idx, tag + " direct index");
      ++samples;
    }
  }
  report(1, "Hecke coset partition", o,
         std::to_string(cases.size()) + " (level, l) pairs, " + std::to_string(samples) + " double-coset samples");
}

struct Config {
  int d;
  std::string level, prime;
  long q = 7;
  long max_norm = 4000;
};

const std::vector<Config>& configs() {
  static const std::vector<Config> c = {
      {1, "5+2*w", "1+1*w"},  {1, "7+4*w", "1+1*w", 11}, {1, "6+6*w", "2+1*w"}, {1, "-4-4*w", "2+1*w"},
      {1, "2+1*w", "1+1*w"},  {2, "5+3*w", "1+1*w"},     {2, "4*w", "1+1*w"},   {2, "7+1*w", "w"},
      {3, "7-1*w", "2"},      {3, "9-1*w", "2"},         {3, "10-5*w", "2"},    {7, "1-4*w", "3"},
      {7, "5+2*w", "3"},      {7, "2-4*w", "3"},         {11, "1-2*w", "2"},    {11, "5+1*w", "2"},
      {11, "5+2*w", "2"},
  };
  return c;
}

struct Run {
  Config cfg;
  std::string error;
  VerifyReport report;
  int parabolic_N = 0;        // before the unit condition
  bool parabolic_injective = false;
};

std::vector<Run> run_all() {
  std::vector<Run> out;
  for (const Config& c : configs()) {
    RunConfig rc;
    rc.field_d = c.d;
    rc.level = c.level;
    rc.prime = c.prime;
    rc.modulus = c.q;
    rc.max_prime_norm = c.max_norm;
    rc.test_prime_count = 5;
    Run r{c, "", {}};
    try {
      r.report = run_verify(rc);
      // restriction on the full parabolic spaces as well
      ValidatedConfig v = validate(rc);
      auto a = ctx(v.N), b = ctx(v.Np);
      auto pa = std::make_shared<const CohomSubspace>(parabolic(h1(a, v.q)));
      auto pb = std::make_shared<const CohomSubspace>(parabolic(h1(b, v.q)));
      r.parabolic_N = pa->dim();
      r.parabolic_injective = kernel(restriction_map(pa, pb)).rows() == 0;
    } catch (const std::exception& e) {
      r.error = e.what();
      std::cerr << "  d=" << c.d << " N=" << c.level << " failed: " << r.error << "\n";
      out.push_back(std::move(r));
      continue;
    }
    std::cerr << "  ran d=" << c.d << " N=" << r.report.level << " p=" << r.report.prime << " q=" << c.q
              << " dims " << r.report.h1p_N << "/" << r.report.h1pu_N << " -> " << r.report.h1p_Np << "/"
              << r.report.h1pu_Np << " ker alpha " << r.report.alpha_kernel_dim << "\n";
    out.push_back(std::move(r));
  }
  return out;
}

void criterion2(const std::vector<Run>& runs) {
  Outcome o;
  std::map<int, int> nonzero;
  int vacuous = 0;
  bool pinned = false;
  for (const Run& r : runs) {
    const std::string tag = "d=" + std::to_string(r.cfg.d) + " N=" + r.report.level;
    o.require(r.error.empty(), "d=" + std::to_string(r.cfg.d) + " N=" + r.cfg.level + ": " + r.error);
    o.require(r.report.restriction_injective, tag + " unit-invariant restriction");
    o.require(r.parabolic_injective, tag + " parabolic restriction");
    if (!r.error.empty()) continue;
    if (r.parabolic_N > 0)
      ++nonzero[r.cfg.d];
    else
      ++vacuous;
    if (r.cfg.d == 1 && r.report.level == "(4+4*w)" && r.report.prime == "(2+1*w)" && r.cfg.q == 7) pinned = true;
  }
  for (int d : kFields) o.require(nonzero[d] >= 3, "fewer than 3 nonzero configurations for d=" + std::to_string(d));
  o.require(pinned, "pinned configuration d=1 N=(-4-4i) p=(2+i) q=7 missing");
  std::ostringstream s;
  s << runs.size() << " configurations, nonzero source per field";
  for (int d : kFields) s << " d" << d << ":" << nonzero[d];
  s << ", vacuous " << vacuous;
  report(2, "restriction is injective", o, s.str());
}

void criterion3() {
  Outcome o;
  struct Case {
    int d;
    const char* N;
    const char* p;
  };
  const std::vector<Case> cases = {{1, "5+2*w", "1+1*w"}, {2, "5+3*w", "1+1*w"}, {3, "7-1*w", "2"},
                                   {7, "1-4*w", "3"},     {11, "1-2*w", "2"}};
  std::mt19937_64 rng(303);
  long checked = 0;
  for (const Case& c : cases) {
    const Field& f = Field::get(c.d);
    PIdeal N = I(c.d, c.N), p = I(c.d, c.p), Np = N * p;
    const std::string tag = "d=" + std::to_string(c.d);
    auto big = ctx(Np), small = ctx(N);
    const QuadInt& pi = p.gen();
    Mat2 D{pi, f.zero(), f.zero(), f.one()};
    for (int t = 0; t < 1000; ++t) {
      Mat2 g = random_element(*big, rng, 16);
      Mat2 h = twist_conjugate(g, pi);
      o.require(h * D == D * g, tag + " conjugation identity");
      o.require(small->membership(h), tag + " conjugate in Gamma_0(N)");
      ++checked;
    }
    std::vector<Mat2> reps = gamma01_cosets(N, p);
    o.require(static_cast<long>(reps.size()) == p.norm().get_si() + 1, tag + " gamma01 count");
    for (int t = 0; t < 200; ++t) {
      Mat2 g = random_element(*small, rng);
      int hits = 0;
      for (const Mat2& r : reps) hits += same_right_coset(g, r, Np);
      o.require(hits == 1, tag + " gamma01 partition");
    }
  }
  report(3, "conjugation identity and Gamma_0(Np) cosets", o,
         std::to_string(checked) + " conjugations, 1000 coset samples");
}

void criterion4(const std::vector<Run>& runs) {
  Outcome o;
  std::map<int, int> per_field, with_np;
  int primes = 0, max_index = 0;
  for (const Run& r : runs) {
    o.require(r.error.empty(), "d=" + std::to_string(r.cfg.d) + " N=" + r.cfg.level + ": " + r.error);
    if (!r.error.empty()) continue;
    ++per_field[r.cfg.d];
    if (r.report.h1p_Np > 0) ++with_np[r.cfg.d];
    const std::string tag = "d=" + std::to_string(r.cfg.d) + " N=" + r.report.level;
    o.require(r.report.hecke.size() == 5, tag + " 5 primes");
    for (const HeckeCheck& h : r.report.hecke) {
      o.require(h.eisenstein.stable, tag + " l=" + to_string(h.prime.prime) + " stable");
      o.require(h.eisenstein.passed, tag + " l=" + to_string(h.prime.prime) + " nilpotent");
      max_index = std::max(max_index, h.eisenstein.nilpotency_index);
      ++primes;
    }
  }
  for (int d : kFields) {
    o.require(per_field[d] >= 2, "fewer than 2 configurations for d=" + std::to_string(d));
    o.require(with_np[d] >= 1, "no configuration with nonzero H1_P(Np) for d=" + std::to_string(d));
  }
  int kernels = 0;
  for (const Run& r : runs) kernels += r.report.alpha_kernel_dim > 0;
  report(4, "ker alpha is Eisenstein", o,
         std::to_string(primes) + " (configuration, l) checks, " + std::to_string(kernels) +
             " configurations with nonzero kernel, largest nilpotency index " + std::to_string(max_index));
}

void criterion5(const std::vector<Run>& runs) {
  Outcome o;
  int eq = 0;
  for (const Run& r : runs) {
    const std::string tag = "d=" + std::to_string(r.cfg.d) + " N=" + r.report.level;
    o.require(r.error.empty(), "d=" + std::to_string(r.cfg.d) + " N=" + r.cfg.level + ": " + r.error);
    o.require(r.report.hecke_commute, tag + " commutativity");
    for (const HeckeCheck& h : r.report.hecke) {
      o.require(h.alpha_equivariant, tag + " l=" + to_string(h.prime.prime) + " equivariance");
      ++eq;
    }
  }
  report(5, "Hecke commutativity and equivariance of alpha", o,
         std::to_string(runs.size() * 10) + " commuting pairs at two levels, " + std::to_string(eq) +
             " equivariance checks");
}

void criterion6() {
  Outcome o;
  struct Case {
    int d;
    const char* level;
  };
  const std::vector<Case> cases = {{1, "5+2*w"}, {1, "6+6*w"}, {2, "4*w"},     {3, "7-1*w"},
                                   {7, "2-4*w"}, {11, "5+1*w"}, {11, "4+3*w"}};
  std::mt19937_64 rng(606);
  for (const Case& c : cases) {
    PIdeal n = I(c.d, c.level);
    const Field& f = n.field();
    const std::string tag = "d=" + std::to_string(c.d) + " N=" + to_string(n);
    CoefficientModulus q(7, f);
    auto base = ctx(n);
    CohomSubspace full = h1(base, q);
    CohomSubspace par = parabolic(full);
    CohomSubspace inv = unit_invariants(par);
    o.require(row_space_contains(full.basis, par.basis.mat), tag + " parabolic in full");
    o.require(row_space_contains(par.basis, inv.basis.mat), tag + " invariants in parabolic");
    o.require(unit_invariants(inv).dim() == inv.dim(), tag + " idempotent");
    std::vector<int> order(static_cast<std::size_t>(base->presentation().num_generators()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (int t = 0; t < 4; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      BuildOptions opt;
      opt.generator_order = order;
      auto other = ctx(n, opt);
      CohomSubspace f2 = h1(other, q);
      CohomSubspace p2 = parabolic(f2);
      o.require(f2.dim() == full.dim(), tag + " full dim under tree change");
      o.require(p2.dim() == par.dim(), tag + " parabolic dim under tree change");
      o.require(unit_invariants(p2).dim() == inv.dim(), tag + " invariant dim under tree change");
    }
    // other representatives of the same cusps
    std::vector<Cusp> alt;
    for (const Cusp& c0 : cusps(*base)) {
      Mat2 g = random_element(*base, rng) * c0.gmat;
      Mat2 shift{f.one(), f.make(static_cast<long>(rng() % 7), static_cast<long>(rng() % 7)), f.zero(), f.one()};
      Mat2 h = g * shift;
      Cusp y;
      y.a = h.a;
      y.c = h.c;
      y.gmat = h;
      y.width_gen = ideal_quotient(n, h.c * h.c).gen();
      alt.push_back(y);
    }
    o.require(parabolic(full, alt).dim() == par.dim(), tag + " cusp representatives");
  }
  report(6, "cohomology is well defined", o, std::to_string(cases.size()) + " levels, 4 spanning trees each");
}

void criterion7() {
  Outcome o;
  long levels = 0;
  for (int d : kFields)
    for (const PIdeal& n : bianchi::testing::ideals_up_to(Field::get(d), 200)) {
      o.require(ProjectiveLine(n).size() == bianchi::testing::brute_p1_size(n), "P1 size d=" + std::to_string(d) +
                                                                               " n=" + to_string(n));
      ++levels;
    }
  std::mt19937_64 rng(707);
  long trips = 0;
  for (int d : kFields) {
    const AmbientPresentation& p = builtin_presentation(Field::get(d));
    std::uniform_int_distribution<int> gen(0, p.num_generators() - 1);
    std::uniform_int_distribution<int> ex(-4, 4);
    for (int t = 0; t < 1000; ++t) {
      Word w;
      for (int i = 0; i < 25; ++i) w.push(gen(rng), ex(rng));
      Mat2 m = word_to_matrix(w, p);
      o.require(word_to_matrix(matrix_to_word(m, p), p) == m, "round trip d=" + std::to_string(d));
      ++trips;
    }
  }
  std::ifstream in(BIANCHI_ORACLE_DIR "/h1_oracle.json");
  o.require(in.good(), "oracle file missing");
  long compared = 0;
  std::map<int, int> per_field;
  if (in.good()) {
    nlohmann::json j = nlohmann::json::parse(in);
    for (const auto& c : j["cases"]) {
      const int d = c["d"];
      PIdeal n = I(d, c["level"].get<std::string>());
      auto cc = ctx(n);
      for (auto it = c["h1_dim"].begin(); it != c["h1_dim"].end(); ++it) {
        CohomSubspace h = h1(cc, CoefficientModulus(std::stol(it.key()), n.field()));
        o.require(h.dim() == it.value().get<int>(), "H1 oracle d=" + std::to_string(d) + " " + to_string(n) +
                                                        " q=" + it.key());
        ++compared;
      }
      ++per_field[d];
    }
  }
  for (int d : kFields) o.require(per_field[d] >= 3, "fewer than 3 oracle levels for d=" + std::to_string(d));
  // relator completeness audit
  long audited = 0;
  for (int d : kFields) {
    const Field& f = Field::get(d);
    const AmbientPresentation& p = builtin_presentation(f);
    AmbientPresentation extended = with_extra_relators(p, bianchi::testing::candidate_relators(p, rng, 60));
    for (const char* lv : {"1", "3", "4+1*w", "5+2*w", "6", "7-1*w"}) {
      PIdeal n = I(d, lv);
      auto a = ctx(n);
      auto b = std::make_shared<const CongCtx>(n, extended);
      for (long q : {5L, 7L, 11L, 13L}) {
        CoefficientModulus m(q, f);
        o.require(h1(a, m).dim() == h1(b, m).dim(), "relator audit d=" + std::to_string(d) + " " + to_string(n));
        ++audited;
      }
    }
  }
  report(7, "infrastructure oracles", o,
         std::to_string(levels) + " P1 levels, " + std::to_string(trips) + " round trips, " +
             std::to_string(compared) + " H1 dimensions against integer SNF, " + std::to_string(audited) +
             " relator audits");
}

struct CliResult {
  int status;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(BIANCHI_CLI) + " " + args + " 2>&1";
  CliResult r{-1, ""};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 512> buf;
  while (fgets(buf.data(), static_cast<int>(buf.size()), p)) r.output += buf.data();
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void criterion8() {
  Outcome o;
  struct Case {
    std::string args, phrase;
  };
  const std::vector<Case> cases = {
      {"verify --level 3", "generator greater than 3"},
      {"verify --field-d 3 --level 2 --prime 7-1*w", "generator greater than 3"},
      {"verify --level 2+1*w --prime 2+1*w", "p does not divide N"},
      {"verify --field-d 11 --level 5+1*w --prime 1-2*w", "p does not divide N"},
      {"verify --modulus 3", "modulus"},
      {"verify --modulus 9", "modulus"},
      {"verify --field-d 3 --modulus 2", "modulus"},
  };
  for (const Case& c : cases) {
    CliResult r = run_cli(c.args);
    o.require(r.status == 2, "'" + c.args + "' exit " + std::to_string(r.status));
    o.require(r.output.find(c.phrase) != std::string::npos, "'" + c.args + "' message: " + r.output);
  }
  CliResult good = run_cli("verify --test-primes 3");
  o.require(good.status == 0, "valid configuration exit " + std::to_string(good.status));
  report(8, "hypothesis enforcement", o, std::to_string(cases.size()) + " rejected configurations exit 2");
}

}  // namespace

int main() {
  auto guard = [](int k, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      std::cout << "criterion " << k << " FAIL  exception: " << e.what() << std::endl;
      g_failed = true;
    }
  };
  guard(1, criterion1);
  std::vector<Run> runs;
  guard(2, [&] {
    runs = run_all();
    criterion2(runs);
  });
  guard(3, criterion3);
  if (runs.empty()) {
    std::cout << "criterion 4 FAIL  no verification runs\ncriterion 5 FAIL  no verification runs" << std::endl;
    g_failed = true;
  } else {
    guard(4, [&] { criterion4(runs); });
    guard(5, [&] { criterion5(runs); });
  }
  guard(6, criterion6);
  guard(7, criterion7);
  guard(8, criterion8);
  std::cout << (g_failed ? "SOME CRITERIA FAILED" : "ALL PASS") << std::endl;
  return g_failed ? 1 : 0;
}
