#include "bianchi/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace bianchi {

using nlohmann::json;

namespace {

const Field& field_of(const RunConfig& cfg) {
  if (!is_supported_field(cfg.field_d))
    throw ConfigError("unsupported field: d = " + std::to_string(cfg.field_d) + " (expected 1, 2, 3, 7 or 11)");
  return Field::get(cfg.field_d);
}

PIdeal ideal_of(const Field& f, const std::string& text, const char* what) {
  try {
    PIdeal n = parse_ideal(f, text);
    if (n.is_zero()) throw ConfigError(std::string(what) + " must be nonzero");
    return n;
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot parse ") + what + " '" + text + "': " + e.what());
  }
}

CoefficientModulus modulus_of(const RunConfig& cfg, const Field& f) {
  try {
    return CoefficientModulus(cfg.modulus, f);
  } catch (const Error&) {
    throw ConfigError("hypothesis violated: modulus q = " + std::to_string(cfg.modulus) +
                      " must be a prime >= 5, coprime to 6 and to the number of units (" +
                      std::to_string(f.units().size()) + ")");
  }
}

void check_size(const PIdeal& n) {
  if (n.norm() > ProjectiveLine::kMaxModulusNorm)
    throw ConfigError("level " + to_string(n) + " of norm " + n.norm().get_str() + " exceeds the limit " +
                      std::to_string(ProjectiveLine::kMaxModulusNorm));
}

std::shared_ptr<const CohomSubspace> share(CohomSubspace s) {
  return std::make_shared<const CohomSubspace>(std::move(s));
}

struct LevelSpaces {
  std::shared_ptr<const CongCtx> cc;
  int h1 = 0, h1p = 0, cusps = 0;
  std::shared_ptr<const CohomSubspace> inv;
};

LevelSpaces level_spaces(const PIdeal& n, const CoefficientModulus& q) {
  LevelSpaces out;
  out.cc = std::make_shared<const CongCtx>(build_congruence(n));
  CohomSubspace full = h1(out.cc, q);
  std::vector<Cusp> cs = cusps(*out.cc);
  CohomSubspace par = parabolic(full, cs);
  out.h1 = full.dim();
  out.h1p = par.dim();
  out.cusps = static_cast<int>(cs.size());
  out.inv = share(unit_invariants(par));
  return out;
}

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(name, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// Random element of Gamma_0(n) from a random word in the ambient generators.
Mat2 random_element(const CongCtx& cc, std::mt19937_64& rng, int length) {
  const auto& pres = cc.presentation();
  Word w;
  std::uniform_int_distribution<int> gen(0, pres.num_generators() - 1);
  for (int i = 0; i < length; ++i) w.push(gen(rng), (rng() & 1) ? 1 : -1);
  Mat2 g = word_to_matrix(w, pres);
  return g * cc.transversal_matrix(cc.coset_of(g)).inverse(cc.field());
}

}  // namespace

ValidatedConfig validate(const RunConfig& cfg) {
  const Field& f = field_of(cfg);
  PIdeal N = ideal_of(f, cfg.level, "level");
  PIdeal p = ideal_of(f, cfg.prime, "prime");
  if (!is_prime(p)) throw ConfigError("prime " + to_string(p) + " is not a prime ideal");
  if (p.divides(N)) throw ConfigError("hypothesis violated: p does not divide N (" + to_string(p) + " divides " + to_string(N) + ")");
  if (N.integer_generator() <= 3)
    throw ConfigError("hypothesis violated: N cap Z has a generator greater than 3 (N cap Z = " +
                      N.integer_generator().get_str() + "Z)");
  CoefficientModulus q = modulus_of(cfg, f);
  if (cfg.test_prime_count < 1) throw ConfigError("test-primes must be at least 1");
  if (cfg.max_prime_norm < 2) throw ConfigError("max-norm must be at least 2");
  PIdeal Np = N * p;
  check_size(Np);
  PIdeal cond = cfg.conductor ? ideal_of(f, *cfg.conductor, "conductor") : N;
  return {&f, N, p, Np, cond, q};
}

bool VerifyReport::passed() const {
  if (!restriction_injective || !coset_certificates || !hecke_commute) return false;
  for (const HeckeCheck& h : hecke)
    if (!h.alpha_equivariant || !h.eisenstein.passed) return false;
  return true;
}

VerifyReport run_verify(const RunConfig& cfg) {
  ValidatedConfig v = validate(cfg);
  VerifyReport r;
  Stopwatch sw(r.timings);
  r.d = v.field->d();
  r.level = to_string(v.N);
  r.prime = to_string(v.p);
  r.q = v.q.value();

  LevelSpaces A = level_spaces(v.N, v.q);
  sw.lap("level_N");
  LevelSpaces B = level_spaces(v.Np, v.q);
  sw.lap("level_Np");
  r.h1_N = A.h1;
  r.h1p_N = A.h1p;
  r.h1pu_N = A.inv->dim();
  r.cusps_N = A.cusps;
  r.h1_Np = B.h1;
  r.h1p_Np = B.h1p;
  r.h1pu_Np = B.inv->dim();
  r.cusps_Np = B.cusps;

  LinMap res = restriction_map(A.inv, B.inv);
  LinMap tw = twisted_map(A.inv, B.inv, v.p.gen());
  LinMap al = alpha(res, tw);
  MatQ ker = kernel(al);
  r.restriction_rank = rank(res.mat);
  r.twisted_rank = rank(tw.mat);
  r.alpha_rank = rank(al.mat);
  r.alpha_kernel_dim = ker.rows();
  r.restriction_injective = kernel(res).rows() == 0;
  sw.lap("degeneracy");

  // randomized certificates for the cosets of Gamma_0(Np) in Gamma_0(N)
  std::mt19937_64 rng(cfg.seed);
  std::vector<Mat2> reps = gamma01_cosets(v.N, v.p);
  bool certs = static_cast<long>(reps.size()) == v.p.norm().get_si() + 1 &&
               static_cast<long>(reps.size()) * A.cc->num_cosets() == B.cc->num_cosets();
  for (int t = 0; t < cfg.random_checks && certs; ++t) {
    Mat2 g = random_element(*A.cc, rng, 12);
    int hits = 0;
    for (const Mat2& rep : reps) hits += same_right_coset(g, rep, v.Np);
    certs = hits == 1;
  }

  std::vector<PIdeal> avoid;
  for (const PrimePower& pp : factor(v.Np)) avoid.push_back(pp.prime);
  std::vector<RayPrime> ells = ray_trivial_primes(v.conductor, cfg.test_prime_count, avoid, cfg.max_prime_norm);
  std::vector<MatQ> tN, tNp;
  for (const RayPrime& rp : ells) {
    HeckeCosets hN = hecke_cosets(rp.prime, v.N, rp.lambda);
    HeckeCosets hNp = hecke_cosets(rp.prime, v.Np, rp.lambda);
    for (int t = 0; t < cfg.random_checks && certs; ++t) {
      Mat2 g = random_element(*A.cc, rng, 12);
      const Mat2& delta = hN.reps[static_cast<std::size_t>(rng() % hN.reps.size())];
      certs = coset_index_scan(hN, delta * g, nullptr) == 1;
    }
    MatQ a = hecke_matrix(hN, A.inv).mat;
    MatQ b = hecke_matrix(hNp, B.inv).mat;
    HeckeCheck hc;
    hc.prime = rp;
    MatQ dbl = block_diagonal(a, a);
    hc.alpha_equivariant = dbl * al.mat == al.mat * b;
    hc.eisenstein = eisenstein_check(ker, dbl, rp.prime);
    r.hecke.push_back(std::move(hc));
    tN.push_back(std::move(a));
    tNp.push_back(std::move(b));
  }
  r.coset_certificates = certs;
  r.hecke_commute = true;
  for (std::size_t i = 0; i < tN.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (tN[i] * tN[j] != tN[j] * tN[i] || tNp[i] * tNp[j] != tNp[j] * tNp[i]) r.hecke_commute = false;
  sw.lap("hecke");
  return r;
}

json element_json(const QuadInt& x) { return to_string(x); }

json matrix_json(const MatQ& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json mat2_json(const Mat2& m) {
  return json::array({json::array({element_json(m.a), element_json(m.b)}),
                      json::array({element_json(m.c), element_json(m.d)})});
}

json to_json(const VerifyReport& r, bool with_timings) {
  json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["field_d"] = r.d;
  j["level"] = r.level;
  j["prime"] = r.prime;
  j["modulus"] = r.q;
  j["dims"] = {{"h1_N", r.h1_N},       {"h1p_N", r.h1p_N},   {"h1pu_N", r.h1pu_N},   {"h1_Np", r.h1_Np},
               {"h1p_Np", r.h1p_Np},   {"h1pu_Np", r.h1pu_Np}, {"cusps_N", r.cusps_N}, {"cusps_Np", r.cusps_Np}};
  j["alpha"] = {{"rank", r.alpha_rank},
                {"kernel_dim", r.alpha_kernel_dim},
                {"restriction_rank", r.restriction_rank},
                {"twisted_rank", r.twisted_rank}};
  j["restriction_injective"] = r.restriction_injective;
  j["coset_certificates"] = r.coset_certificates;
  j["hecke_commute"] = r.hecke_commute;
  json eq = json::array(), eis = json::array();
  for (const HeckeCheck& h : r.hecke) {
    eq.push_back({{"l", to_string(h.prime.prime)}, {"passed", h.alpha_equivariant}});
    eis.push_back({{"l", to_string(h.prime.prime)},
                   {"lambda", element_json(h.prime.lambda)},
                   {"unit", element_json(h.prime.unit)},
                   {"norm", h.eisenstein.norm.get_si()},
                   {"cosets", h.eisenstein.cosets},
                   {"stable", h.eisenstein.stable},
                   {"nilpotency_index", h.eisenstein.nilpotency_index},
                   {"passed", h.eisenstein.passed}});
  }
  j["equivariance"] = std::move(eq);
  j["eisenstein"] = std::move(eis);
  if (with_timings) {
    json t = json::object();
    for (const auto& [name, secs] : r.timings) t[name] = secs;
    j["timings"] = std::move(t);
  }
  j["passed"] = r.passed();
  return j;
}

std::string to_table(const VerifyReport& r) {
  std::ostringstream os;
  os << "field d         " << r.d << "\n"
     << "level N         " << r.level << "\n"
     << "prime p         " << r.prime << "\n"
     << "modulus q       " << r.q << "\n"
     << "dim H1(N)       " << r.h1_N << "  parabolic " << r.h1p_N << "  unit-invariant " << r.h1pu_N
     << "  cusps " << r.cusps_N << "\n"
     << "dim H1(Np)      " << r.h1_Np << "  parabolic " << r.h1p_Np << "  unit-invariant " << r.h1pu_Np
     << "  cusps " << r.cusps_Np << "\n"
     << "rank alpha      " << r.alpha_rank << "  kernel " << r.alpha_kernel_dim << "\n"
     << "restriction     " << (r.restriction_injective ? "injective" : "NOT injective") << "\n"
     << "coset checks    " << (r.coset_certificates ? "ok" : "FAILED") << "\n"
     << "Hecke commute   " << (r.hecke_commute ? "ok" : "FAILED") << "\n";
  for (const HeckeCheck& h : r.hecke)
    os << "T " << to_string(h.prime.prime) << " (norm " << h.eisenstein.norm.get_str() << ")  equivariant "
       << (h.alpha_equivariant ? "yes" : "no") << "  stable " << (h.eisenstein.stable ? "yes" : "no")
       << "  nilpotency " << h.eisenstein.nilpotency_index << "  " << (h.eisenstein.passed ? "pass" : "FAIL")
       << "\n";
  os << "result          " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

json inspect_p1(const RunConfig& cfg) {
  const Field& f = field_of(cfg);
  PIdeal n = ideal_of(f, cfg.level, "level");
  check_size(n);
  ProjectiveLine p1(n);
  json pts = json::array();
  for (const P1Point& x : p1.points()) pts.push_back(json::array({element_json(x.c), element_json(x.d)}));
  return {{"schema", 1}, {"command", "inspect p1"}, {"field_d", f.d()}, {"level", to_string(n)},
          {"size", p1.size()}, {"expected_size", p1_size_formula(n).get_si()}, {"points", std::move(pts)}};
}

json inspect_cosets(const RunConfig& cfg, const std::string& ell) {
  const Field& f = field_of(cfg);
  PIdeal n = ideal_of(f, cfg.level, "level");
  PIdeal l = ideal_of(f, ell, "ell");
  HeckeCosets h = [&] {
    try {
      return hecke_cosets(l, n);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }();
  json reps = json::array();
  for (const Mat2& m : h.reps) reps.push_back(mat2_json(m));
  json j = {{"schema", 1},       {"command", "inspect cosets"}, {"field_d", f.d()},
            {"level", to_string(n)}, {"l", to_string(l)},      {"norm", l.norm().get_si()},
            {"count", h.reps.size()}, {"reps", std::move(reps)}, {"pairwise_distinct", true}};
  PIdeal p = ideal_of(f, cfg.prime, "prime");
  if (is_prime(p) && coprime(p, n)) {
    json g = json::array();
    for (const Mat2& m : gamma01_cosets(n, p)) g.push_back(mat2_json(m));
    j["gamma01"] = {{"prime", to_string(p)}, {"count", g.size()}, {"reps", std::move(g)}};
  }
  return j;
}

json inspect_dims(const RunConfig& cfg) {
  const Field& f = field_of(cfg);
  PIdeal n = ideal_of(f, cfg.level, "level");
  check_size(n);
  CoefficientModulus q = modulus_of(cfg, f);
  auto cc = std::make_shared<const CongCtx>(build_congruence(n));
  CohomSubspace full = h1(cc, q);
  std::vector<Cusp> cs = cusps(*cc);
  CohomSubspace par = parabolic(full, cs);
  CohomSubspace inv = unit_invariants(par);
  json cj = json::array();
  for (const Cusp& c : cs)
    cj.push_back({{"a", element_json(c.a)}, {"c", element_json(c.c)}, {"width", element_json(c.width_gen)}});
  return {{"schema", 1},
          {"command", "inspect dims"},
          {"field_d", f.d()},
          {"level", to_string(n)},
          {"modulus", q.value()},
          {"cosets", cc->num_cosets()},
          {"schreier_generators", cc->num_sgens()},
          {"h1", full.dim()},
          {"h1_parabolic", par.dim()},
          {"h1_parabolic_unit_invariant", inv.dim()},
          {"cusps", std::move(cj)}};
}

json inspect_hecke(const RunConfig& cfg, const std::string& ell) {
  const Field& f = field_of(cfg);
  PIdeal n = ideal_of(f, cfg.level, "level");
  check_size(n);
  PIdeal l = ideal_of(f, ell, "ell");
  CoefficientModulus q = modulus_of(cfg, f);
  LevelSpaces s = level_spaces(n, q);
  LinMap t = [&] {
    try {
      return hecke_matrix(l, s.inv);
    } catch (const Error& e) {
      if (e.code() == Errc::NotPrime || e.code() == Errc::NotCoprimeToLevel) throw ConfigError(e.what());
      throw;
    }
  }();
  return {{"schema", 1},       {"command", "inspect hecke"},  {"field_d", f.d()},
          {"level", to_string(n)}, {"l", to_string(l)},        {"modulus", q.value()},
          {"kind", kind_name(s.inv->kind)}, {"dim", s.inv->dim()}, {"matrix", matrix_json(t.mat)}};
}

json inspect_degeneracy(const RunConfig& cfg) {
  ValidatedConfig v = validate(cfg);
  LevelSpaces A = level_spaces(v.N, v.q);
  LevelSpaces B = level_spaces(v.Np, v.q);
  LinMap res = restriction_map(A.inv, B.inv);
  LinMap tw = twisted_map(A.inv, B.inv, v.p.gen());
  LinMap al = alpha(res, tw);
  return {{"schema", 1},
          {"command", "inspect degeneracy"},
          {"field_d", v.field->d()},
          {"level", to_string(v.N)},
          {"prime", to_string(v.p)},
          {"modulus", v.q.value()},
          {"kind", kind_name(SpaceKind::ParabolicUnitInvariant)},
          {"dim_N", A.inv->dim()},
          {"dim_Np", B.inv->dim()},
          {"restriction", matrix_json(res.mat)},
          {"twisted", matrix_json(tw.mat)},
          {"alpha_kernel", matrix_json(kernel(al))}};
}

json find_primes(const RunConfig& cfg, long exponent) {
  const Field& f = field_of(cfg);
  if (exponent < 3 || exponent % 2 == 0) throw ConfigError("exponent must be odd and >= 3");
  PIdeal n = ideal_of(f, cfg.level, "level");
  PIdeal cond = cfg.conductor ? ideal_of(f, *cfg.conductor, "conductor") : n;
  json auxiliary = json::array();
  for (const PIdeal& P : primes_up_to(f, cfg.max_prime_norm)) {
    long nm = P.norm().get_si();
    if (std::gcd(nm - 1, exponent) != 1) continue;
    auxiliary.push_back({{"q", to_string(P)}, {"norm", nm}, {"gcd", 1}});
    if (static_cast<int>(auxiliary.size()) == cfg.test_prime_count) break;
  }
  if (auxiliary.empty())
    throw Error(Errc::ExhaustedSearch, "no prime with gcd(N(q) - 1, " + std::to_string(exponent) + ") = 1 below " +
                                           std::to_string(cfg.max_prime_norm));
  json ray = json::array();
  for (const RayPrime& rp : ray_trivial_primes(cond, cfg.test_prime_count, {}, cfg.max_prime_norm))
    ray.push_back({{"l", to_string(rp.prime)},
                   {"norm", rp.prime.norm().get_si()},
                   {"lambda", element_json(rp.lambda)},
                   {"unit", element_json(rp.unit)}});
  return {{"schema", 1},       {"command", "findprimes"}, {"field_d", f.d()},
          {"exponent", exponent}, {"conductor", to_string(cond)}, {"auxiliary", std::move(auxiliary)},
          {"ray_trivial", std::move(ray)}};
}

}  // namespace bianchi
