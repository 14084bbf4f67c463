#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "bianchi/cohom.hpp"
#include "support.hpp"

using namespace bianchi;

using bianchi::testing::brute_p1_size;
using bianchi::testing::ideals_up_to;

TEST_CASE("P1 size matches brute force up to norm 200") {
  for (int d : {1, 2, 3, 7, 11}) {
    const Field& f = Field::get(d);
    int levels = 0;
    for (const PIdeal& n : ideals_up_to(f, 200)) {
      ProjectiveLine p1(n);
      CHECK_MESSAGE(p1.size() == brute_p1_size(n), "d=", d, " n=", to_string(n));
      ++levels;
    }
    CHECK(levels > 100);
  }
}

TEST_CASE("matrix to word round trip on 1000 random elements per field") {
  std::mt19937_64 rng(17);
  for (int d : {1, 2, 3, 7, 11}) {
    const Field& f = Field::get(d);
    const AmbientPresentation& p = builtin_presentation(f);
    std::uniform_int_distribution<int> gen(0, p.num_generators() - 1);
    std::uniform_int_distribution<int> ex(-4, 4);
    int ok = 0;
    for (int t = 0; t < 1000; ++t) {
      Word w;
      for (int i = 0; i < 25; ++i) w.push(gen(rng), ex(rng));
      Mat2 m = word_to_matrix(w, p);
      ok += word_to_matrix(matrix_to_word(m, p), p) == m;
    }
    CHECK(ok == 1000);
  }
}

TEST_CASE("H1 dimensions match the integer Smith normal form oracle") {
  std::ifstream in(BIANCHI_ORACLE_DIR "/h1_oracle.json");
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  std::map<int, int> per_field;
  for (const auto& c : j["cases"]) {
    const int d = c["d"];
    const Field& f = Field::get(d);
    PIdeal n = parse_ideal(f, c["level"].get<std::string>());
    auto cc = std::make_shared<const CongCtx>(build_congruence(n));
    CHECK(cc->num_cosets() == c["cosets"].get<int>());
    for (auto it = c["h1_dim"].begin(); it != c["h1_dim"].end(); ++it) {
      long q = std::stol(it.key());
      CohomSubspace h = h1(cc, CoefficientModulus(q, f));
      CHECK_MESSAGE(h.dim() == it.value().get<int>(), "d=", d, " level=", c["level"].get<std::string>(), " q=", q);
    }
    ++per_field[d];
  }
  for (int d : {1, 2, 3, 7, 11}) CHECK(per_field[d] >= 3);
}

TEST_CASE("extra relators do not change H1") {
  std::mt19937_64 rng(23);
  for (int d : {1, 2, 3, 7, 11}) {
    const Field& f = Field::get(d);
    const AmbientPresentation& p = builtin_presentation(f);
    AmbientPresentation extended = with_extra_relators(p, bianchi::testing::candidate_relators(p, rng, 40));
    for (const char* lv : {"1", "3", "4+1*w", "5+2*w", "6"}) {
      PIdeal n = parse_ideal(f, lv);
      auto a = std::make_shared<const CongCtx>(build_congruence(n));
      auto b = std::make_shared<const CongCtx>(n, extended);
      for (long q : {5L, 7L, 13L}) {
        CoefficientModulus m(q, f);
        CHECK_MESSAGE(h1(a, m).dim() == h1(b, m).dim(), "d=", d, " level=", lv, " q=", q);
      }
    }
  }
}
