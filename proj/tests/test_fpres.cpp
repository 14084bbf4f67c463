#include <doctest.h>

#include <random>

#include "bianchi/fpres.hpp"

using namespace bianchi;

TEST_CASE("relators evaluate to the identity") {
  for (int d : {1, 2, 3, 7, 11}) {
    const AmbientPresentation& p = builtin_presentation(Field::get(d));
    CHECK(p.d == d);
    for (const Word& r : p.relators) CHECK(word_to_matrix(r, p).is_identity());
  }
}

TEST_CASE("generator set") {
  const Field& f = Field::get(1);
  const AmbientPresentation& p = builtin_presentation(f);
  REQUIRE(p.num_generators() == 4);
  CHECK(p.generators[kT1].matrix == Mat2{f.one(), f.one(), f.zero(), f.one()});
  CHECK(p.generators[kTw].matrix == Mat2{f.one(), f.omega(), f.zero(), f.one()});
  CHECK(p.generators[kS].matrix == Mat2{f.zero(), f.make(-1), f.one(), f.zero()});
  CHECK(p.generators[kE].matrix == Mat2{f.omega(), f.zero(), f.zero(), f.make(0, -1)});
  CHECK(builtin_presentation(Field::get(7)).num_generators() == 3);
}

TEST_CASE("words") {
  const Field& f = Field::get(2);
  const AmbientPresentation& p = builtin_presentation(f);
  CHECK(word_to_matrix(Word{}, p).is_identity());
  CHECK(word_to_matrix(Word{{kS, 2}}, p).is_minus_identity());
  Word w{{kT1, 3}, {kS, -1}, {kTw, 2}};
  CHECK(word_to_matrix(w * w.inverse(), p).is_identity());
  CHECK((w * w.inverse()).empty());
  Word v;
  v.push(kT1, 2);
  v.push(kT1, -2);
  CHECK(v.empty());
  CHECK(w.length() == 6);
  CHECK(w.power(2).length() == 12);
  CHECK_THROWS_AS(word_to_matrix(Word{{7, 1}}, p), Error);
}

TEST_CASE("matrix to word") {
  for (int d : {1, 2, 3, 7, 11}) {
    const Field& f = Field::get(d);
    const AmbientPresentation& p = builtin_presentation(f);
    CHECK(matrix_to_word(Mat2::identity(f), p).empty());
    for (int g = 0; g < p.num_generators(); ++g) {
      Word w = matrix_to_word(p.generators[static_cast<std::size_t>(g)].matrix, p);
      CHECK(w.length() == 1);
      CHECK(word_to_matrix(w, p) == p.generators[static_cast<std::size_t>(g)].matrix);
    }
    for (const QuadInt& u : f.units()) {
      Mat2 D{u, f.zero(), f.zero(), f.unit_inverse(u)};
      CHECK(word_to_matrix(diagonal_unit_word(u, p), p) == D);
    }
    QuadInt x = f.make(-7, 3);
    CHECK(word_to_matrix(translation_word(x), p) == Mat2{f.one(), x, f.zero(), f.one()});
    Mat2 bad{f.make(2), f.zero(), f.zero(), f.one()};
    CHECK_THROWS_AS(matrix_to_word(bad, p), Error);
  }
}

TEST_CASE("round trip on random elements") {
  std::mt19937_64 rng(3);
  for (int d : {1, 2, 3, 7, 11}) {
    const Field& f = Field::get(d);
    const AmbientPresentation& p = builtin_presentation(f);
    std::uniform_int_distribution<int> gen(0, p.num_generators() - 1);
    std::uniform_int_distribution<int> ex(-3, 3);
    for (int t = 0; t < 200; ++t) {
      Word w;
      for (int i = 0; i < 15; ++i) w.push(gen(rng), ex(rng));
      Mat2 m = word_to_matrix(w, p);
      CHECK(word_to_matrix(matrix_to_word(m, p), p) == m);
    }
  }
}

TEST_CASE("audit text") {
  const AmbientPresentation& p = builtin_presentation(Field::get(11));
  std::string t = presentation_to_text(p);
  CHECK(t.find("gen 1 T1") != std::string::npos);
  CHECK(t.find("rel ") != std::string::npos);
  AmbientPresentation q = with_extra_relators(p, {Word{{kT1, 1}, {kTw, 1}, {kT1, -1}, {kTw, -1}}});
  CHECK(q.relators.size() == p.relators.size() + 1);
  CHECK_THROWS_AS(with_extra_relators(p, {Word{{kT1, 1}}}), Error);
}
