#pragma once

// Finite presentations of SL_2(O_d) and the conversion between matrices and
// words in the generators (Euclidean continued fractions on the bottom row).

#include <string>
#include <vector>

#include "bianchi/mat2.hpp"

namespace bianchi {

// A syllable g^exp of a word.
struct Letter {
  int gen;
  long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word stored as syllables: adjacent letters never share a
// generator and no exponent is zero.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  void push(int gen, long exp);
  void append(const Word& w);
  Word inverse() const;
  Word power(int k) const;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  // Number of generator occurrences, i.e. sum of |exp|.
  long length() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend Word operator*(Word x, const Word& y) {
    x.append(y);
    return x;
  }

 private:
  std::vector<Letter> letters_;
};

struct Generator {
  std::string name;
  Mat2 matrix;
  Mat2 inverse;
};

// Generator ids used by builtin_presentation.
enum GenId : int { kT1 = 0, kTw = 1, kS = 2, kE = 3 };

struct AmbientPresentation {
  int d = 1;
  std::vector<Generator> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  bool has_diagonal_unit() const { return generators.size() > 3; }
};

// Hard-coded presentation of SL_2(O_d), validated at construction: every
// relator evaluates to the identity. Throws UnsupportedField.
const AmbientPresentation& builtin_presentation(const Field& f);

// Builds a presentation with extra relators appended (used for audits).
AmbientPresentation with_extra_relators(const AmbientPresentation& p, const std::vector<Word>& extra);

Mat2 word_to_matrix(const Word& w, const AmbientPresentation& p);
// Exact inverse of word_to_matrix on SL_2(O_d). Throws NotUnimodular.
Word matrix_to_word(const Mat2& m, const AmbientPresentation& p);

// Word for the diagonal matrix diag(u, u^-1), u a unit.
Word diagonal_unit_word(const QuadInt& u, const AmbientPresentation& p);
// Word for the translation [1, x; 0, 1].
Word translation_word(const QuadInt& x);

// Plain-text audit table: one line per generator with its matrix, one line
// per relator as a sequence of signed 1-based generator ids.
std::string presentation_to_text(const AmbientPresentation& p);
std::string word_to_text(const Word& w);

}  // namespace bianchi
