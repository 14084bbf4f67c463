#include "bianchi/fpres.hpp"

#include <cstdlib>
#include <sstream>

namespace bianchi {

Word::Word(std::initializer_list<Letter> letters) {
  for (const Letter& l : letters) push(l.gen, l.exp);
}

void Word::push(int gen, long exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.letters_) push(l.gen, l.exp);
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push(it->gen, -it->exp);
  return out;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out.append(base);
  return out;
}

long Word::length() const {
  long n = 0;
  for (const Letter& l : letters_) n += std::labs(l.exp);
  return n;
}

namespace {

Mat2 mat(const Field& f, long a, long b, long c, long d) {
  return {f.make(a), f.make(b), f.make(c), f.make(d)};
}

Mat2 mat_power(const Mat2& m, const Mat2& minv, long e, const Field& f) {
  Mat2 base = e < 0 ? minv : m;
  unsigned long k = static_cast<unsigned long>(std::labs(e));
  Mat2 r = Mat2::identity(f);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Word W(std::initializer_list<std::pair<int, long>> ls) {
  Word w;
  for (auto [g, e] : ls) w.push(g, e);
  return w;
}

AmbientPresentation make_presentation(const Field& f) {
  AmbientPresentation p;
  p.d = f.d();
  const QuadInt w = f.omega();
  auto add_gen = [&](std::string name, Mat2 m) {
    Mat2 inv = m.inverse(f);
    p.generators.push_back({std::move(name), std::move(m), std::move(inv)});
  };
  add_gen("T1", mat(f, 1, 1, 0, 1));
  add_gen("Tw", {f.one(), w, f.zero(), f.one()});
  add_gen("S", mat(f, 0, -1, 1, 0));
  if (f.d() == 1 || f.d() == 3) {
    const QuadInt& u = f.unit_generator();
    add_gen("E", {u, f.zero(), f.zero(), f.unit_inverse(u)});
  }

  // Relators of PSL_2(O_d); they are lifted to SL_2 below.
  const int t = kT1, u = kTw, a = kS, l = kE;
  std::vector<Word> psl;
  Word commutator = W({{t, 1}, {u, 1}, {t, -1}, {u, -1}});
  Word at3 = W({{a, 1}, {t, 1}}).power(3);
  switch (f.d()) {
    case 1:
      // l = diag(i, -i)
      psl = {W({{l, 2}}),
             W({{a, 1}, {l, 1}}).power(2),
             W({{t, 1}, {l, 1}}).power(2),
             W({{u, 1}, {l, 1}}).power(2),
             at3,
             W({{u, 1}, {a, 1}, {l, 1}}).power(3),
             commutator};
      break;
    case 2:
      psl = {at3, W({{u, -1}, {a, 1}, {u, 1}, {a, 1}}).power(2), commutator};
      break;
    case 3:
      // l = diag(w, w^-1) with w a primitive 6th root of unity; in PSL_2 it
      // has order 3 and acts on translations by x -> w^2 x.
      psl = {W({{l, 3}}),
             W({{a, 1}, {l, 1}}).power(2),
             at3,
             commutator,
             // l t l^-1 = u t^-1  and  l u l^-1 = t^-1
             W({{l, 1}, {t, 1}, {l, -1}, {t, 1}, {u, -1}}),
             W({{l, 1}, {u, 1}, {l, -1}, {t, 1}}),
             W({{u, 1}, {l, 1}, {a, 1}}).power(3)};
      break;
    case 7:
      psl = {at3, W({{a, 1}, {t, 1}, {u, -1}, {a, 1}, {u, 1}}).power(2), commutator};
      break;
    case 11:
      psl = {at3, W({{a, 1}, {t, 1}, {u, -1}, {a, 1}, {u, 1}}).power(3), commutator};
      break;
  }

  // SL_2 is the central extension of PSL_2 by -I = S^2.
  p.relators.push_back(W({{a, 4}}));
  for (int g = 0; g < p.num_generators(); ++g)
    if (g != a) p.relators.push_back(W({{a, 2}, {g, 1}, {a, -2}, {g, -1}}));
  for (Word r : psl) {
    Mat2 m = word_to_matrix(r, p);
    if (m.is_minus_identity()) r.push(a, 2);
    p.relators.push_back(std::move(r));
  }
  for (const Word& r : p.relators)
    if (!word_to_matrix(r, p).is_identity())
      throw Error(Errc::InternalError, "relator " + word_to_text(r) + " is not the identity for d = " +
                                           std::to_string(f.d()));
  return p;
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error(Errc::InternalError, "exponent exceeds 64 bits");
  return v.get_si();
}

}  // namespace

const AmbientPresentation& builtin_presentation(const Field& f) {
  switch (f.d()) {
    case 1: { static const AmbientPresentation p = make_presentation(f); return p; }
    case 2: { static const AmbientPresentation p = make_presentation(f); return p; }
    case 3: { static const AmbientPresentation p = make_presentation(f); return p; }
    case 7: { static const AmbientPresentation p = make_presentation(f); return p; }
    case 11: { static const AmbientPresentation p = make_presentation(f); return p; }
  }
  throw Error(Errc::UnsupportedField, std::to_string(f.d()));
}

AmbientPresentation with_extra_relators(const AmbientPresentation& p, const std::vector<Word>& extra) {
  AmbientPresentation out = p;
  for (const Word& r : extra) {
    if (!word_to_matrix(r, p).is_identity())
      throw Error(Errc::InternalError, "extra relator is not the identity");
    out.relators.push_back(r);
  }
  return out;
}

Mat2 word_to_matrix(const Word& w, const AmbientPresentation& p) {
  const Field& f = Field::get(p.d);
  Mat2 m = Mat2::identity(f);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= p.num_generators())
      throw Error(Errc::BadGeneratorId, std::to_string(l.gen));
    const Generator& g = p.generators[static_cast<std::size_t>(l.gen)];
    if (l.exp == 1)
      m = m * g.matrix;
    else if (l.exp == -1)
      m = m * g.inverse;
    else
      m = m * mat_power(g.matrix, g.inverse, l.exp, f);
  }
  return m;
}

Word translation_word(const QuadInt& x) {
  Word w;
  w.push(kT1, to_long(x.a()));
  w.push(kTw, to_long(x.b()));
  return w;
}

Word diagonal_unit_word(const QuadInt& u, const AmbientPresentation& p) {
  const Field& f = Field::get(p.d);
  int k = f.unit_log(u);
  int order = static_cast<int>(f.units().size());
  Word w;
  if (k == 0) return w;
  if (2 * k == order) {
    w.push(kS, 2);  // -I
    return w;
  }
  if (!p.has_diagonal_unit()) throw Error(Errc::InternalError, "no diagonal generator");
  w.push(kE, 2 * k < order ? k : k - order);
  return w;
}

Word matrix_to_word(const Mat2& m0, const AmbientPresentation& p) {
  const Field& f = Field::get(p.d);
  if (!m0.det().is_one()) throw Error(Errc::NotUnimodular, to_string(m0));
  Mat2 m = m0;
  Word out;
  Int last_norm;
  bool first = true;
  while (!m.c.is_zero()) {
    Int nc = m.c.norm();
    if (!first && !(nc < last_norm)) throw Error(Errc::InternalError, "continued fraction does not terminate");
    first = false;
    last_norm = nc;
    DivMod qr = f.divmod(m.a, m.c);
    // m = T^q S^-1 m'  with  m' = S T^-q m = [-c, -d; r, b - q d]
    Mat2 next{-m.c, -m.d, qr.r, m.b - qr.q * m.d};
    out.append(translation_word(qr.q));
    out.push(kS, -1);
    m = std::move(next);
  }
  // m = [u, b; 0, u^-1] = diag(u, u^-1) * [1, u^-1 b; 0, 1]
  const QuadInt& u = m.a;
  out.append(diagonal_unit_word(u, p));
  out.append(translation_word(f.unit_inverse(u) * m.b));
  return out;
}

std::string word_to_text(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    for (long i = 0; i < std::labs(l.exp); ++i) {
      if (!first) os << ' ';
      first = false;
      os << (l.exp < 0 ? -(l.gen + 1) : l.gen + 1);
    }
  }
  return os.str();
}

std::string presentation_to_text(const AmbientPresentation& p) {
  std::ostringstream os;
  os << "# SL_2(O_" << p.d << ")  generators: id name [a, b; c, d]   relators: signed 1-based ids\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << "gen " << i + 1 << ' ' << p.generators[i].name << ' ' << to_string(p.generators[i].matrix) << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i) os << "rel " << word_to_text(p.relators[i]) << '\n';
  return os.str();
}

}  // namespace bianchi
