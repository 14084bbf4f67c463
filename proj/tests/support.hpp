#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bianchi/schreier.hpp"

namespace bianchi::testing {

// Random element of Gamma_0(n): a random word times the inverse transversal.
inline Mat2 random_element(const CongCtx& cc, std::mt19937_64& rng, int length = 12) {
  const auto& p = cc.presentation();
  std::uniform_int_distribution<int> gen(0, p.num_generators() - 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push(gen(rng), (rng() & 1) ? 1 : -1);
  Mat2 g = word_to_matrix(w, p);
  return g * cc.transversal_matrix(cc.coset_of(g)).inverse(cc.field());
}

inline std::vector<PIdeal> ideals_up_to(const Field& f, long bound) {
  std::map<std::pair<long, std::string>, PIdeal> seen;
  for (long a = -40; a <= 40; ++a)
    for (long b = -40; b <= 40; ++b) {
      QuadInt x = f.make(a, b);
      if (x.is_zero() || x.norm() > bound) continue;
      PIdeal n(f, x);
      seen.emplace(std::pair{n.norm().get_si(), to_string(n)}, n);
    }
  std::vector<PIdeal> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

// |P^1(O/n)| by brute force: pairs of residues not both in a prime divisor,
// divided by the number of units of O/n.
inline long brute_p1_size(const PIdeal& n) {
  const Field& f = n.field();
  ResidueSystem R(n);
  auto reps = R.reps();
  auto primes = factor(n);
  const std::size_t P = primes.size();
  long units = 0, prim = 0;
  for (const QuadInt& u : reps)
    if (f.gcd(u, n.gen()).norm() == 1) ++units;
  std::vector<bool> in_p(reps.size() * P);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = 0; k < P; ++k) in_p[i * P + k] = primes[k].prime.contains(reps[i]);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < P && ok; ++k)
        if (in_p[i * P + k] && in_p[j * P + k]) ok = false;
      prim += ok;
    }
  return prim / units;
}

// Words w * NF(w)^-1 for random w; they are trivial in the group, so adding
// them as relators must not change any cohomology.
inline std::vector<Word> candidate_relators(const AmbientPresentation& p, std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> gen(0, p.num_generators() - 1);
  std::uniform_int_distribution<int> ex(-3, 3);
  std::vector<Word> out;
  while (static_cast<int>(out.size()) < count) {
    Word w;
    for (int i = 0; i < 10; ++i) w.push(gen(rng), ex(rng));
    Word r = w * matrix_to_word(word_to_matrix(w, p), p).inverse();
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bianchi::testing
