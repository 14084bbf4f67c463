#include "bianchi/schreier.hpp"

#include <algorithm>
#include <deque>

namespace bianchi {

void merge_terms(IntRow& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int c = terms[i].first;
    long long v = 0;
    for (; i < terms.size() && terms[i].first == c; ++i) v += terms[i].second;
    if (v) terms[out++] = {c, v};
  }
  terms.resize(out);
}

CongCtx::CongCtx(const PIdeal& level, const AmbientPresentation& pres, const BuildOptions& opt)
    : level_(level),
      pres_(std::make_shared<const AmbientPresentation>(pres)),
      p1_(std::make_shared<const ProjectiveLine>(level)) {
  const Field& f = field();
  const int G = pres.num_generators();
  const int n = p1_->size();
  base_ = p1_->normalize(f.zero(), f.one()).index;

  fwd_.assign(static_cast<std::size_t>(G), std::vector<int>(static_cast<std::size_t>(n)));
  bwd_ = fwd_;
  for (int g = 0; g < G; ++g)
    for (int x = 0; x < n; ++x) {
      int y = p1_->apply(pres.generators[static_cast<std::size_t>(g)].matrix, x);
      fwd_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = y;
      bwd_[static_cast<std::size_t>(g)][static_cast<std::size_t>(y)] = x;
    }

  std::vector<int> order = opt.generator_order;
  if (order.empty())
    for (int g = 0; g < G; ++g) order.push_back(g);
  for (int g : order)
    if (g < 0 || g >= G) throw Error(Errc::BadGeneratorId, std::to_string(g));

  // BFS spanning tree; tree edges are stored as (coset, gen) with x.g = y.
  transversal_.assign(static_cast<std::size_t>(n), Word());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<bool>> tree(static_cast<std::size_t>(G), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::deque<int> queue{base_};
  seen[static_cast<std::size_t>(base_)] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : order) {
      for (int e : {1, -1}) {
        int y = e > 0 ? act(g, x) : act_inverse(g, x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        Word w = transversal_[static_cast<std::size_t>(x)];
        w.push(g, e);
        transversal_[static_cast<std::size_t>(y)] = std::move(w);
        if (e > 0)
          tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = true;
        else
          tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(Errc::InternalError, "coset graph is not connected");

  tmat_.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) tmat_.push_back(word_to_matrix(transversal_[static_cast<std::size_t>(x)], pres));

  column_.assign(static_cast<std::size_t>(G), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int g = 0; g < G; ++g) {
    const Generator& gen = pres.generators[static_cast<std::size_t>(g)];
    for (int x = 0; x < n; ++x) {
      if (tree[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]) continue;
      int y = act(g, x);
      column_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = static_cast<int>(sgens_.size());
      Mat2 m = tmat_[static_cast<std::size_t>(x)] * gen.matrix * tmat_[static_cast<std::size_t>(y)].inverse(f);
      sgens_.push_back({x, g, std::move(m)});
    }
  }

  cycle_id_.assign(static_cast<std::size_t>(G), std::vector<int>(static_cast<std::size_t>(n), -1));
  cycle_pos_ = cycle_id_;
  cycles_.assign(static_cast<std::size_t>(G), {});
  for (int g = 0; g < G; ++g) {
    auto& ids = cycle_id_[static_cast<std::size_t>(g)];
    for (int x = 0; x < n; ++x) {
      if (ids[static_cast<std::size_t>(x)] >= 0) continue;
      std::vector<int> cyc;
      int id = static_cast<int>(cycles_[static_cast<std::size_t>(g)].size());
      for (int y = x; ids[static_cast<std::size_t>(y)] < 0; y = act(g, y)) {
        ids[static_cast<std::size_t>(y)] = id;
        cycle_pos_[static_cast<std::size_t>(g)][static_cast<std::size_t>(y)] = static_cast<int>(cyc.size());
        cyc.push_back(y);
      }
      cycles_[static_cast<std::size_t>(g)].push_back(std::move(cyc));
    }
  }
}

int CongCtx::column(int coset, int gen) const {
  return column_.at(static_cast<std::size_t>(gen)).at(static_cast<std::size_t>(coset));
}

int CongCtx::coset_of(const Mat2& m) const { return p1_->normalize(m.c, m.d).index; }

bool CongCtx::membership(const Mat2& m) const { return m.det().is_one() && level_.contains(m.c); }

void CongCtx::add_syllable(int gen, long exp, int& x, IntRow& terms) const {
  const auto g = static_cast<std::size_t>(gen);
  const auto& cyc = cycles_[g][static_cast<std::size_t>(cycle_id_[g][static_cast<std::size_t>(x)])];
  const long L = static_cast<long>(cyc.size());
  const long p = cycle_pos_[g][static_cast<std::size_t>(x)];
  const long k = std::labs(exp);
  const long full = k / L, rem = k % L;
  const long long sign = exp > 0 ? 1 : -1;
  const auto& cols = column_[g];
  if (full)
    for (int y : cyc) {
      int c = cols[static_cast<std::size_t>(y)];
      if (c >= 0) terms.emplace_back(c, sign * full);
    }
  // forward visits positions p .. p+rem-1, backward p-1 .. p-rem
  for (long i = 0; i < rem; ++i) {
    long pos = exp > 0 ? (p + i) % L : ((p - 1 - i) % L + L) % L;
    int c = cols[static_cast<std::size_t>(cyc[static_cast<std::size_t>(pos)])];
    if (c >= 0) terms.emplace_back(c, sign);
  }
  long end = ((p + (exp > 0 ? k : -k)) % L + L) % L;
  x = cyc[static_cast<std::size_t>(end)];
}

int CongCtx::rewrite_into(const Word& w, int start, IntRow& terms) const {
  int x = start;
  const int G = pres_->num_generators();
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= G) throw Error(Errc::BadGeneratorId, std::to_string(l.gen));
    add_syllable(l.gen, l.exp, x, terms);
  }
  return x;
}

IntRow CongCtx::rewrite(const Word& w) const {
  IntRow terms;
  if (rewrite_into(w, base_, terms) != base_) throw Error(Errc::NotInSubgroup, "word leaves the subgroup");
  merge_terms(terms);
  return terms;
}

IntRow CongCtx::express(const Mat2& m) const {
  if (!membership(m)) throw Error(Errc::NotInSubgroup, to_string(m) + " at level " + to_string(level_));
  return rewrite(matrix_to_word(m, *pres_));
}

std::vector<IntRow> CongCtx::relator_matrix() const {
  std::vector<IntRow> rows;
  rows.reserve(pres_->relators.size() * static_cast<std::size_t>(num_cosets()));
  for (const Word& r : pres_->relators)
    for (int x = 0; x < num_cosets(); ++x) {
      IntRow terms;
      if (rewrite_into(r, x, terms) != x) throw Error(Errc::InternalError, "relator moves a coset");
      merge_terms(terms);
      rows.push_back(std::move(terms));
    }
  return rows;
}

CongCtx build_congruence(const PIdeal& level, const BuildOptions& opt) {
  return CongCtx(level, builtin_presentation(level.field()), opt);
}

}  // namespace bianchi
