#pragma once

// Reidemeister-Schreier data for Gamma_0(n) in SL_2(O_d): the coset table on
// P^1(O/n), a BFS transversal, Schreier generators and abelianized rewriting.

#include <memory>
#include <vector>

#include "bianchi/fpres.hpp"
#include "bianchi/projline.hpp"

namespace bianchi {

// Sorted (column, coefficient) pairs without zeros.
using IntRow = std::vector<std::pair<int, long long>>;

struct SchreierGen {
  int coset;
  int gen;
  Mat2 matrix;  // t_coset * g * t_(coset.g)^-1
};

struct BuildOptions {
  // Order in which generators are tried while growing the spanning tree.
  // Empty means 0, 1, 2, ...
  std::vector<int> generator_order;
};

class CongCtx {
 public:
  CongCtx(const PIdeal& level, const AmbientPresentation& pres, const BuildOptions& opt = {});

  const PIdeal& level() const noexcept { return level_; }
  const Field& field() const { return level_.field(); }
  const AmbientPresentation& presentation() const noexcept { return *pres_; }
  const ProjectiveLine& p1() const noexcept { return *p1_; }

  int num_cosets() const noexcept { return p1_->size(); }
  int base_coset() const noexcept { return base_; }
  int act(int gen, int coset) const { return fwd_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(coset)]; }
  int act_inverse(int gen, int coset) const { return bwd_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(coset)]; }
  // Coset of Gamma_0(n) * m.
  int coset_of(const Mat2& m) const;

  const Word& transversal(int x) const { return transversal_[static_cast<std::size_t>(x)]; }
  const Mat2& transversal_matrix(int x) const { return tmat_[static_cast<std::size_t>(x)]; }

  int num_sgens() const noexcept { return static_cast<int>(sgens_.size()); }
  const SchreierGen& sgen(int i) const { return sgens_[static_cast<std::size_t>(i)]; }
  const std::vector<SchreierGen>& sgens() const noexcept { return sgens_; }
  // Column of the Schreier generator at edge (coset, gen), -1 on tree edges.
  int column(int coset, int gen) const;

  bool membership(const Mat2& m) const;

  // Abelianized rewriting of w read from coset `start`. Appends unmerged
  // terms and returns the final coset.
  int rewrite_into(const Word& w, int start, IntRow& terms) const;
  // Throws NotInSubgroup unless w returns to the base coset.
  IntRow rewrite(const Word& w) const;
  IntRow express(const Mat2& m) const;

  // One row per (relator, coset): rewrite of t_x R t_x^-1.
  std::vector<IntRow> relator_matrix() const;

 private:
  void add_syllable(int gen, long exp, int& x, IntRow& terms) const;

  PIdeal level_;
  std::shared_ptr<const AmbientPresentation> pres_;
  std::shared_ptr<const ProjectiveLine> p1_;
  int base_ = 0;
  std::vector<std::vector<int>> fwd_, bwd_;
  std::vector<Word> transversal_;
  std::vector<Mat2> tmat_;
  std::vector<std::vector<int>> column_;  // [gen][coset]
  std::vector<SchreierGen> sgens_;
  // per generator: cycle id and position of each coset, and the cycles
  std::vector<std::vector<int>> cycle_id_, cycle_pos_;
  std::vector<std::vector<std::vector<int>>> cycles_;
};

CongCtx build_congruence(const PIdeal& level, const BuildOptions& opt = {});

// Sorts by column, merges duplicates and drops zeros.
void merge_terms(IntRow& terms);

}  // namespace bianchi
