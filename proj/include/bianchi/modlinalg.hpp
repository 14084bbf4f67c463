#pragma once

// Linear algebra over the prime field Z/q.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bianchi {

using Fq = std::uint32_t;

class MatQ {
 public:
  MatQ() = default;
  MatQ(Fq q, int rows, int cols);

  static MatQ identity(Fq q, int n);

  Fq q() const noexcept { return q_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Fq operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fq& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Fq* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  Fq* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  // Stores v mod q at (r, c); v may be negative.
  void set(int r, int c, long long v);
  std::vector<Fq> row_vector(int r) const { return {row(r), row(r) + cols_}; }
  void append_row(const std::vector<Fq>& v);

  bool is_zero() const;
  MatQ transpose() const;

  friend MatQ operator*(const MatQ& x, const MatQ& y);
  friend MatQ operator+(const MatQ& x, const MatQ& y);
  friend MatQ operator-(const MatQ& x, const MatQ& y);
  friend bool operator==(const MatQ& x, const MatQ& y) {
    return x.q_ == y.q_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const MatQ& x, const MatQ& y) { return !(x == y); }

 private:
  Fq q_ = 2;
  int rows_ = 0, cols_ = 0;
  std::vector<Fq> data_;
};

Fq inv_mod(Fq a, Fq q);
bool is_prime_u64(std::uint64_t n);

struct Echelon {
  MatQ mat;  // reduced row echelon form with zero rows dropped
  std::vector<int> pivots;
};

Echelon rref(MatQ m);
int rank(const MatQ& m);
// Rows form the reduced echelon basis of {v : m v = 0}.
MatQ kernel_basis(const MatQ& m);
// {v : v m = 0}, also reduced echelon.
MatQ left_kernel_basis(const MatQ& m);
// kernel_basis(op - 1). Throws ShapeMismatch for non-square input.
MatQ fixed_space(const MatQ& op);
MatQ row_space_basis(const MatQ& m);
MatQ vstack(const MatQ& top, const MatQ& bottom);
MatQ hstack(const MatQ& left, const MatQ& right);
MatQ block_diagonal(const MatQ& x, const MatQ& y);
MatQ power(const MatQ& m, unsigned long k);

// Coordinates of v in a reduced echelon basis; false if v is not in the span.
bool echelon_coordinates(const Echelon& e, const std::vector<Fq>& v, std::vector<Fq>* coords);
// True iff the row space of sub lies in the row space spanned by e.
bool row_space_contains(const Echelon& e, const MatQ& sub);

// Sparse rows as (column, value) pairs with values already reduced mod q.
using SparseRow = std::vector<std::pair<int, Fq>>;

// Right kernel of the sparse matrix with the given rows, returned as a dense
// reduced echelon basis. Uses Markowitz-ordered elimination and falls back to
// dense elimination when fill-in makes the remainder dense.
MatQ sparse_kernel_basis(Fq q, int cols, std::vector<SparseRow> rows);

std::string to_string(const MatQ& m);

}  // namespace bianchi
