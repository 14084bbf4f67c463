#include "bianchi/modlinalg.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "bianchi/errors.hpp"

namespace bianchi {

namespace {

inline Fq mulmod(Fq a, Fq b, Fq q) { return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % q); }
inline Fq submod(Fq a, Fq b, Fq q) { return a >= b ? a - b : a + q - b; }

// row[j] -= f * piv[j] for j >= from
void axpy(Fq* row, const Fq* piv, Fq f, int from, int n, Fq q) {
  if (f == 0) return;
  Fq nf = q - f;
  for (int j = from; j < n; ++j)
    if (piv[j]) row[j] = static_cast<Fq>((row[j] + static_cast<std::uint64_t>(nf) * piv[j]) % q);
}

void check_same_shape(const MatQ& x, const MatQ& y) {
  if (x.q() != y.q() || x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(Errc::ShapeMismatch, "matrix shapes differ");
}

}  // namespace

MatQ::MatQ(Fq q, int rows, int cols)
    : q_(q), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

MatQ MatQ::identity(Fq q, int n) {
  MatQ m(q, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void MatQ::set(int r, int c, long long v) {
  long long m = v % static_cast<long long>(q_);
  if (m < 0) m += q_;
  (*this)(r, c) = static_cast<Fq>(m);
}

void MatQ::append_row(const std::vector<Fq>& v) {
  if (static_cast<int>(v.size()) != cols_) throw Error(Errc::ShapeMismatch, "row length");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool MatQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fq x) { return x == 0; });
}

MatQ MatQ::transpose() const {
  MatQ t(q_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatQ operator*(const MatQ& x, const MatQ& y) {
  if (x.q_ != y.q_ || x.cols_ != y.rows_) throw Error(Errc::ShapeMismatch, "product shapes");
  const Fq q = x.q_;
  MatQ out(q, x.rows_, y.cols_);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(y.cols_));
  for (int i = 0; i < x.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < x.cols_; ++k) {
      Fq a = x(i, k);
      if (!a) continue;
      const Fq* yr = y.row(k);
      for (int j = 0; j < y.cols_; ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(a) * yr[j]) % q;
    }
    for (int j = 0; j < y.cols_; ++j) out(i, j) = static_cast<Fq>(acc[j]);
  }
  return out;
}

MatQ operator+(const MatQ& x, const MatQ& y) {
  check_same_shape(x, y);
  MatQ out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = (x.data_[i] + y.data_[i]) % x.q_;
  return out;
}

MatQ operator-(const MatQ& x, const MatQ& y) {
  check_same_shape(x, y);
  MatQ out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = submod(x.data_[i], y.data_[i], x.q_);
  return out;
}

Fq inv_mod(Fq a, Fq q) {
  long long t = 0, nt = 1, r = q, nr = a % q;
  while (nr) {
    long long k = r / nr;
    t -= k * nt;
    std::swap(t, nt);
    r -= k * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error(Errc::DivisionByZero, "no inverse mod " + std::to_string(q));
  if (t < 0) t += q;
  return static_cast<Fq>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

Echelon rref(MatQ m) {
  const Fq q = m.q();
  const int R = m.rows(), C = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (m(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap_ranges(m.row(p), m.row(p) + C, m.row(r));
    Fq inv = inv_mod(m(r, c), q);
    Fq* pr = m.row(r);
    for (int j = c; j < C; ++j) pr[j] = mulmod(pr[j], inv, q);
    for (int i = 0; i < R; ++i)
      if (i != r) axpy(m.row(i), pr, m(i, c), c, C, q);
    pivots.push_back(c);
    ++r;
  }
  MatQ out(q, r, C);
  for (int i = 0; i < r; ++i) std::copy(m.row(i), m.row(i) + C, out.row(i));
  return {std::move(out), std::move(pivots)};
}

int rank(const MatQ& m) { return static_cast<int>(rref(m).pivots.size()); }

MatQ kernel_basis(const MatQ& m) {
  const Fq q = m.q();
  const int C = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(C), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatQ out(q, 0, C);
  for (int f = 0; f < C; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Fq> v(static_cast<std::size_t>(C), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[static_cast<std::size_t>(e.pivots[i])] = submod(0, e.mat(static_cast<int>(i), f), q);
    out.append_row(v);
  }
  return rref(std::move(out)).mat;
}

MatQ left_kernel_basis(const MatQ& m) { return kernel_basis(m.transpose()); }

MatQ fixed_space(const MatQ& op) {
  if (op.rows() != op.cols()) throw Error(Errc::ShapeMismatch, "fixed_space needs a square matrix");
  return kernel_basis(op - MatQ::identity(op.q(), op.rows()));
}

MatQ row_space_basis(const MatQ& m) { return rref(m).mat; }

MatQ vstack(const MatQ& top, const MatQ& bottom) {
  if (top.cols() != bottom.cols() || top.q() != bottom.q()) throw Error(Errc::ShapeMismatch, "vstack");
  MatQ out(top.q(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i) std::copy(top.row(i), top.row(i) + top.cols(), out.row(i));
  for (int i = 0; i < bottom.rows(); ++i)
    std::copy(bottom.row(i), bottom.row(i) + bottom.cols(), out.row(top.rows() + i));
  return out;
}

MatQ hstack(const MatQ& left, const MatQ& right) {
  if (left.rows() != right.rows() || left.q() != right.q()) throw Error(Errc::ShapeMismatch, "hstack");
  MatQ out(left.q(), left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    std::copy(left.row(i), left.row(i) + left.cols(), out.row(i));
    std::copy(right.row(i), right.row(i) + right.cols(), out.row(i) + left.cols());
  }
  return out;
}

MatQ block_diagonal(const MatQ& x, const MatQ& y) {
  if (x.q() != y.q()) throw Error(Errc::ShapeMismatch, "block_diagonal");
  MatQ out(x.q(), x.rows() + y.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) out(x.rows() + i, x.cols() + j) = y(i, j);
  return out;
}

MatQ power(const MatQ& m, unsigned long k) {
  if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "power of a non-square matrix");
  MatQ r = MatQ::identity(m.q(), m.rows());
  MatQ base = m;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool echelon_coordinates(const Echelon& e, const std::vector<Fq>& v, std::vector<Fq>* coords) {
  const Fq q = e.mat.q();
  const int C = e.mat.cols();
  if (static_cast<int>(v.size()) != C) throw Error(Errc::ShapeMismatch, "vector length");
  std::vector<Fq> rest = v;
  std::vector<Fq> c(e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    c[i] = rest[static_cast<std::size_t>(e.pivots[i])];
    axpy(rest.data(), e.mat.row(static_cast<int>(i)), c[i], 0, C, q);
  }
  bool ok = std::all_of(rest.begin(), rest.end(), [](Fq x) { return x == 0; });
  if (ok && coords) *coords = std::move(c);
  return ok;
}

bool row_space_contains(const Echelon& e, const MatQ& sub) {
  for (int i = 0; i < sub.rows(); ++i)
    if (!echelon_coordinates(e, sub.row_vector(i), nullptr)) return false;
  return true;
}

namespace {

// a -= f * b on sorted sparse rows
SparseRow sparse_axpy(const SparseRow& a, const SparseRow& b, Fq f, Fq q) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  Fq nf = q - f;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, mulmod(nf, b[j].second, q));
      ++j;
    } else {
      Fq v = static_cast<Fq>((a[i].second + static_cast<std::uint64_t>(nf) * b[j].second) % q);
      if (v) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MatQ sparse_kernel_basis(Fq q, int cols, std::vector<SparseRow> rows) {
  constexpr std::size_t kDenseWeight = 48;
  const std::size_t R = rows.size();
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
  std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
  std::vector<bool> active(R, true);
  using Entry = std::pair<std::size_t, std::size_t>;  // (weight, row)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  for (std::size_t r = 0; r < R; ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end());
    SparseRow clean;
    for (auto& [c, v] : row) {
      if (c < 0 || c >= cols) throw Error(Errc::ShapeMismatch, "sparse column out of range");
      Fq x = v % q;
      if (!clean.empty() && clean.back().first == c) {
        clean.back().second = (clean.back().second + x) % q;
        if (!clean.back().second) clean.pop_back();
      } else if (x) {
        clean.emplace_back(c, x);
      }
    }
    row = std::move(clean);
    for (auto& [c, v] : row) {
      col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
      ++col_count[static_cast<std::size_t>(c)];
    }
    heap.emplace(row.size(), r);
  }

  std::vector<int> pivot_col;       // in order of elimination
  std::vector<SparseRow> pivot_row;  // pivot entry normalized to 1
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  bool go_dense = false;

  while (!heap.empty()) {
    auto [w, r] = heap.top();
    heap.pop();
    if (!active[r] || rows[r].size() != w) continue;
    if (w == 0) {
      active[r] = false;
      continue;
    }
    if (w > kDenseWeight) {
      go_dense = true;
      break;
    }
    SparseRow& pr = rows[r];
    int best = -1;
    for (auto& [c, v] : pr)
      if (best < 0 || col_count[static_cast<std::size_t>(c)] < col_count[static_cast<std::size_t>(best)]) best = c;
    Fq inv = 0;
    for (auto& [c, v] : pr)
      if (c == best) inv = inv_mod(v, q);
    for (auto& [c, v] : pr) {
      v = mulmod(v, inv, q);
      --col_count[static_cast<std::size_t>(c)];
    }
    active[r] = false;
    std::vector<int> touched;
    touched.swap(col_rows[static_cast<std::size_t>(best)]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int s : touched) {
      auto su = static_cast<std::size_t>(s);
      if (!active[su]) continue;
      SparseRow& sr = rows[su];
      auto it = std::lower_bound(sr.begin(), sr.end(), std::make_pair(best, Fq{0}));
      if (it == sr.end() || it->first != best) continue;
      for (auto& [c, v] : sr) --col_count[static_cast<std::size_t>(c)];
      SparseRow next = sparse_axpy(sr, pr, it->second, q);
      for (auto& [c, v] : next) ++col_count[static_cast<std::size_t>(c)];
      // register s under every column it may newly contain
      std::size_t a = 0;
      for (auto& [c, v] : next) {
        while (a < sr.size() && sr[a].first < c) ++a;
        if (a == sr.size() || sr[a].first != c) col_rows[static_cast<std::size_t>(c)].push_back(s);
      }
      sr = std::move(next);
      heap.emplace(sr.size(), su);
    }
    is_pivot[static_cast<std::size_t>(best)] = true;
    pivot_col.push_back(best);
    pivot_row.push_back(std::move(pr));
    pr.clear();
  }

  if (go_dense) {
    std::vector<int> rest_cols;
    std::vector<int> pos(static_cast<std::size_t>(cols), -1);
    for (int c = 0; c < cols; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) {
        pos[static_cast<std::size_t>(c)] = static_cast<int>(rest_cols.size());
        rest_cols.push_back(c);
      }
    MatQ dense(q, 0, static_cast<int>(rest_cols.size()));
    for (std::size_t r = 0; r < R; ++r) {
      if (!active[r] || rows[r].empty()) continue;
      std::vector<Fq> v(rest_cols.size(), 0);
      for (auto& [c, x] : rows[r]) v[static_cast<std::size_t>(pos[static_cast<std::size_t>(c)])] = x;
      dense.append_row(v);
      // reduce early to keep the dense block small
      if (dense.rows() > 2 * dense.cols() + 64) dense = rref(std::move(dense)).mat;
    }
    Echelon e = rref(std::move(dense));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      SparseRow sr;
      const Fq* row = e.mat.row(static_cast<int>(i));
      for (std::size_t j = 0; j < rest_cols.size(); ++j)
        if (row[j]) sr.emplace_back(rest_cols[j], row[j]);
      int c = rest_cols[static_cast<std::size_t>(e.pivots[i])];
      is_pivot[static_cast<std::size_t>(c)] = true;
      pivot_col.push_back(c);
      pivot_row.push_back(std::move(sr));
    }
  }

  // Back substitution: each pivot row only involves its own pivot, pivots
  // eliminated later and free columns.
  std::vector<int> free_pos(static_cast<std::size_t>(cols), -1);
  int nfree = 0;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_pos[static_cast<std::size_t>(c)] = nfree++;
  std::vector<int> pivot_index(static_cast<std::size_t>(cols), -1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) pivot_index[static_cast<std::size_t>(pivot_col[i])] = static_cast<int>(i);
  std::vector<std::vector<Fq>> value(pivot_col.size());
  for (std::size_t ii = pivot_col.size(); ii-- > 0;) {
    std::vector<Fq> v(static_cast<std::size_t>(nfree), 0);
    for (auto& [c, x] : pivot_row[ii]) {
      if (c == pivot_col[ii]) continue;
      Fq nx = q - x;
      int fp = free_pos[static_cast<std::size_t>(c)];
      if (fp >= 0) {
        v[static_cast<std::size_t>(fp)] = static_cast<Fq>((v[static_cast<std::size_t>(fp)] + nx) % q);
      } else {
        const auto& w = value[static_cast<std::size_t>(pivot_index[static_cast<std::size_t>(c)])];
        for (int k = 0; k < nfree; ++k)
          if (w[static_cast<std::size_t>(k)])
            v[static_cast<std::size_t>(k)] =
                static_cast<Fq>((v[static_cast<std::size_t>(k)] + static_cast<std::uint64_t>(nx) * w[static_cast<std::size_t>(k)]) % q);
      }
    }
    value[ii] = std::move(v);
  }
  MatQ out(q, nfree, cols);
  for (int c = 0; c < cols; ++c) {
    int fp = free_pos[static_cast<std::size_t>(c)];
    if (fp >= 0) {
      out(fp, c) = 1;
    } else {
      const auto& w = value[static_cast<std::size_t>(pivot_index[static_cast<std::size_t>(c)])];
      for (int k = 0; k < nfree; ++k) out(k, c) = w[static_cast<std::size_t>(k)];
    }
  }
  return rref(std::move(out)).mat;
}

std::string to_string(const MatQ& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace bianchi
