#include "charcol/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace charcol {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Entry> entries) : rows_(rows), cols_(cols) {
  std::map<std::pair<int, int>, Integer> acc;
  for (auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw std::out_of_range("sparse entry outside the matrix");
    acc[{e.col, e.row}] += e.value;
  }
  for (auto& [key, v] : acc)
    if (v != 0) entries_.push_back({key.second, key.first, v});
}

SparseMatrix SparseMatrix::identity(int n) {
  std::vector<Entry> e;
  for (int i = 0; i < n; ++i) e.push_back({i, i, 1});
  return SparseMatrix(n, n, std::move(e));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  int rows = static_cast<int>(dense.size());
  int cols = rows ? static_cast<int>(dense[0].size()) : 0;
  std::vector<Entry> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (dense[r][c] != 0) e.push_back({r, c, dense[r][c]});
  return SparseMatrix(rows, cols, std::move(e));
}

Integer SparseMatrix::at(int row, int col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(col, row),
                             [](const Entry& e, const std::pair<int, int>& key) {
                               return std::make_pair(e.col, e.row) < key;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (auto& x : entries_) e.push_back({x.col, x.row, x.value});
  return SparseMatrix(cols_, rows_, std::move(e));
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
  for (auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

std::vector<SparseMatrix::Entry> SparseMatrix::row_major() const {
  auto e = entries_;
  std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
    return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
  });
  return e;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matvec dimension mismatch");
  std::vector<Rational> out(rows_, 0);
  for (auto& e : entries_)
    if (v[e.col] != 0) out[e.row] += e.value * v[e.col];
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  // column j of a*b = sum_k b(k,j) * column k of a
  std::vector<std::vector<const SparseMatrix::Entry*>> a_cols(a.cols_);
  for (auto& e : a.entries_) a_cols[e.col].push_back(&e);
  std::vector<SparseMatrix::Entry> out;
  for (auto& eb : b.entries_)
    for (auto* ea : a_cols[eb.row]) out.push_back({ea->row, eb.col, ea->value * eb.value});
  return SparseMatrix(a.rows_, b.cols_, std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  auto e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return SparseMatrix(a.rows_, a.cols_, std::move(e));
}

SparseMatrix operator*(const Integer& s, const SparseMatrix& a) {
  auto e = a.entries_;
  for (auto& x : e) x.value *= s;
  return SparseMatrix(a.rows_, a.cols_, std::move(e));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Integer(-1) * b; }

int rational_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (auto& e : m.entries()) d[e.row][e.col] = e.value;
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (d[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(d[pivot], d[rank]);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (d[r][col] == 0) continue;
      Rational f = d[r][col] / d[rank][col];
      for (int c = col; c < m.cols(); ++c) d[r][c] -= f * d[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace charcol
