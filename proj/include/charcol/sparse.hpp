#pragma once

#include <vector>

#include "charcol/exact.hpp"

namespace charcol {

/// Sparse integer matrix in column-compressed triplet form: entries sorted
/// by (col, row), no stored zeros.
class SparseMatrix {
 public:
  struct Entry {
    int row;
    int col;
    Integer value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  /// Sums duplicates and drops zeros.
  SparseMatrix(int rows, int cols, std::vector<Entry> entries);

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Integer at(int row, int col) const;

  SparseMatrix transpose() const;
  std::vector<std::vector<Integer>> to_dense() const;
  /// Entries sorted by (row, col), the order used in dumps.
  std::vector<Entry> row_major() const;

  /// this * v
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Integer& s, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

/// Rank over the rationals by fraction-free elimination on a dense copy.
int rational_rank(const SparseMatrix& m);

}  // namespace charcol
