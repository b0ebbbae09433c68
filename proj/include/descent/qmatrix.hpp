#pragma once

#include <map>
#include <vector>

#include "descent/rational.hpp"

namespace descent {

// Sparse matrix over the rationals. Rows hold ordered (column -> value) maps;
// zero entries are never stored.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Zero when the entry is absent.
  const Rational& at(int row, int col) const;
  void set(int row, int col, const Rational& value);
  void add_at(int row, int col, const Rational& value);

  const std::map<int, Rational>& row_entries(int row) const;

  std::size_t nonzero_count() const;
  bool is_zero() const;

  QMatrix transpose() const;
  QMatrix scaled(const Rational& factor) const;

  bool operator==(const QMatrix& other) const;
  bool operator!=(const QMatrix& other) const { return !(*this == other); }

 private:
  int rows_;
  int cols_;
  std::vector<std::map<int, Rational>> data_;

  void check_index(int row, int col) const;
};

// Throws std::invalid_argument on shape mismatch.
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix add(const QMatrix& a, const QMatrix& b);

// Side-by-side concatenation; row counts must agree.
QMatrix hstack(const QMatrix& a, const QMatrix& b);

// Exact rank over the rationals.
int rank(const QMatrix& m);

// Columns form a basis of the null space; column count = cols - rank.
QMatrix kernel_basis(const QMatrix& m);

}  // namespace descent
