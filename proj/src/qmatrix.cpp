#include "descent/qmatrix.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace descent {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational value(text);
    // mpq_rational accepts "a/0" and unreduced fractions as-is; reject the
    // former and reduce the latter here.
    if (denominator(value) == 0) throw std::invalid_argument("zero denominator");
    mpq_canonicalize(value.backend().data());
    return value;
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::size_t rational_bits(const Rational& value) {
  if (value == 0) return 1;
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  return mpz_sizeinbase(num.backend().data(), 2) +
         mpz_sizeinbase(den.backend().data(), 2);
}

namespace {
const Rational kZero{};
}  // namespace

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

void QMatrix::check_index(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("matrix index out of range");
}

const Rational& QMatrix::at(int row, int col) const {
  check_index(row, col);
  const auto& entries = data_[row];
  auto it = entries.find(col);
  return it == entries.end() ? kZero : it->second;
}

void QMatrix::set(int row, int col, const Rational& value) {
  check_index(row, col);
  if (value == 0)
    data_[row].erase(col);
  else
    data_[row][col] = value;
}

void QMatrix::add_at(int row, int col, const Rational& value) {
  check_index(row, col);
  auto& entries = data_[row];
  auto it = entries.find(col);
  if (it == entries.end()) {
    if (value != 0) entries.emplace(col, value);
    return;
  }
  it->second += value;
  if (it->second == 0) entries.erase(it);
}

const std::map<int, Rational>& QMatrix::row_entries(int row) const {
  if (row < 0 || row >= rows_) throw std::out_of_range("row out of range");
  return data_[row];
}

std::size_t QMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool QMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.set(c, r, v);
  return t;
}

QMatrix QMatrix::scaled(const Rational& factor) const {
  QMatrix s(rows_, cols_);
  if (factor == 0) return s;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) s.set(r, c, v * factor);
  return s;
}

bool QMatrix::operator==(const QMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& [k, av] : a.row_entries(r)) {
      for (const auto& [c, bv] : b.row_entries(k)) {
        out.add_at(r, c, av * bv);
      }
    }
  }
  return out;
}

QMatrix add(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add dimension mismatch");
  QMatrix out = a;
  for (int r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row_entries(r)) out.add_at(r, c, v);
  return out;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack row count mismatch");
  QMatrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row_entries(r)) out.set(r, c, v);
    for (const auto& [c, v] : b.row_entries(r)) out.set(r, a.cols() + c, v);
  }
  return out;
}

namespace {

// Row echelon elimination shared by rank and kernel_basis. Pivot rows are
// frozen once chosen; remaining rows keep only columns right of used pivots.
struct Echelon {
  // (pivot column, frozen row) in the order pivots were chosen.
  std::vector<std::pair<int, std::map<int, Rational>>> pivots;
  int cols = 0;
};

Echelon eliminate(const QMatrix& m) {
  Echelon result;
  result.cols = m.cols();
  std::vector<std::map<int, Rational>> active;
  active.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_entries(r).empty()) active.push_back(m.row_entries(r));

  for (int col = 0; col < m.cols() && !active.empty(); ++col) {
    // Pick the pivot with the smallest entry bit size, then fewest nonzeros,
    // to limit coefficient growth.
    std::size_t best = active.size();
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < active.size(); ++i) {
      auto it = active[i].find(col);
      if (it == active[i].end()) continue;
      std::size_t bits = rational_bits(it->second);
      std::size_t nnz = active[i].size();
      if (bits < best_bits || (bits == best_bits && nnz < best_nnz)) {
        best = i;
        best_bits = bits;
        best_nnz = nnz;
      }
    }
    if (best == active.size()) continue;

    std::map<int, Rational> pivot_row = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    const Rational pivot_value = pivot_row.at(col);

    for (auto& row : active) {
      auto it = row.find(col);
      if (it == row.end()) continue;
      const Rational factor = it->second / pivot_value;
      row.erase(it);
      for (const auto& [c, v] : pivot_row) {
        if (c == col) continue;
        auto jt = row.find(c);
        if (jt == row.end()) {
          row.emplace(c, -factor * v);
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    std::erase_if(active, [](const std::map<int, Rational>& r) { return r.empty(); });
    result.pivots.emplace_back(col, std::move(pivot_row));
  }
  return result;
}

}  // namespace

int rank(const QMatrix& m) { return static_cast<int>(eliminate(m).pivots.size()); }

QMatrix kernel_basis(const QMatrix& m) {
  Echelon e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [col, row] : e.pivots) is_pivot[col] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix basis(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::map<int, Rational> x;
    x[free_cols[k]] = Rational(1);
    // Pivot rows still hold entries at later pivot columns, so substitute in
    // decreasing pivot-column order.
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      const int pcol = it->first;
      const auto& row = it->second;
      Rational sum = 0;
      for (const auto& [c, v] : row) {
        if (c == pcol) continue;
        auto xt = x.find(c);
        if (xt != x.end()) sum += v * xt->second;
      }
      if (sum != 0) x[pcol] = -sum / row.at(pcol);
    }
    for (const auto& [r, v] : x) basis.set(r, static_cast<int>(k), v);
  }
  return basis;
}

}  // namespace descent
