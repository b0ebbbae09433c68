#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "descent/qmatrix.hpp"

namespace {

using descent::QMatrix;
using descent::Rational;

// Independent rank oracle: dense elimination with first-nonzero pivoting,
// sharing no code or pivot strategy with the library implementation.
int dense_rank(std::vector<std::vector<Rational>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)] == 0) {
        continue;
      }
      const Rational factor =
          row[static_cast<std::size_t>(c)] /
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        row[static_cast<std::size_t>(j)] -=
            factor * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> to_dense(const QMatrix& m) {
  std::vector<std::vector<Rational>> out(
      static_cast<std::size_t>(m.rows()),
      std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, value] : m.row_entries(r)) {
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
    }
  }
  return out;
}

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      m.set(i, j, Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

QMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  static const std::vector<Rational> pool = {
      Rational(0),  Rational(0),  Rational(0),    Rational(1),
      Rational(-1), Rational(2),  Rational(1, 2), Rational(-1, 3),
      Rational(5),  Rational(-7, 4)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.set(r, c, pool[pick(rng)]);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rational literals parse, format, and canonicalize") {
  CHECK(descent::parse_rational("3/4") == Rational(3, 4));
  CHECK(descent::parse_rational("-2") == Rational(-2));
  CHECK(descent::parse_rational("0") == Rational(0));
  CHECK(descent::parse_rational("2/4") == Rational(1, 2));
  CHECK(descent::parse_rational("-6/4") == Rational(-3, 2));
  CHECK(descent::format_rational(Rational(3, 4)) == "3/4");
  CHECK(descent::format_rational(Rational(-2)) == "-2");
  CHECK(descent::format_rational(Rational(0)) == "0");
  CHECK(descent::format_rational(descent::parse_rational("2/4")) == "1/2");
  CHECK_THROWS_AS(descent::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(descent::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(descent::parse_rational("ten"), std::invalid_argument);
  CHECK_THROWS_AS(descent::parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("matrix storage drops zeros and round-trips entries") {
  QMatrix m(2, 3);
  CHECK(m.is_zero());
  m.set(0, 1, Rational(5));
  m.set(1, 2, Rational(-1, 2));
  CHECK(m.at(0, 1) == Rational(5));
  CHECK(m.at(0, 0) == Rational(0));
  CHECK(m.nonzero_count() == 2);
  m.set(0, 1, Rational(0));
  CHECK(m.nonzero_count() == 1);
  m.add_at(1, 2, Rational(1, 2));
  CHECK(m.is_zero());
  CHECK_THROWS_AS(m.set(2, 0, Rational(1)), std::out_of_range);
}

TEST_CASE("matrix product matches a hand computation") {
  const QMatrix a = from_rows({{1, 2, 0}, {0, -1, 3}});
  const QMatrix b = from_rows({{2, 1}, {0, 1}, {1, 1}});
  const QMatrix expected = from_rows({{2, 3}, {3, 2}});
  CHECK(matmul(a, b) == expected);
  CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
  CHECK(add(a, a) == a.scaled(Rational(2)));
  const QMatrix stacked = hstack(a, a);
  CHECK(stacked.cols() == 6);
  CHECK(stacked.at(1, 5) == Rational(3));
  CHECK(a.transpose().at(2, 1) == Rational(3));
}

TEST_CASE("rank matches hand-checked values") {
  CHECK(descent::rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(descent::rank(QMatrix::identity(3)) == 3);
  CHECK(descent::rank(QMatrix(4, 5)) == 0);
  CHECK(descent::rank(QMatrix(0, 3)) == 0);
  // Rows 1 and 2 sum to row 3.
  CHECK(descent::rank(from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {0, 0, 0}})) == 2);
  QMatrix fractions(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      fractions.set(i, j, Rational(1, i + j + 1));
    }
  }
  CHECK(descent::rank(fractions) == 3);
}

TEST_CASE("kernel basis spans the null space") {
  const QMatrix row = from_rows({{1, 1, 1}});
  const QMatrix kernel = descent::kernel_basis(row);
  REQUIRE(kernel.cols() == 2);
  CHECK(matmul(row, kernel).is_zero());
  CHECK(descent::rank(kernel) == 2);
  CHECK(descent::kernel_basis(QMatrix::identity(4)).cols() == 0);
  const QMatrix zero_map(3, 4);
  CHECK(descent::kernel_basis(zero_map).cols() == 4);
}

TEST_CASE("rank and kernel agree with a dense oracle on random matrices") {
  std::mt19937 rng(20240816);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const QMatrix m = random_matrix(rng, size(rng), size(rng));
    const int expected = dense_rank(to_dense(m));
    const int got = descent::rank(m);
    INFO("trial " << trial << ": " << m.rows() << "x" << m.cols());
    CHECK(got == expected);
    CHECK(descent::rank(m.transpose()) == expected);
    const QMatrix kernel = descent::kernel_basis(m);
    CHECK(kernel.cols() == m.cols() - expected);
    CHECK(matmul(m, kernel).is_zero());
    CHECK(descent::rank(kernel) == kernel.cols());
  }
}
