#pragma once

#include <map>
#include <string>
#include <utility>

#include "descent/cochain.hpp"

namespace descent {

// First-quadrant double complex. horiz at (i,j) maps to (i+1,j), vert to
// (i,j+1). Stored maps must anticommute: vert*horiz + horiz*vert = 0, so any
// construction from a commuting grid applies its column sign before storing.
class DoubleComplex {
 public:
  using Cell = std::pair<int, int>;

  int dim_at(int i, int j) const;
  QMatrix horiz(int i, int j) const;
  QMatrix vert(int i, int j) const;

  void set_dim(int i, int j, int dim);
  void set_horiz(int i, int j, QMatrix m);
  void set_vert(int i, int j, QMatrix m);

  // Bounding box of nonzero cells; (-1,-1) when empty.
  int max_i() const;
  int max_j() const;

  const std::map<Cell, int>& dims() const { return dims_; }

 private:
  std::map<Cell, int> dims_;
  std::map<Cell, QMatrix> horiz_;
  std::map<Cell, QMatrix> vert_;
};

struct DoubleReport {
  bool ok = true;
  int i = 0;
  int j = 0;
  std::string message;
};

// Checks shapes, horiz*horiz = 0, vert*vert = 0, and anticommutation; reports
// the first violating cell.
DoubleReport validate_double_complex(const DoubleComplex& d);

// Tot^n = direct sum over i+j = n (blocks ordered by i); differential blocks
// are the stored horiz and vert maps.
CochainComplex total_complex(const DoubleComplex& d);

// Keeps cells with i+j <= q+1; maps whose target falls outside become zero.
// Cell labels are not reindexed.
DoubleComplex truncate(const DoubleComplex& d, int q);

long long euler_characteristic(const DoubleComplex& d);

enum class Filtration { row, column };

// Page dimensions for r = 1 or 2. Row filtration takes horizontal cohomology
// first; column filtration takes vertical first.
struct Page {
  int r = 1;
  Filtration filtration = Filtration::row;
  std::map<std::pair<int, int>, int> dims;

  int dim_at(int i, int j) const {
    auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }
};

Page page(const DoubleComplex& d, Filtration filtration, int r);

}  // namespace descent
