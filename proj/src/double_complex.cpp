#include "descent/double_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace descent {

int DoubleComplex::dim_at(int i, int j) const {
  auto it = dims_.find({i, j});
  return it == dims_.end() ? 0 : it->second;
}

QMatrix DoubleComplex::horiz(int i, int j) const {
  auto it = horiz_.find({i, j});
  if (it != horiz_.end()) return it->second;
  return QMatrix(dim_at(i + 1, j), dim_at(i, j));
}

QMatrix DoubleComplex::vert(int i, int j) const {
  auto it = vert_.find({i, j});
  if (it != vert_.end()) return it->second;
  return QMatrix(dim_at(i, j + 1), dim_at(i, j));
}

void DoubleComplex::set_dim(int i, int j, int dim) {
  if (i < 0 || j < 0) throw std::invalid_argument("cell outside first quadrant");
  if (dim < 0) throw std::invalid_argument("negative cell dimension");
  if (dim == 0)
    dims_.erase({i, j});
  else
    dims_[{i, j}] = dim;
}

void DoubleComplex::set_horiz(int i, int j, QMatrix m) {
  if (i < 0 || j < 0) throw std::invalid_argument("cell outside first quadrant");
  if (m.is_zero())
    horiz_.erase({i, j});
  else
    horiz_[{i, j}] = std::move(m);
}

void DoubleComplex::set_vert(int i, int j, QMatrix m) {
  if (i < 0 || j < 0) throw std::invalid_argument("cell outside first quadrant");
  if (m.is_zero())
    vert_.erase({i, j});
  else
    vert_[{i, j}] = std::move(m);
}

int DoubleComplex::max_i() const {
  int m = -1;
  for (const auto& [cell, dim] : dims_) m = std::max(m, cell.first);
  return m;
}

int DoubleComplex::max_j() const {
  int m = -1;
  for (const auto& [cell, dim] : dims_) m = std::max(m, cell.second);
  return m;
}

DoubleReport validate_double_complex(const DoubleComplex& d) {
  const int mi = d.max_i();
  const int mj = d.max_j();
  auto cell_message = [](int i, int j, const std::string& what) {
    return what + " at cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 0; i <= mi + 1; ++i) {
    for (int j = 0; j <= mj + 1; ++j) {
      const QMatrix h = d.horiz(i, j);
      if (h.rows() != d.dim_at(i + 1, j) || h.cols() != d.dim_at(i, j))
        return {false, i, j, cell_message(i, j, "horizontal map shape mismatch")};
      const QMatrix v = d.vert(i, j);
      if (v.rows() != d.dim_at(i, j + 1) || v.cols() != d.dim_at(i, j))
        return {false, i, j, cell_message(i, j, "vertical map shape mismatch")};
      if (!matmul(d.horiz(i + 1, j), h).is_zero())
        return {false, i, j, cell_message(i, j, "horizontal composite nonzero")};
      if (!matmul(d.vert(i, j + 1), v).is_zero())
        return {false, i, j, cell_message(i, j, "vertical composite nonzero")};
      const QMatrix anti = add(matmul(d.vert(i + 1, j), h), matmul(d.horiz(i, j + 1), v));
      if (!anti.is_zero())
        return {false, i, j, cell_message(i, j, "anticommutation fails")};
    }
  }
  return {};
}

CochainComplex total_complex(const DoubleComplex& d) {
  const DoubleReport report = validate_double_complex(d);
  if (!report.ok) throw std::invalid_argument(report.message);
  const int mi = d.max_i();
  const int mj = d.max_j();
  if (mi < 0) return CochainComplex();

  const int top = mi + mj;
  // Block offset of cell (i, n-i) inside Tot^n, blocks ordered by i.
  auto offsets_at = [&](int n) {
    std::vector<std::pair<int, int>> cells;  // (i, offset)
    int total = 0;
    for (int i = std::max(0, n - mj); i <= std::min(n, mi); ++i) {
      cells.emplace_back(i, total);
      total += d.dim_at(i, n - i);
    }
    return std::make_pair(cells, total);
  };

  std::vector<int> dims;
  std::vector<QMatrix> diffs;
  for (int n = 0; n <= top; ++n) dims.push_back(offsets_at(n).second);
  for (int n = 0; n < top; ++n) {
    const auto [src_cells, src_total] = offsets_at(n);
    const auto [dst_cells, dst_total] = offsets_at(n + 1);
    std::map<int, int> dst_offset;
    for (const auto& [i, off] : dst_cells) dst_offset[i] = off;
    QMatrix block(dst_total, src_total);
    for (const auto& [i, src_off] : src_cells) {
      const int j = n - i;
      const QMatrix h = d.horiz(i, j);
      if (auto it = dst_offset.find(i + 1); it != dst_offset.end()) {
        for (int r = 0; r < h.rows(); ++r)
          for (const auto& [c, v] : h.row_entries(r))
            block.set(it->second + r, src_off + c, v);
      }
      const QMatrix vmap = d.vert(i, j);
      if (auto it = dst_offset.find(i); it != dst_offset.end()) {
        for (int r = 0; r < vmap.rows(); ++r)
          for (const auto& [c, v] : vmap.row_entries(r))
            block.set(it->second + r, src_off + c, v);
      }
    }
    diffs.push_back(std::move(block));
  }
  return CochainComplex(0, std::move(dims), std::move(diffs));
}

DoubleComplex truncate(const DoubleComplex& d, int q) {
  DoubleComplex out;
  const int mi = d.max_i();
  const int mj = d.max_j();
  for (int i = 0; i <= mi; ++i) {
    for (int j = 0; j <= mj; ++j) {
      if (i + j > q + 1) continue;
      if (d.dim_at(i, j) > 0) out.set_dim(i, j, d.dim_at(i, j));
      if (i + j <= q) {
        out.set_horiz(i, j, d.horiz(i, j));
        out.set_vert(i, j, d.vert(i, j));
      }
    }
  }
  return out;
}

long long euler_characteristic(const DoubleComplex& d) {
  long long chi = 0;
  for (const auto& [cell, dim] : d.dims())
    chi += ((cell.first + cell.second) % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
  return chi;
}

namespace {

// "first" is the direction whose cohomology is taken on page 1, "second" the
// other one; the second direction is the step between page-1 cells.

QMatrix first_out(const DoubleComplex& d, Filtration f, int i, int j) {
  return f == Filtration::row ? d.horiz(i, j) : d.vert(i, j);
}

QMatrix first_in(const DoubleComplex& d, Filtration f, int i, int j) {
  if (f == Filtration::row)
    return i > 0 ? d.horiz(i - 1, j) : QMatrix(d.dim_at(i, j), 0);
  return j > 0 ? d.vert(i, j - 1) : QMatrix(d.dim_at(i, j), 0);
}

QMatrix second_out(const DoubleComplex& d, Filtration f, int i, int j) {
  return f == Filtration::row ? d.vert(i, j) : d.horiz(i, j);
}

}  // namespace

Page page(const DoubleComplex& d, Filtration filtration, int r) {
  if (r != 1 && r != 2) throw std::invalid_argument("only pages 1 and 2 are computed");
  const DoubleReport report = validate_double_complex(d);
  if (!report.ok) throw std::invalid_argument(report.message);

  Page out;
  out.r = r;
  out.filtration = filtration;
  const std::pair<int, int> step =
      filtration == Filtration::row ? std::pair<int, int>{0, 1} : std::pair<int, int>{1, 0};

  if (r == 1) {
    for (const auto& [cell, dim] : d.dims()) {
      const auto [i, j] = cell;
      const int e1 = dim - rank(first_out(d, filtration, i, j)) -
                     rank(first_in(d, filtration, i, j));
      if (e1 != 0) out.dims[cell] = e1;
    }
    return out;
  }

  // Page 2 at a cell c: kernel basis K of the first-direction map out of c
  // descends to page 1; the page-1 differential is induced by the
  // second-direction map. With M(c) = [second_out(c)*K(c) | first_in(c+step)]
  // the page-2 dimension is
  //   v(c) - rank M(c) + rank first_in(c+step) - rank M(c-step).
  std::map<std::pair<int, int>, int> rank_m_cache;
  auto rank_m = [&](int i, int j) {
    auto it = rank_m_cache.find({i, j});
    if (it != rank_m_cache.end()) return it->second;
    int value = 0;
    // A cell of dimension zero (including cells outside the quadrant, which
    // only arise as predecessors of bottom cells) contributes no kernel
    // columns, but the incoming first-direction map at its successor still
    // counts.
    const QMatrix into_next = first_in(d, filtration, i + step.first, j + step.second);
    if (i < 0 || j < 0 || d.dim_at(i, j) == 0) {
      value = rank(into_next);
    } else {
      const QMatrix k = kernel_basis(first_out(d, filtration, i, j));
      value = rank(hstack(matmul(second_out(d, filtration, i, j), k), into_next));
    }
    rank_m_cache.emplace(std::make_pair(i, j), value);
    return value;
  };

  for (const auto& [cell, dim] : d.dims()) {
    const auto [i, j] = cell;
    const int v = dim - rank(first_out(d, filtration, i, j));
    const int into_next =
        rank(first_in(d, filtration, i + step.first, j + step.second));
    const int e2 = v - rank_m(i, j) + into_next -
                   rank_m(i - step.first, j - step.second);
    if (e2 != 0) out.dims[cell] = e2;
  }
  return out;
}

}  // namespace descent
