#include "descent/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace descent {

CochainComplex::CochainComplex(int lo, std::vector<int> dims,
                               std::vector<QMatrix> diffs)
    : lo_(lo), hi_(lo + static_cast<int>(dims.size()) - 1),
      dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.empty()) {
    lo_ = 0;
    hi_ = -1;
    return;
  }
  if (diffs_.size() + 1 != dims_.size())
    throw std::invalid_argument("expected one differential per adjacent degree pair");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative dimension");
}

int CochainComplex::dim(int degree) const {
  if (degree < lo_ || degree > hi_) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

QMatrix CochainComplex::diff(int degree) const {
  if (degree < lo_ || degree >= hi_) return QMatrix(dim(degree + 1), dim(degree));
  return diffs_[static_cast<std::size_t>(degree - lo_)];
}

ComplexReport validate_complex(const CochainComplex& c) {
  for (int d = c.lo(); d < c.hi(); ++d) {
    const QMatrix m = c.diff(d);
    if (m.rows() != c.dim(d + 1) || m.cols() != c.dim(d))
      return {false, d, "differential shape mismatch at degree " + std::to_string(d)};
  }
  for (int d = c.lo(); d + 1 < c.hi(); ++d) {
    if (!matmul(c.diff(d + 1), c.diff(d)).is_zero())
      return {false, d,
              "d*d nonzero at degree " + std::to_string(d)};
  }
  return {};
}

std::vector<int> cohomology_dims(const CochainComplex& c, int lo, int hi) {
  const ComplexReport report = validate_complex(c);
  if (!report.ok) throw std::invalid_argument(report.message);
  std::vector<int> out;
  if (hi < lo) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  std::map<int, int> rank_cache;
  auto rank_at = [&](int degree) {
    auto it = rank_cache.find(degree);
    if (it != rank_cache.end()) return it->second;
    int r = 0;
    if (c.dim(degree) > 0 && c.dim(degree + 1) > 0) r = rank(c.diff(degree));
    rank_cache.emplace(degree, r);
    return r;
  };
  for (int d = lo; d <= hi; ++d)
    out.push_back(c.dim(d) - rank_at(d) - rank_at(d - 1));
  return out;
}

long long euler_characteristic(const CochainComplex& c) {
  long long chi = 0;
  for (int d = c.lo(); d <= c.hi(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dim(d));
  return chi;
}

CochainComplex direct_sum(const std::vector<std::pair<CochainComplex, int>>& parts) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& [c, offset] : parts) {
    if (c.empty()) continue;
    if (!any) {
      lo = c.lo() + offset;
      hi = c.hi() + offset;
      any = true;
    } else {
      lo = std::min(lo, c.lo() + offset);
      hi = std::max(hi, c.hi() + offset);
    }
  }
  if (!any) return CochainComplex();

  std::vector<int> dims(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [c, offset] : parts)
    for (int d = c.lo(); d <= c.hi(); ++d)
      dims[static_cast<std::size_t>(d + offset - lo)] += c.dim(d);

  std::vector<QMatrix> diffs;
  diffs.reserve(static_cast<std::size_t>(hi - lo));
  for (int d = lo; d < hi; ++d)
    diffs.emplace_back(dims[static_cast<std::size_t>(d + 1 - lo)],
                       dims[static_cast<std::size_t>(d - lo)]);

  // Running block offsets per degree as summands are placed.
  std::vector<int> placed(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [c, offset] : parts) {
    for (int d = c.lo(); d <= c.hi(); ++d) {
      const int deg = d + offset;
      const int row_base = deg + 1 <= hi ? placed[static_cast<std::size_t>(deg + 1 - lo)] : 0;
      const int col_base = placed[static_cast<std::size_t>(deg - lo)];
      if (d < c.hi() && deg < hi) {
        const QMatrix block = c.diff(d);
        QMatrix& target = diffs[static_cast<std::size_t>(deg - lo)];
        for (int r = 0; r < block.rows(); ++r)
          for (const auto& [col, v] : block.row_entries(r))
            target.set(row_base + r, col_base + col, v);
      }
    }
    for (int d = c.lo(); d <= c.hi(); ++d)
      placed[static_cast<std::size_t>(d + offset - lo)] += c.dim(d);
  }
  return CochainComplex(lo, std::move(dims), std::move(diffs));
}

ComplexMorphism::ComplexMorphism(CochainComplex source, CochainComplex target,
                                 std::map<int, QMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)),
      maps_(std::move(maps)) {}

QMatrix ComplexMorphism::map_at(int degree) const {
  auto it = maps_.find(degree);
  if (it != maps_.end()) return it->second;
  return QMatrix(target_.dim(degree), source_.dim(degree));
}

ComplexReport validate_morphism(const ComplexMorphism& m) {
  for (const auto& [degree, mat] : m.stored_maps()) {
    if (mat.rows() != m.target().dim(degree) || mat.cols() != m.source().dim(degree))
      return {false, degree,
              "morphism shape mismatch at degree " + std::to_string(degree)};
  }
  const int lo = std::max(m.source().lo(), m.target().lo());
  const int hi = std::min(m.source().hi(), m.target().hi());
  for (int d = lo; d < hi; ++d) {
    const QMatrix left = matmul(m.target().diff(d), m.map_at(d));
    const QMatrix right = matmul(m.map_at(d + 1), m.source().diff(d));
    if (left != right)
      return {false, d,
              "square fails to commute at degree " + std::to_string(d)};
  }
  return {};
}

}  // namespace descent
