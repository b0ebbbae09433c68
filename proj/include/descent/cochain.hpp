#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "descent/qmatrix.hpp"

namespace descent {

// Bounded cochain complex of finite-dimensional rational vector spaces.
// Degrees outside [lo, hi] have dimension zero; the differential at degree i
// has shape dim(i+1) x dim(i).
class CochainComplex {
 public:
  CochainComplex() : lo_(0), hi_(-1) {}
  CochainComplex(int lo, std::vector<int> dims, std::vector<QMatrix> diffs);

  static CochainComplex zero_complex() { return CochainComplex(); }

  bool empty() const { return hi_ < lo_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  int dim(int degree) const;
  QMatrix diff(int degree) const;

 private:
  int lo_;
  int hi_;
  std::vector<int> dims_;
  std::vector<QMatrix> diffs_;
};

struct ComplexReport {
  bool ok = true;
  int degree = 0;
  std::string message;
};

// Checks stored shapes and d(i+1) * d(i) = 0; reports the first violation.
ComplexReport validate_complex(const CochainComplex& c);

// dim H^i = dim(i) - rank d(i) - rank d(i-1), for i in [lo, hi] inclusive.
std::vector<int> cohomology_dims(const CochainComplex& c, int lo, int hi);

// Alternating sum of dimensions over the full degree range.
long long euler_characteristic(const CochainComplex& c);

// Block-diagonal sum; each summand enters with its degrees shifted up by the
// paired offset.
CochainComplex direct_sum(const std::vector<std::pair<CochainComplex, int>>& parts);

// Degreewise linear map between complexes. Absent degrees act as zero maps.
class ComplexMorphism {
 public:
  ComplexMorphism() = default;
  ComplexMorphism(CochainComplex source, CochainComplex target,
                  std::map<int, QMatrix> maps);

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }

  QMatrix map_at(int degree) const;
  const std::map<int, QMatrix>& stored_maps() const { return maps_; }

 private:
  CochainComplex source_;
  CochainComplex target_;
  std::map<int, QMatrix> maps_;
};

// Checks map shapes and the commuting squares
// target.diff(i) * map(i) == map(i+1) * source.diff(i) over the degree span
// where both complexes are present.
ComplexReport validate_morphism(const ComplexMorphism& m);

}  // namespace descent
