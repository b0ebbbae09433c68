#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "descent/cochain.hpp"
#include "descent/scomplex.hpp"
#include "descent/simplex_term.hpp"

namespace descent {

// Finite simplicial set presented by nondegenerate simplices per dimension
// (up to a cap) and a face table on them. All simplices are reached as
// canonical degeneracy words over the nondegenerate ones.
class SSet {
 public:
  SSet(int cap, std::vector<std::vector<std::string>> labels,
       std::vector<std::vector<std::vector<SimplexTerm>>> faces);

  int cap() const { return cap_; }
  int nd_count(int dim) const;
  const std::string& label(int dim, int index) const;

  // i-th face of a nondegenerate simplex.
  const SimplexTerm& face_of(int dim, int index, int i) const;

  // Face and degeneracy on arbitrary canonical terms.
  SimplexTerm face(const SimplexTerm& t, int i) const;
  SimplexTerm degenerate(const SimplexTerm& t, int j) const;

  // Every n-simplex, degenerate ones included, in a fixed deterministic
  // order. Throws when n exceeds the cap.
  std::vector<SimplexTerm> simplices_at(int n) const;

  std::string term_name(const SimplexTerm& t) const;

 private:
  int cap_;
  std::vector<std::vector<std::string>> labels_;
  // faces_[dim][index][i], present for dim >= 1.
  std::vector<std::vector<std::vector<SimplexTerm>>> faces_;
};

struct SSetReport {
  bool ok = true;
  std::string message;
};

// Randomization-free structural check: face table shapes, canonical-form
// validity, and the simplicial identity d_i d_j = d_{j-1} d_i (i < j) on all
// nondegenerate simplices.
SSetReport validate_sset(const SSet& x);

// Nondegenerate m-simplices are the m-faces of the complex in increasing
// vertex order; faces delete a vertex.
std::shared_ptr<const SSet> nerve_of_complex(const SComplex& k, int cap);

// Simplicial map determined by images of nondegenerate simplices; extends to
// degenerate ones by compatibility with degeneracies.
class SSetMap {
 public:
  SSetMap() = default;
  SSetMap(std::shared_ptr<const SSet> source, std::shared_ptr<const SSet> target,
          std::vector<std::vector<SimplexTerm>> image);

  const SSet& source() const { return *source_; }
  const SSet& target() const { return *target_; }
  std::shared_ptr<const SSet> source_ptr() const { return source_; }
  std::shared_ptr<const SSet> target_ptr() const { return target_; }

  const SimplexTerm& image_of(int dim, int index) const;
  SimplexTerm apply(const SimplexTerm& t) const;

 private:
  std::shared_ptr<const SSet> source_;
  std::shared_ptr<const SSet> target_;
  std::vector<std::vector<SimplexTerm>> image_;
};

// Checks that the map commutes with faces on nondegenerate simplices (which
// extends to all simplices together with the degeneracy compatibility built
// into apply).
SSetReport validate_sset_map(const SSetMap& f);

// Map of nerves induced by a valid vertex map. Throws std::invalid_argument
// (naming the simplex) when the vertex map is invalid.
SSetMap induced_sset_map(const VertexMap& f,
                         std::shared_ptr<const SSet> source_nerve,
                         std::shared_ptr<const SSet> target_nerve);
SSetMap induced_sset_map(const VertexMap& f, int cap);

// C^n = functions on nondegenerate n-simplices; coboundary drops degenerate
// faces. Degrees 0..cap.
CochainComplex normalized_cochain_complex(const SSet& x, int cap);

// C^n = functions on all n-simplices from simplices_at. Degrees 0..cap.
CochainComplex unnormalized_cochain_complex(const SSet& x, int cap);

enum class CochainModel { normalized, unnormalized };

// Matrix of g* : C^n(target(g)) -> C^n(source(g)) in the chosen model.
QMatrix pullback_matrix(const SSetMap& g, int n, CochainModel model);

// Full morphism C(target(g)) -> C(source(g)) with degrees 0..cap.
ComplexMorphism pullback_cochain_map(const SSetMap& g, int cap, CochainModel model);

// True iff every target n-simplex has a preimage n-simplex for all n <= cap.
bool check_levelwise_surjective(const SSetMap& f, int cap);

}  // namespace descent
