#pragma once

#include <vector>

#include "descent/cochain.hpp"
#include "descent/descent.hpp"

namespace descent {

// One column of a provider bundle: a cochain complex tagged by the index set
// of the inequality system it computes.
struct ProviderComplex {
  std::vector<int> index_set;
  CochainComplex complex;
};

// One morphism of a provider bundle. Entries with slot h >= 0 are the
// projection-induced maps: the horizontal map out of column i is the
// alternating sum over slots 0..i+1 of the morphisms from L_i to L_{i+1}.
// Entries with a two-element swap tag {p, j} are coordinate-swap morphisms;
// they ride along in the bundle but are not used by assembly. matrices[t] is
// the map at degree lo + t; degrees outside the stored span act as zero.
struct ProviderMorphism {
  std::vector<int> from;
  std::vector<int> to;
  int slot = -1;
  std::vector<int> swap;
  int lo = 0;
  std::vector<QMatrix> matrices;
};

// Packaged output contract of an external complex-building provider: one
// complex per required index set L_i = {1, ..., (i+1) l} plus the morphisms
// between consecutive columns.
struct ProviderBundle {
  int q = 0;
  int l = 1;
  std::vector<ProviderComplex> complexes;
  std::vector<ProviderMorphism> morphisms;
};

// Builds the grid D^{i,j} = F_{L_i}^j over i+j <= q+1 with vertical maps
// (-1)^i * differential and horizontal maps the alternating slot sums,
// validates every complex, every used morphism, and the assembled grid, and
// returns dims of H^0..H^q of the total complex. Throws
// std::invalid_argument naming the missing piece or the failing cell.
BettiVector assemble_from_provider(const ProviderBundle& bundle, int q);

// Bundle whose complexes are the normalized cochain complexes of the fibered
// powers of the problem's corrected map and whose morphisms are the
// projection pullbacks; assembling it reproduces betti_of_image.
ProviderBundle mock_bundle_from_problem(const DescentProblem& prob);

}  // namespace descent
