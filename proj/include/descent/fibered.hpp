#pragma once

#include <memory>
#include <vector>

#include "descent/sset.hpp"

namespace descent {

// p-th fibered power of a map f: X -> Y. Carrier n-simplices are canonical
// forms of (p+1)-tuples of X n-simplices with a common image term; a tuple is
// degenerate exactly when all components lie in the image of one s_j.
struct FiberedPower {
  int p = 0;
  std::shared_ptr<const SSet> carrier;
  // p+1 coordinate-dropping maps onto the (p-1)-power carrier; empty at p=0.
  std::vector<SSetMap> projections;
  // Common-image map onto the target of f.
  SSetMap to_base;
};

// Powers 0..p_max of f, built together so projections share carriers.
// caps[t] bounds the dimensions enumerated for power t.
std::vector<FiberedPower> fibered_power_tower(const SSetMap& f,
                                              const std::vector<int>& caps);

// Single power with a uniform cap.
FiberedPower fibered_power(const SSetMap& f, int p, int cap);

// Coordinate-dropping projection; requires 0 <= i <= p.
const SSetMap& projection_map(const FiberedPower& w, int i);

// Strips shared degeneracies off a componentwise tuple: returns the
// nondegenerate tuple base and the canonical word such that applying the word
// to the base reproduces the input.
std::pair<std::vector<SimplexTerm>, std::vector<int>> strip_common_degeneracies(
    const SSet& x, std::vector<SimplexTerm> components);

}  // namespace descent
