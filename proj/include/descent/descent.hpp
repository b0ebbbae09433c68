#pragma once

#include <memory>
#include <string>
#include <vector>

#include "descent/double_complex.hpp"
#include "descent/fibered.hpp"
#include "descent/scomplex.hpp"
#include "descent/sset.hpp"

namespace descent {

// A map of complexes together with the Betti range to compute. The stated
// target of f is replaced internally by the image complex, so the map is
// always treated as surjective.
struct DescentProblem {
  SComplex x;
  VertexMap f;
  int q = 0;
};

struct BettiVector {
  std::vector<int> values;  // b_0 .. b_q

  bool operator==(const BettiVector& other) const { return values == other.values; }
  std::string to_string() const;
};

// Shared construction state: image complex, nerves, the corrected map, and
// the tower of fibered powers. Powers are built at cap q+1-p, enough for the
// truncated grid; with_checker_caps raises every power to cap q+1 as the
// exactness checker needs.
class DescentContext {
 public:
  DescentContext(const DescentProblem& prob, bool with_checker_caps);

  const DescentProblem& problem() const { return prob_; }
  const SComplex& image() const { return image_; }
  const SSetMap& map() const { return f_; }
  const FiberedPower& power(int p) const;
  int q() const { return prob_.q; }

  DoubleComplex descent_double_complex(CochainModel model) const;
  BettiVector betti_of_image() const;
  BettiVector direct_betti() const;

 private:
  DescentProblem prob_;
  SComplex image_;
  std::shared_ptr<const SSet> xs_;
  std::shared_ptr<const SSet> ys_;
  SSetMap f_;
  std::vector<FiberedPower> powers_;
};

// Cells (p, n) with p+n <= q+1; entries are cochain spaces of the fibered
// powers, vertical maps carry the alternating column sign, horizontal maps
// are alternating sums of projection pullbacks.
DoubleComplex build_descent_double_complex(const DescentProblem& prob,
                                           CochainModel model = CochainModel::normalized);

// Betti numbers of the image: cohomology of the total complex of the
// truncated grid, degrees 0..q.
BettiVector betti_of_image(const DescentProblem& prob);

// Betti numbers of the image computed directly from its nerve.
BettiVector direct_betti(const DescentProblem& prob);

struct ExactnessEntry {
  int degree = 0;    // cochain degree n
  int position = 0;  // 0 = at the 0th power, p = at the p-th power
  int dim_kernel = 0;
  int dim_image = 0;  // of the incoming map (augmentation at position 0)
  bool composite_zero = true;
  bool pass = true;
};

struct ExactnessReport {
  bool pass = true;
  // Augmentation injectivity per degree n = index.
  std::vector<bool> augmentation_injective;
  std::vector<ExactnessEntry> entries;
};

// Checks, on unnormalized cochains at every degree n <= q+1, that the
// augmented row 0 -> C^n(Y) -> C^n(W^0) -> ... -> C^n(W^(q+1)) is exact at
// positions 0..q. Ranks are computed blockwise per common image simplex.
ExactnessReport verify_mv_exactness(const DescentProblem& prob);
ExactnessReport verify_mv_exactness(const DescentContext& ctx);

// lhs = b_n of the image, rhs = sum over i+j = n of b_j(W^i).
std::pair<int, int> descent_inequality(const DescentProblem& prob, int n);
std::pair<int, int> descent_inequality(const DescentContext& ctx, int n);

struct DegenerationReport {
  bool pass = true;
  Page e1;
  Page e2;
  std::vector<int> column0;   // E2 at (0, j), j = 0..q
  std::vector<int> expected;  // direct image cohomology
  // Nonzero E2 cells with i >= 1, i+j <= q.
  std::vector<std::pair<std::pair<int, int>, int>> violations;
};

// Row-filtration pages of the truncated grid. Passes iff column 0 matches the
// direct image cohomology through degree q and the interior zone is zero.
// Cells on the outer anti-diagonal i+j = q+1 see truncated outgoing maps, so
// they are reported but never judged.
DegenerationReport e2_degeneration_report(const DescentProblem& prob);
DegenerationReport e2_degeneration_report(const DescentContext& ctx);

}  // namespace descent
