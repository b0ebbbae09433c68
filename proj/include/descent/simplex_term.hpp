#pragma once

#include <compare>
#include <string>
#include <vector>

namespace descent {

// Canonical form of a (possibly degenerate) simplex: a nondegenerate base of
// dimension base_dim plus a strictly decreasing degeneracy word, outermost
// index first. Uniqueness of this form makes equality structural.
struct SimplexTerm {
  int base_dim = 0;
  int base = 0;
  std::vector<int> word;

  int dim() const { return base_dim + static_cast<int>(word.size()); }
  bool degenerate() const { return !word.empty(); }

  auto operator<=>(const SimplexTerm&) const = default;
};

// Canonical word for s_j composed outside an already canonical word.
std::vector<int> degeneracy_compose(const std::vector<int>& word, int j);

// Canonicalizes an arbitrary composable list of degeneracy indices
// (outermost first).
std::vector<int> normalize_word(const std::vector<int>& word);

// True when the word, read as a composition onto a base of dimension
// base_dim, is strictly decreasing and every index is valid at the dimension
// where it applies.
bool word_valid(const std::vector<int>& word, int base_dim);

// All strictly decreasing k-element words over {0..n-1}, one per k-element
// subset, in a fixed deterministic order; these are exactly the canonical
// words lifting an (n-k)-simplex to dimension n.
std::vector<std::vector<int>> decreasing_words(int n, int k);

std::string word_to_string(const std::vector<int>& word);

}  // namespace descent
