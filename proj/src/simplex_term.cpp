#include "descent/simplex_term.hpp"

namespace descent {

std::vector<int> degeneracy_compose(const std::vector<int>& word, int j) {
  // s_j s_a = s_{a+1} s_j for j <= a, so push j inward, bumping every index
  // it passes.
  std::vector<int> out;
  out.reserve(word.size() + 1);
  std::size_t k = 0;
  while (k < word.size() && j <= word[k]) {
    out.push_back(word[k] + 1);
    ++k;
  }
  out.push_back(j);
  for (; k < word.size(); ++k) out.push_back(word[k]);
  return out;
}

std::vector<int> normalize_word(const std::vector<int>& word) {
  std::vector<int> out;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = degeneracy_compose(out, *it);
  return out;
}

bool word_valid(const std::vector<int>& word, int base_dim) {
  // word[i] applies at dimension base_dim + (word.size()-1-i).
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i + 1 < word.size() && word[i] <= word[i + 1]) return false;
    const int applied_dim =
        base_dim + static_cast<int>(word.size() - 1 - i);
    if (word[i] < 0 || word[i] > applied_dim) return false;
  }
  return true;
}

std::vector<std::vector<int>> decreasing_words(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  // Enumerate ascending combinations of {0..n-1}, emit reversed.
  auto emit = [&]() {
    std::vector<int> word(pick.rbegin(), pick.rend());
    out.push_back(std::move(word));
  };
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t)
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  for (int j : word) {
    out += "s";
    out += std::to_string(j);
    out += " ";
  }
  return out;
}

}  // namespace descent
