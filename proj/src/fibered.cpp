#include "descent/fibered.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace descent {

namespace {

std::set<int> word_set(const SimplexTerm& t) {
  return std::set<int>(t.word.begin(), t.word.end());
}

// Largest j such that every component is in the image of s_j, or -1. For a
// canonical term, membership in im(s_j) is equivalent to j appearing in its
// degeneracy word.
int common_degeneracy(const std::vector<SimplexTerm>& components) {
  std::set<int> common = word_set(components.front());
  for (std::size_t t = 1; t < components.size() && !common.empty(); ++t) {
    const std::set<int> w = word_set(components[t]);
    std::set<int> kept;
    std::set_intersection(common.begin(), common.end(), w.begin(), w.end(),
                          std::inserter(kept, kept.begin()));
    common.swap(kept);
  }
  return common.empty() ? -1 : *common.rbegin();
}

}  // namespace

std::pair<std::vector<SimplexTerm>, std::vector<int>> strip_common_degeneracies(
    const SSet& x, std::vector<SimplexTerm> components) {
  std::vector<int> word;
  // Extracting the largest shared index first keeps the collected word
  // strictly decreasing, hence canonical.
  for (int j = common_degeneracy(components); j >= 0;
       j = common_degeneracy(components)) {
    for (SimplexTerm& c : components) c = x.face(c, j + 1);
    word.push_back(j);
  }
  return {std::move(components), std::move(word)};
}

std::vector<FiberedPower> fibered_power_tower(const SSetMap& f,
                                              const std::vector<int>& caps) {
  const SSet& x = f.source();
  std::vector<FiberedPower> tower;
  tower.reserve(caps.size());

  // Per power, per dimension: canonical nd tuple -> index.
  std::vector<std::vector<std::map<std::vector<SimplexTerm>, int>>> tuple_index;

  for (std::size_t p = 0; p < caps.size(); ++p) {
    const int cap = caps[p];
    if (cap > x.cap() || cap > f.target().cap())
      throw std::out_of_range("dimension cap exceeded");
    if (p > 0 && cap > caps[p - 1])
      throw std::invalid_argument("power caps must be non-increasing");

    std::vector<std::vector<std::vector<SimplexTerm>>> nd_tuples(
        static_cast<std::size_t>(cap) + 1);
    std::vector<std::map<std::vector<SimplexTerm>, int>> index(
        static_cast<std::size_t>(cap) + 1);
    std::vector<std::vector<SimplexTerm>> image_term(
        static_cast<std::size_t>(cap) + 1);

    for (int n = 0; n <= cap; ++n) {
      // Group X n-simplices by their image term; tuples live inside fibers.
      std::map<SimplexTerm, std::vector<SimplexTerm>> fibers;
      for (const SimplexTerm& t : x.simplices_at(n)) fibers[f.apply(t)].push_back(t);
      for (const auto& [y, members] : fibers) {
        std::vector<std::size_t> odometer(p + 1, 0);
        while (true) {
          std::vector<SimplexTerm> tuple;
          tuple.reserve(p + 1);
          for (std::size_t slot = 0; slot <= p; ++slot)
            tuple.push_back(members[odometer[slot]]);
          if (common_degeneracy(tuple) < 0) {
            index[static_cast<std::size_t>(n)].emplace(
                tuple, static_cast<int>(nd_tuples[static_cast<std::size_t>(n)].size()));
            nd_tuples[static_cast<std::size_t>(n)].push_back(std::move(tuple));
            image_term[static_cast<std::size_t>(n)].push_back(y);
          }
          std::size_t slot = 0;
          while (slot <= p && ++odometer[slot] == members.size()) {
            odometer[slot] = 0;
            ++slot;
          }
          if (slot > p) break;
        }
      }
    }

    // Resolve a componentwise tuple to a canonical carrier term.
    auto carrier_term = [&](std::vector<SimplexTerm> tuple) {
      auto [base, word] = strip_common_degeneracies(x, std::move(tuple));
      const int base_dim = base.front().dim();
      return SimplexTerm{base_dim,
                         index.at(static_cast<std::size_t>(base_dim)).at(base),
                         std::move(word)};
    };

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(cap) + 1);
    std::vector<std::vector<std::vector<SimplexTerm>>> faces(
        static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) {
      for (const auto& tuple : nd_tuples[static_cast<std::size_t>(n)]) {
        std::string label = "(";
        for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
          if (slot) label += "|";
          label += x.term_name(tuple[slot]);
        }
        label += ")";
        labels[static_cast<std::size_t>(n)].push_back(std::move(label));
        if (n == 0) continue;
        std::vector<SimplexTerm> face_row;
        face_row.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
          std::vector<SimplexTerm> face_tuple;
          face_tuple.reserve(tuple.size());
          for (const SimplexTerm& c : tuple) face_tuple.push_back(x.face(c, i));
          face_row.push_back(carrier_term(std::move(face_tuple)));
        }
        faces[static_cast<std::size_t>(n)].push_back(std::move(face_row));
      }
    }
    auto carrier = std::make_shared<SSet>(cap, std::move(labels), std::move(faces));

    FiberedPower power;
    power.p = static_cast<int>(p);
    power.carrier = carrier;

    // Common-image map to the base.
    {
      std::vector<std::vector<SimplexTerm>> image(static_cast<std::size_t>(cap) + 1);
      for (int n = 0; n <= cap; ++n)
        image[static_cast<std::size_t>(n)] = image_term[static_cast<std::size_t>(n)];
      power.to_base = SSetMap(carrier, f.target_ptr(), std::move(image));
    }

    // Coordinate drops onto the previous carrier.
    if (p > 0) {
      const auto& prev = tower[p - 1];
      const auto& prev_index = tuple_index[p - 1];
      for (std::size_t drop = 0; drop <= p; ++drop) {
        std::vector<std::vector<SimplexTerm>> image(static_cast<std::size_t>(cap) + 1);
        for (int n = 0; n <= cap; ++n) {
          const auto& level = nd_tuples[static_cast<std::size_t>(n)];
          image[static_cast<std::size_t>(n)].reserve(level.size());
          for (const auto& tuple : level) {
            std::vector<SimplexTerm> dropped;
            dropped.reserve(tuple.size() - 1);
            for (std::size_t slot = 0; slot < tuple.size(); ++slot)
              if (slot != drop) dropped.push_back(tuple[slot]);
            auto [base, word] = strip_common_degeneracies(x, std::move(dropped));
            const int base_dim = base.front().dim();
            image[static_cast<std::size_t>(n)].push_back(SimplexTerm{
                base_dim,
                prev_index.at(static_cast<std::size_t>(base_dim)).at(base),
                std::move(word)});
          }
        }
        power.projections.push_back(
            SSetMap(carrier, prev.carrier, std::move(image)));
      }
    }

    tower.push_back(std::move(power));
    // Only the immediately preceding index is needed for projections.
    if (!tuple_index.empty()) tuple_index.back().clear();
    tuple_index.push_back(std::move(index));
  }
  return tower;
}

FiberedPower fibered_power(const SSetMap& f, int p, int cap) {
  if (p < 0) throw std::invalid_argument("negative power");
  std::vector<int> caps(static_cast<std::size_t>(p) + 1, cap);
  auto tower = fibered_power_tower(f, caps);
  return std::move(tower.back());
}

const SSetMap& projection_map(const FiberedPower& w, int i) {
  if (i < 0 || i > w.p || i >= static_cast<int>(w.projections.size()))
    throw std::out_of_range("projection index out of range");
  return w.projections[static_cast<std::size_t>(i)];
}

}  // namespace descent
