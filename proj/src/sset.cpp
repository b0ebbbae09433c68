#include "descent/sset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace descent {

SSet::SSet(int cap, std::vector<std::vector<std::string>> labels,
           std::vector<std::vector<std::vector<SimplexTerm>>> faces)
    : cap_(cap), labels_(std::move(labels)), faces_(std::move(faces)) {
  if (cap < 0) throw std::invalid_argument("negative cap");
  labels_.resize(static_cast<std::size_t>(cap) + 1);
  faces_.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 1; n <= cap; ++n) {
    auto& level = faces_[static_cast<std::size_t>(n)];
    if (level.size() != labels_[static_cast<std::size_t>(n)].size())
      throw std::invalid_argument("face table size mismatch");
    for (const auto& entry : level)
      if (entry.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("face table arity mismatch");
  }
}

int SSet::nd_count(int dim) const {
  if (dim < 0 || dim > cap_) return 0;
  return static_cast<int>(labels_[static_cast<std::size_t>(dim)].size());
}

const std::string& SSet::label(int dim, int index) const {
  return labels_.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(index));
}

const SimplexTerm& SSet::face_of(int dim, int index, int i) const {
  return faces_.at(static_cast<std::size_t>(dim))
      .at(static_cast<std::size_t>(index))
      .at(static_cast<std::size_t>(i));
}

SimplexTerm SSet::face(const SimplexTerm& t, int i) const {
  if (i < 0 || i > t.dim()) throw std::out_of_range("face index out of range");
  // Push d_i through the degeneracy word left to right. It either cancels
  // against some s_j (d_j s_j = d_{j+1} s_j = id) or reaches the base.
  std::vector<int> prefix;
  prefix.reserve(t.word.size());
  int fi = i;
  for (std::size_t k = 0; k < t.word.size(); ++k) {
    const int j = t.word[k];
    if (fi < j) {
      prefix.push_back(j - 1);
    } else if (fi == j || fi == j + 1) {
      std::vector<int> rest(prefix);
      rest.insert(rest.end(), t.word.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                  t.word.end());
      return SimplexTerm{t.base_dim, t.base, normalize_word(rest)};
    } else {
      prefix.push_back(j);
      fi -= 1;
    }
  }
  if (t.base_dim == 0)
    throw std::logic_error("face of a vertex requested");
  const SimplexTerm& base_face = face_of(t.base_dim, t.base, fi);
  std::vector<int> word = base_face.word;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    word = degeneracy_compose(word, *it);
  return SimplexTerm{base_face.base_dim, base_face.base, std::move(word)};
}

SimplexTerm SSet::degenerate(const SimplexTerm& t, int j) const {
  if (j < 0 || j > t.dim()) throw std::out_of_range("degeneracy index out of range");
  return SimplexTerm{t.base_dim, t.base, degeneracy_compose(t.word, j)};
}

std::vector<SimplexTerm> SSet::simplices_at(int n) const {
  if (n < 0 || n > cap_) throw std::out_of_range("dimension cap exceeded");
  std::vector<SimplexTerm> out;
  for (int m = 0; m <= n; ++m) {
    const int count = nd_count(m);
    if (count == 0) continue;
    const auto words = decreasing_words(n, n - m);
    for (int idx = 0; idx < count; ++idx)
      for (const auto& word : words)
        out.push_back(SimplexTerm{m, idx, word});
  }
  return out;
}

std::string SSet::term_name(const SimplexTerm& t) const {
  return word_to_string(t.word) + label(t.base_dim, t.base);
}

SSetReport validate_sset(const SSet& x) {
  for (int n = 1; n <= x.cap(); ++n) {
    for (int idx = 0; idx < x.nd_count(n); ++idx) {
      for (int i = 0; i <= n; ++i) {
        const SimplexTerm& f = x.face_of(n, idx, i);
        if (f.dim() != n - 1)
          return {false, "face dimension mismatch at " + x.label(n, idx)};
        if (!word_valid(f.word, f.base_dim) || f.base < 0 ||
            f.base >= x.nd_count(f.base_dim))
          return {false, "face term not canonical at " + x.label(n, idx)};
      }
      if (n < 2) continue;
      const SimplexTerm t{n, idx, {}};
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (x.face(x.face(t, j), i) != x.face(x.face(t, i), j - 1))
            return {false, "simplicial identity d_i d_j fails at " + x.label(n, idx)};
        }
      }
    }
  }
  return {};
}

namespace {

// Faces of the complex at each dimension in deterministic (set) order, with
// reverse lookup. Shared by the nerve builder and the induced-map builder.
struct NerveIndex {
  std::vector<std::vector<std::vector<int>>> faces_by_dim;
  std::map<std::vector<int>, std::pair<int, int>> position;
};

NerveIndex nerve_index(const SComplex& k, int cap) {
  NerveIndex out;
  out.faces_by_dim.resize(static_cast<std::size_t>(cap) + 1);
  for (const auto& simplex : k.simplices()) {
    const int dim = static_cast<int>(simplex.size()) - 1;
    if (dim > cap) continue;
    auto& level = out.faces_by_dim[static_cast<std::size_t>(dim)];
    out.position[simplex] = {dim, static_cast<int>(level.size())};
    level.push_back(simplex);
  }
  return out;
}

SimplexTerm nerve_term(const NerveIndex& index,
                       const std::vector<int>& weakly_increasing) {
  std::vector<int> strict = weakly_increasing;
  std::vector<int> word;
  // Removing the later duplicate of position i is undoing s_i; collecting the
  // indices inner-to-outer and normalizing yields the canonical word.
  std::vector<int> raw;
  for (std::size_t i = 0; i + 1 < strict.size();) {
    if (strict[i] == strict[i + 1]) {
      raw.push_back(static_cast<int>(i));
      strict.erase(strict.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      ++i;
    }
  }
  // raw was collected outermost-first already: each removal happens at the
  // current (partially collapsed) list, which is the order degeneracies nest.
  std::vector<int> normalized;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it)
    normalized = degeneracy_compose(normalized, *it);
  auto it = index.position.find(strict);
  if (it == index.position.end())
    throw std::invalid_argument("vertex list is not a simplex of the nerve");
  return SimplexTerm{it->second.first, it->second.second, std::move(normalized)};
}

}  // namespace

std::shared_ptr<const SSet> nerve_of_complex(const SComplex& k, int cap) {
  const NerveIndex index = nerve_index(k, cap);
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(cap) + 1);
  std::vector<std::vector<std::vector<SimplexTerm>>> faces(static_cast<std::size_t>(cap) + 1);
  for (int dim = 0; dim <= cap; ++dim) {
    for (const auto& simplex : index.faces_by_dim[static_cast<std::size_t>(dim)]) {
      labels[static_cast<std::size_t>(dim)].push_back(k.simplex_name(simplex));
      if (dim == 0) continue;
      std::vector<SimplexTerm> face_row;
      face_row.reserve(static_cast<std::size_t>(dim) + 1);
      for (int i = 0; i <= dim; ++i) {
        std::vector<int> sub = simplex;
        sub.erase(sub.begin() + i);
        const auto pos = index.position.at(sub);
        face_row.push_back(SimplexTerm{pos.first, pos.second, {}});
      }
      faces[static_cast<std::size_t>(dim)].push_back(std::move(face_row));
    }
  }
  return std::make_shared<SSet>(cap, std::move(labels), std::move(faces));
}

SSetMap::SSetMap(std::shared_ptr<const SSet> source,
                 std::shared_ptr<const SSet> target,
                 std::vector<std::vector<SimplexTerm>> image)
    : source_(std::move(source)), target_(std::move(target)),
      image_(std::move(image)) {
  image_.resize(static_cast<std::size_t>(source_->cap()) + 1);
  for (int n = 0; n <= source_->cap(); ++n)
    if (image_[static_cast<std::size_t>(n)].size() !=
        static_cast<std::size_t>(source_->nd_count(n)))
      throw std::invalid_argument("image table size mismatch");
}

const SimplexTerm& SSetMap::image_of(int dim, int index) const {
  return image_.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(index));
}

SimplexTerm SSetMap::apply(const SimplexTerm& t) const {
  SimplexTerm out = image_of(t.base_dim, t.base);
  for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
    out.word = degeneracy_compose(out.word, *it);
  return out;
}

SSetReport validate_sset_map(const SSetMap& f) {
  if (f.target().cap() < f.source().cap())
    return {false, "target cap below source cap"};
  for (int n = 0; n <= f.source().cap(); ++n) {
    for (int idx = 0; idx < f.source().nd_count(n); ++idx) {
      const SimplexTerm& img = f.image_of(n, idx);
      if (img.dim() != n)
        return {false, "image dimension mismatch at " + f.source().label(n, idx)};
      if (n == 0) continue;
      const SimplexTerm t{n, idx, {}};
      for (int i = 0; i <= n; ++i) {
        if (f.apply(f.source().face(t, i)) != f.target().face(f.apply(t), i))
          return {false, "map fails to commute with face " + std::to_string(i) +
                             " at " + f.source().label(n, idx)};
      }
    }
  }
  return {};
}

SSetMap induced_sset_map(const VertexMap& f,
                         std::shared_ptr<const SSet> source_nerve,
                         std::shared_ptr<const SSet> target_nerve) {
  const VertexMapReport report = validate_vertex_map(f);
  if (!report.ok) throw std::invalid_argument(report.message);

  const int cap = source_nerve->cap();
  const NerveIndex source_index = nerve_index(f.source, cap);
  const NerveIndex target_index = nerve_index(f.target, target_nerve->cap());

  std::vector<std::vector<SimplexTerm>> image(static_cast<std::size_t>(cap) + 1);
  for (int dim = 0; dim <= cap; ++dim) {
    const auto& level = source_index.faces_by_dim[static_cast<std::size_t>(dim)];
    image[static_cast<std::size_t>(dim)].reserve(level.size());
    for (const auto& simplex : level) {
      std::vector<int> mapped;
      mapped.reserve(simplex.size());
      for (int v : simplex) mapped.push_back(f.assignment[static_cast<std::size_t>(v)]);
      image[static_cast<std::size_t>(dim)].push_back(nerve_term(target_index, mapped));
    }
  }
  return SSetMap(std::move(source_nerve), std::move(target_nerve), std::move(image));
}

SSetMap induced_sset_map(const VertexMap& f, int cap) {
  return induced_sset_map(f, nerve_of_complex(f.source, cap),
                          nerve_of_complex(f.target, cap));
}

CochainComplex normalized_cochain_complex(const SSet& x, int cap) {
  if (cap > x.cap()) throw std::out_of_range("dimension cap exceeded");
  std::vector<int> dims;
  for (int n = 0; n <= cap; ++n) dims.push_back(x.nd_count(n));
  std::vector<QMatrix> diffs;
  for (int n = 0; n < cap; ++n) {
    QMatrix d(x.nd_count(n + 1), x.nd_count(n));
    for (int idx = 0; idx < x.nd_count(n + 1); ++idx) {
      for (int i = 0; i <= n + 1; ++i) {
        const SimplexTerm& f = x.face_of(n + 1, idx, i);
        if (f.degenerate()) continue;
        d.add_at(idx, f.base, Rational(i % 2 == 0 ? 1 : -1));
      }
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(0, std::move(dims), std::move(diffs));
}

CochainComplex unnormalized_cochain_complex(const SSet& x, int cap) {
  if (cap > x.cap()) throw std::out_of_range("dimension cap exceeded");
  std::vector<std::vector<SimplexTerm>> levels;
  std::vector<std::map<SimplexTerm, int>> level_index;
  for (int n = 0; n <= cap; ++n) {
    levels.push_back(x.simplices_at(n));
    std::map<SimplexTerm, int> index;
    for (std::size_t i = 0; i < levels.back().size(); ++i)
      index[levels.back()[i]] = static_cast<int>(i);
    level_index.push_back(std::move(index));
  }
  std::vector<int> dims;
  for (const auto& level : levels) dims.push_back(static_cast<int>(level.size()));
  std::vector<QMatrix> diffs;
  for (int n = 0; n < cap; ++n) {
    const auto& source = levels[static_cast<std::size_t>(n)];
    const auto& target = levels[static_cast<std::size_t>(n) + 1];
    const auto& source_index = level_index[static_cast<std::size_t>(n)];
    QMatrix d(static_cast<int>(target.size()), static_cast<int>(source.size()));
    for (std::size_t row = 0; row < target.size(); ++row) {
      for (int i = 0; i <= n + 1; ++i) {
        const SimplexTerm f = x.face(target[row], i);
        d.add_at(static_cast<int>(row), source_index.at(f),
                 Rational(i % 2 == 0 ? 1 : -1));
      }
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(0, std::move(dims), std::move(diffs));
}

QMatrix pullback_matrix(const SSetMap& g, int n, CochainModel model) {
  if (model == CochainModel::normalized) {
    QMatrix m(g.source().nd_count(n), g.target().nd_count(n));
    for (int idx = 0; idx < g.source().nd_count(n); ++idx) {
      const SimplexTerm& img = g.image_of(n, idx);
      if (!img.degenerate()) m.set(idx, img.base, Rational(1));
    }
    return m;
  }
  const auto source_level = g.source().simplices_at(n);
  const auto target_level = g.target().simplices_at(n);
  std::map<SimplexTerm, int> target_index;
  for (std::size_t i = 0; i < target_level.size(); ++i)
    target_index[target_level[i]] = static_cast<int>(i);
  QMatrix m(static_cast<int>(source_level.size()),
            static_cast<int>(target_level.size()));
  for (std::size_t row = 0; row < source_level.size(); ++row)
    m.set(static_cast<int>(row), target_index.at(g.apply(source_level[row])),
          Rational(1));
  return m;
}

ComplexMorphism pullback_cochain_map(const SSetMap& g, int cap, CochainModel model) {
  CochainComplex source_complex =
      model == CochainModel::normalized
          ? normalized_cochain_complex(g.target(), cap)
          : unnormalized_cochain_complex(g.target(), cap);
  CochainComplex target_complex =
      model == CochainModel::normalized
          ? normalized_cochain_complex(g.source(), cap)
          : unnormalized_cochain_complex(g.source(), cap);
  std::map<int, QMatrix> maps;
  for (int n = 0; n <= cap; ++n) maps.emplace(n, pullback_matrix(g, n, model));
  return ComplexMorphism(std::move(source_complex), std::move(target_complex),
                         std::move(maps));
}

bool check_levelwise_surjective(const SSetMap& f, int cap) {
  for (int n = 0; n <= cap; ++n) {
    std::set<SimplexTerm> images;
    for (const SimplexTerm& t : f.source().simplices_at(n)) images.insert(f.apply(t));
    for (const SimplexTerm& t : f.target().simplices_at(n))
      if (!images.count(t)) return false;
  }
  return true;
}

}  // namespace descent
