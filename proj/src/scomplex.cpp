#include "descent/scomplex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace descent {

SComplex::SComplex(std::vector<std::string> vertices,
                   std::vector<std::vector<std::string>> facet_names)
    : vertices_(std::move(vertices)) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index.emplace(vertices_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex name: " + vertices_[i]);
  }
  for (const auto& facet : facet_names) {
    if (facet.empty()) throw std::invalid_argument("empty facet");
    std::vector<int> ids;
    ids.reserve(facet.size());
    for (const auto& name : facet) {
      auto it = index.find(name);
      if (it == index.end())
        throw std::invalid_argument("facet vertex not declared: " + name);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    facets_.push_back(ids);
  }
  // Closure: all nonempty subsets of each facet.
  for (const auto& facet : facets_) {
    const std::size_t n = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) face.push_back(facet[b]);
      closure_.insert(std::move(face));
    }
  }
}

int SComplex::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  return -1;
}

bool SComplex::has_simplex(const std::vector<int>& sorted_vertices) const {
  return closure_.count(sorted_vertices) > 0;
}

int SComplex::dimension() const {
  int d = -1;
  for (const auto& s : closure_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::string SComplex::simplex_name(const std::vector<int>& simplex) const {
  std::string out = "{";
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) out += ",";
    out += vertices_[static_cast<std::size_t>(simplex[i])];
  }
  out += "}";
  return out;
}

VertexMapReport validate_vertex_map(const VertexMap& f) {
  if (f.assignment.size() != f.source.vertices().size())
    return {false, "assignment must cover every source vertex"};
  for (int v : f.assignment)
    if (v < 0 || v >= static_cast<int>(f.target.vertices().size()))
      return {false, "assignment value out of target range"};

  // Checking facets suffices: faces inherit both conditions.
  for (const auto& facet : f.source.facets()) {
    std::vector<int> image;
    image.reserve(facet.size());
    for (int v : facet) image.push_back(f.assignment[static_cast<std::size_t>(v)]);
    for (std::size_t i = 0; i + 1 < image.size(); ++i) {
      if (image[i] > image[i + 1])
        return {false,
                "map is not monotone on simplex " + f.source.simplex_name(facet) +
                    "; barycentric subdivision of the source restores monotonicity"};
    }
    std::vector<int> image_set = image;
    image_set.erase(std::unique(image_set.begin(), image_set.end()), image_set.end());
    if (!f.target.has_simplex(image_set))
      return {false, "image of simplex " + f.source.simplex_name(facet) +
                         " is not a simplex of the target"};
  }
  return {};
}

SComplex image_complex(const VertexMap& f) {
  const VertexMapReport report = validate_vertex_map(f);
  if (!report.ok) throw std::invalid_argument(report.message);

  std::set<std::vector<int>> images;
  for (const auto& facet : f.source.facets()) {
    std::vector<int> image;
    for (int v : facet) image.push_back(f.assignment[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    images.insert(std::move(image));
  }
  // Keep only maximal image simplices as facets.
  std::vector<std::vector<std::string>> facet_names;
  for (const auto& candidate : images) {
    bool maximal = true;
    for (const auto& other : images) {
      if (&other == &candidate || other.size() <= candidate.size()) continue;
      if (std::includes(other.begin(), other.end(), candidate.begin(), candidate.end())) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    std::vector<std::string> names;
    for (int v : candidate) names.push_back(f.target.vertices()[static_cast<std::size_t>(v)]);
    facet_names.push_back(std::move(names));
  }
  return SComplex(f.target.vertices(), facet_names);
}

}  // namespace descent
