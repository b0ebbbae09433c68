#pragma once

#include <set>
#include <string>
#include <vector>

namespace descent {

// Finite simplicial complex on a totally ordered vertex set. Simplices are
// the nonempty subsets of the listed facets; vertices not covered by any
// facet carry no simplex.
class SComplex {
 public:
  SComplex() = default;
  SComplex(std::vector<std::string> vertices,
           std::vector<std::vector<std::string>> facet_names);

  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_index(const std::string& name) const;  // -1 when absent

  // Facets as sorted vertex-index lists.
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  // Closure of the facets, deduplicated, as sorted index lists.
  const std::set<std::vector<int>>& simplices() const { return closure_; }
  bool has_simplex(const std::vector<int>& sorted_vertices) const;

  bool empty() const { return closure_.empty(); }
  int dimension() const;  // -1 when empty

  std::string simplex_name(const std::vector<int>& simplex) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> facets_;
  std::set<std::vector<int>> closure_;
};

// Vertex assignment between complexes. Valid when every source simplex maps
// to a simplex of the target and the restriction to each simplex is weakly
// monotone for the two global vertex orders.
struct VertexMap {
  SComplex source;
  SComplex target;
  std::vector<int> assignment;  // source vertex index -> target vertex index
};

struct VertexMapReport {
  bool ok = true;
  std::string message;
};

VertexMapReport validate_vertex_map(const VertexMap& f);

// Complex of all image simplices: facets are the maximal images of source
// facets. Vertex set and order are inherited from the target.
SComplex image_complex(const VertexMap& f);

}  // namespace descent
