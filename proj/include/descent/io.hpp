#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "descent/descent.hpp"
#include "descent/provider.hpp"
#include "descent/quad.hpp"

namespace descent {

// Key order in emitted documents follows insertion order.
using Json = nlohmann::ordered_json;

// Parses a file as JSON; errors carry the path and parse position.
Json load_json_file(const std::string& path);

// Problem documents: vertices, facets, map, optional q, optional
// target_vertices (default: the distinct map values in sorted order; the
// target complex is the full simplex on them). q is -1 when absent.
DescentProblem problem_from_json(const Json& doc);
Json problem_to_json(const DescentProblem& prob);

// Matrices as triplet lists [row, col, "num/den"], row-major order.
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& entries, int rows, int cols,
                         const std::string& where);

// Polynomials as {"terms": [{"vars": [...], "coeff": "num/den"}, ...]}.
Json poly_to_json(const QuadraticPoly& p);
QuadraticPoly poly_from_json(const Json& doc, const std::string& where);

// Polynomial list documents: polynomials, optional k, m, q (each -1 when
// absent; absent k and m are inferred from the variables that occur).
struct PolyDocument {
  std::vector<QuadraticPoly> polynomials;
  int k = -1;
  int m = -1;
  int q = -1;
};
PolyDocument polys_from_json(const Json& doc);

// Bundle documents: q, l, complexes[{index_set, degree_range, dims,
// differentials}], morphisms[{from, to, slot | swap, degree_range, matrices}].
Json bundle_to_json(const ProviderBundle& bundle);
ProviderBundle bundle_from_json(const Json& doc);

}  // namespace descent
