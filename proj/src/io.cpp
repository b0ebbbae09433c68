#include "descent/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace descent {

namespace {

const Json& require_field(const Json& doc, const char* name,
                          const std::string& where) {
  if (!doc.is_object()) {
    throw std::invalid_argument(where + " must be a JSON object");
  }
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw std::invalid_argument(where + " is missing field \"" + name + "\"");
  }
  return *it;
}

std::string get_string(const Json& value, const std::string& where) {
  if (!value.is_string()) {
    throw std::invalid_argument(where + " must be a string");
  }
  return value.get<std::string>();
}

int get_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument(where + " must be an integer");
  }
  return value.get<int>();
}

std::vector<std::string> get_string_list(const Json& value,
                                         const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + " must be an array");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(get_string(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> get_int_list(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + " must be an array");
  }
  std::vector<int> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(get_int(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

DescentProblem problem_from_json(const Json& doc) {
  const std::string where = "problem document";
  const std::vector<std::string> vertices =
      get_string_list(require_field(doc, "vertices", where), where + " vertices");

  const Json& facets_json = require_field(doc, "facets", where);
  if (!facets_json.is_array()) {
    throw std::invalid_argument(where + " facets must be an array");
  }
  std::vector<std::vector<std::string>> facets;
  facets.reserve(facets_json.size());
  for (std::size_t i = 0; i < facets_json.size(); ++i) {
    facets.push_back(get_string_list(facets_json[i],
                                     "facet " + std::to_string(i)));
  }

  const Json& map_json = require_field(doc, "map", where);
  if (!map_json.is_object()) {
    throw std::invalid_argument(where + " map must be an object");
  }

  SComplex source(vertices, facets);

  std::vector<std::string> target_vertices;
  if (doc.contains("target_vertices")) {
    target_vertices =
        get_string_list(doc["target_vertices"], where + " target_vertices");
  } else {
    std::set<std::string> values;
    for (const auto& [key, value] : map_json.items()) {
      values.insert(get_string(value, "map value for \"" + key + "\""));
    }
    target_vertices.assign(values.begin(), values.end());
  }
  SComplex target(target_vertices,
                  target_vertices.empty()
                      ? std::vector<std::vector<std::string>>{}
                      : std::vector<std::vector<std::string>>{target_vertices});

  std::vector<int> assignment(vertices.size(), -1);
  for (const auto& [key, value] : map_json.items()) {
    const int src = source.vertex_index(key);
    if (src < 0) {
      throw std::invalid_argument("map names unknown vertex \"" + key + "\"");
    }
    const std::string image = get_string(value, "map value for \"" + key + "\"");
    const int tgt = target.vertex_index(image);
    if (tgt < 0) {
      throw std::invalid_argument("map sends \"" + key +
                                  "\" to unknown vertex \"" + image + "\"");
    }
    assignment[static_cast<std::size_t>(src)] = tgt;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (assignment[i] < 0) {
      throw std::invalid_argument("map is missing vertex \"" + vertices[i] + "\"");
    }
  }

  DescentProblem prob;
  prob.x = std::move(source);
  prob.f = VertexMap{prob.x, std::move(target), std::move(assignment)};
  prob.q = doc.contains("q") ? get_int(doc["q"], where + " q") : -1;
  return prob;
}

Json problem_to_json(const DescentProblem& prob) {
  Json doc;
  doc["vertices"] = prob.x.vertices();
  Json facets = Json::array();
  for (const std::vector<int>& facet : prob.x.facets()) {
    Json names = Json::array();
    for (int v : facet) {
      names.push_back(prob.x.vertices()[static_cast<std::size_t>(v)]);
    }
    facets.push_back(std::move(names));
  }
  doc["facets"] = std::move(facets);
  Json map = Json::object();
  for (std::size_t i = 0; i < prob.x.vertices().size(); ++i) {
    map[prob.x.vertices()[i]] =
        prob.f.target.vertices()[static_cast<std::size_t>(prob.f.assignment[i])];
  }
  doc["map"] = std::move(map);
  doc["q"] = prob.q;
  doc["target_vertices"] = prob.f.target.vertices();
  return doc;
}

Json matrix_to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, value] : m.row_entries(r)) {
      entries.push_back(Json::array({r, c, format_rational(value)}));
    }
  }
  return entries;
}

QMatrix matrix_from_json(const Json& entries, int rows, int cols,
                         const std::string& where) {
  if (!entries.is_array()) {
    throw std::invalid_argument(where + " must be a triplet array");
  }
  QMatrix m(rows, cols);
  for (const Json& entry : entries) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument(where + " entries must be [row, col, value]");
    }
    const int r = get_int(entry[0], where + " row");
    const int c = get_int(entry[1], where + " column");
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw std::invalid_argument(where + " entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") outside " +
                                  std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
    try {
      m.set(r, c, parse_rational(get_string(entry[2], where + " value")));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + " entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + "): " + e.what());
    }
  }
  return m;
}

Json poly_to_json(const QuadraticPoly& p) {
  Json terms = Json::array();
  for (const auto& [vars, coeff] : p.terms()) {
    Json term;
    term["vars"] = vars;
    term["coeff"] = format_rational(coeff);
    terms.push_back(std::move(term));
  }
  Json doc;
  doc["terms"] = std::move(terms);
  return doc;
}

QuadraticPoly poly_from_json(const Json& doc, const std::string& where) {
  const Json& terms = require_field(doc, "terms", where);
  if (!terms.is_array()) {
    throw std::invalid_argument(where + " terms must be an array");
  }
  QuadraticPoly p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string term_where = where + " term " + std::to_string(i);
    const Json& term = terms[i];
    const std::vector<std::string> vars =
        get_string_list(require_field(term, "vars", term_where),
                        term_where + " vars");
    if (vars.size() > 2) {
      throw std::invalid_argument(term_where + " has degree " +
                                  std::to_string(vars.size()) +
                                  ", which exceeds 2");
    }
    const std::string coeff =
        get_string(require_field(term, "coeff", term_where), term_where + " coeff");
    try {
      p.add_term(vars, parse_rational(coeff));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(term_where + ": " + e.what());
    }
  }
  return p;
}

std::string emit_system(const FiberedSystem& fs) {
  Json doc;
  doc["k"] = fs.k;
  doc["m"] = fs.m;
  doc["l"] = fs.l;
  doc["q"] = fs.q;
  doc["variables"] = fs.variables;
  Json blocks = Json::array();
  for (const std::vector<QuadraticPoly>& row : fs.blocks) {
    Json copies = Json::array();
    for (const QuadraticPoly& p : row) {
      copies.push_back(poly_to_json(p));
    }
    blocks.push_back(std::move(copies));
  }
  doc["blocks"] = std::move(blocks);
  Json index_sets = Json::array();
  for (int j = 0; j <= fs.q + 1; ++j) {
    index_sets.push_back(fs.index_set(j));
  }
  doc["index_sets"] = std::move(index_sets);
  Json systems = Json::array();
  for (int p = 0; p <= fs.q + 1; ++p) {
    Json system;
    system["p"] = p;
    system["size"] = fs.system_size(p);
    Json members = Json::array();
    for (const auto& [i, j] : fs.system(p)) {
      members.push_back(Json::array({i, j}));
    }
    system["members"] = std::move(members);
    systems.push_back(std::move(system));
  }
  doc["systems"] = std::move(systems);
  return doc.dump(2) + "\n";
}

FiberedSystem parse_system(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("system document: ") + e.what());
  }
  const std::string where = "system document";
  FiberedSystem fs;
  fs.k = get_int(require_field(doc, "k", where), where + " k");
  fs.m = get_int(require_field(doc, "m", where), where + " m");
  fs.l = get_int(require_field(doc, "l", where), where + " l");
  fs.q = get_int(require_field(doc, "q", where), where + " q");
  if (fs.k < 0 || fs.m < 0 || fs.l < 0 || fs.q < 0) {
    throw std::invalid_argument(where + " counts must be nonnegative");
  }
  for (int j = 0; j <= fs.q + 1; ++j) {
    for (int i = 1; i <= fs.k; ++i) {
      fs.variables.push_back(block_var(i, j));
    }
  }
  for (int j = 1; j <= fs.m; ++j) {
    fs.variables.push_back(y_var(j));
  }
  const Json& blocks = require_field(doc, "blocks", where);
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != fs.l) {
    throw std::invalid_argument(where + " blocks must list one row per polynomial");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Json& row = blocks[i];
    if (!row.is_array() || static_cast<int>(row.size()) != fs.q + 2) {
      throw std::invalid_argument(where + " block row " + std::to_string(i) +
                                  " must list " + std::to_string(fs.q + 2) +
                                  " copies");
    }
    std::vector<QuadraticPoly> copies;
    copies.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      copies.push_back(poly_from_json(
          row[j], "block (" + std::to_string(i + 1) + "," + std::to_string(j) + ")"));
    }
    fs.blocks.push_back(std::move(copies));
  }
  return fs;
}

PolyDocument polys_from_json(const Json& doc) {
  const std::string where = "polynomial document";
  const Json& list = require_field(doc, "polynomials", where);
  if (!list.is_array()) {
    throw std::invalid_argument(where + " polynomials must be an array");
  }
  PolyDocument out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.polynomials.push_back(
        poly_from_json(list[i], "polynomial " + std::to_string(i)));
  }
  if (doc.contains("k")) out.k = get_int(doc["k"], where + " k");
  if (doc.contains("m")) out.m = get_int(doc["m"], where + " m");
  if (doc.contains("q")) out.q = get_int(doc["q"], where + " q");
  return out;
}

Json bundle_to_json(const ProviderBundle& bundle) {
  Json doc;
  doc["q"] = bundle.q;
  doc["l"] = bundle.l;
  Json complexes = Json::array();
  for (const ProviderComplex& pc : bundle.complexes) {
    Json entry;
    entry["index_set"] = pc.index_set;
    entry["degree_range"] = Json::array({pc.complex.lo(), pc.complex.hi()});
    Json dims = Json::array();
    Json diffs = Json::array();
    for (int d = pc.complex.lo(); d <= pc.complex.hi(); ++d) {
      dims.push_back(pc.complex.dim(d));
      if (d < pc.complex.hi()) {
        diffs.push_back(matrix_to_json(pc.complex.diff(d)));
      }
    }
    entry["dims"] = std::move(dims);
    entry["differentials"] = std::move(diffs);
    complexes.push_back(std::move(entry));
  }
  doc["complexes"] = std::move(complexes);
  Json morphisms = Json::array();
  for (const ProviderMorphism& pm : bundle.morphisms) {
    Json entry;
    entry["from"] = pm.from;
    entry["to"] = pm.to;
    if (pm.slot >= 0) {
      entry["slot"] = pm.slot;
    }
    if (!pm.swap.empty()) {
      entry["swap"] = pm.swap;
    }
    entry["degree_range"] = Json::array(
        {pm.lo, pm.lo + static_cast<int>(pm.matrices.size()) - 1});
    Json matrices = Json::array();
    for (const QMatrix& m : pm.matrices) {
      Json with_shape;
      with_shape["rows"] = m.rows();
      with_shape["cols"] = m.cols();
      with_shape["entries"] = matrix_to_json(m);
      matrices.push_back(std::move(with_shape));
    }
    entry["matrices"] = std::move(matrices);
    morphisms.push_back(std::move(entry));
  }
  doc["morphisms"] = std::move(morphisms);
  return doc;
}

ProviderBundle bundle_from_json(const Json& doc) {
  const std::string where = "bundle document";
  ProviderBundle bundle;
  bundle.q = get_int(require_field(doc, "q", where), where + " q");
  bundle.l = get_int(require_field(doc, "l", where), where + " l");

  const Json& complexes = require_field(doc, "complexes", where);
  if (!complexes.is_array()) {
    throw std::invalid_argument(where + " complexes must be an array");
  }
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    const std::string cw = "complex " + std::to_string(i);
    const Json& entry = complexes[i];
    ProviderComplex pc;
    pc.index_set = get_int_list(require_field(entry, "index_set", cw),
                                cw + " index_set");
    const std::vector<int> range =
        get_int_list(require_field(entry, "degree_range", cw), cw + " degree_range");
    if (range.size() != 2) {
      throw std::invalid_argument(cw + " degree_range must be [lo, hi]");
    }
    const std::vector<int> dims =
        get_int_list(require_field(entry, "dims", cw), cw + " dims");
    if (static_cast<int>(dims.size()) != range[1] - range[0] + 1) {
      throw std::invalid_argument(cw + " dims length does not match degree_range");
    }
    const Json& diffs = require_field(entry, "differentials", cw);
    if (!diffs.is_array() ||
        diffs.size() + 1 != dims.size()) {
      throw std::invalid_argument(
          cw + " needs one differential per adjacent degree pair");
    }
    std::vector<QMatrix> matrices;
    matrices.reserve(diffs.size());
    for (std::size_t d = 0; d < diffs.size(); ++d) {
      matrices.push_back(matrix_from_json(
          diffs[d], dims[d + 1], dims[d],
          cw + " differential at degree " + std::to_string(range[0] + static_cast<int>(d))));
    }
    pc.complex = CochainComplex(range[0], dims, std::move(matrices));
    bundle.complexes.push_back(std::move(pc));
  }

  const Json& morphisms = require_field(doc, "morphisms", where);
  if (!morphisms.is_array()) {
    throw std::invalid_argument(where + " morphisms must be an array");
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string mw = "morphism " + std::to_string(i);
    const Json& entry = morphisms[i];
    ProviderMorphism pm;
    pm.from = get_int_list(require_field(entry, "from", mw), mw + " from");
    pm.to = get_int_list(require_field(entry, "to", mw), mw + " to");
    if (entry.contains("slot")) {
      pm.slot = get_int(entry["slot"], mw + " slot");
    }
    if (entry.contains("swap")) {
      pm.swap = get_int_list(entry["swap"], mw + " swap");
    }
    if (pm.slot < 0 && pm.swap.empty()) {
      throw std::invalid_argument(mw + " needs a slot or a swap tag");
    }
    const std::vector<int> range =
        get_int_list(require_field(entry, "degree_range", mw), mw + " degree_range");
    if (range.size() != 2) {
      throw std::invalid_argument(mw + " degree_range must be [lo, hi]");
    }
    pm.lo = range[0];
    const Json& matrices = require_field(entry, "matrices", mw);
    if (!matrices.is_array() ||
        static_cast<int>(matrices.size()) != range[1] - range[0] + 1) {
      throw std::invalid_argument(mw + " needs one matrix per degree in range");
    }
    for (std::size_t t = 0; t < matrices.size(); ++t) {
      const std::string dw =
          mw + " matrix at degree " + std::to_string(pm.lo + static_cast<int>(t));
      const Json& m = matrices[t];
      const int rows = get_int(require_field(m, "rows", dw), dw + " rows");
      const int cols = get_int(require_field(m, "cols", dw), dw + " cols");
      pm.matrices.push_back(
          matrix_from_json(require_field(m, "entries", dw), rows, cols, dw));
    }
    bundle.morphisms.push_back(std::move(pm));
  }
  return bundle;
}

}  // namespace descent
