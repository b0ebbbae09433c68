#include "descent/provider.hpp"

#include <stdexcept>
#include <string>

#include "descent/double_complex.hpp"

namespace descent {

namespace {

std::vector<int> contiguous_index_set(int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = i + 1;
  }
  return out;
}

std::string column_name(int i) { return "L_" + std::to_string(i); }

const ProviderComplex* find_complex(const ProviderBundle& bundle,
                                    const std::vector<int>& index_set) {
  for (const ProviderComplex& pc : bundle.complexes) {
    if (pc.index_set == index_set) {
      return &pc;
    }
  }
  return nullptr;
}

const ProviderMorphism* find_morphism(const ProviderBundle& bundle,
                                      const std::vector<int>& from,
                                      const std::vector<int>& to, int slot) {
  for (const ProviderMorphism& pm : bundle.morphisms) {
    if (pm.slot == slot && pm.from == from && pm.to == to) {
      return &pm;
    }
  }
  return nullptr;
}

QMatrix morphism_matrix_at(const ProviderMorphism& pm, int degree, int rows,
                           int cols, const std::string& name) {
  const int offset = degree - pm.lo;
  if (offset < 0 || offset >= static_cast<int>(pm.matrices.size())) {
    return QMatrix(rows, cols);
  }
  const QMatrix& m = pm.matrices[static_cast<std::size_t>(offset)];
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(
        name + " has a " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()) + " matrix at degree " + std::to_string(degree) +
        " where " + std::to_string(rows) + "x" + std::to_string(cols) +
        " is expected");
  }
  return m;
}

}  // namespace

BettiVector assemble_from_provider(const ProviderBundle& bundle, int q) {
  if (q < 0) {
    throw std::invalid_argument("betti range must be nonnegative");
  }
  if (bundle.l < 1) {
    throw std::invalid_argument("block size must be positive");
  }

  std::vector<const CochainComplex*> columns(static_cast<std::size_t>(q) + 2);
  for (int i = 0; i <= q + 1; ++i) {
    const std::vector<int> wanted = contiguous_index_set(bundle.l * (i + 1));
    const ProviderComplex* pc = find_complex(bundle, wanted);
    if (pc == nullptr) {
      throw std::invalid_argument("bundle is missing the complex for " +
                                  column_name(i));
    }
    const ComplexReport report = validate_complex(pc->complex);
    if (!report.ok) {
      throw std::invalid_argument("complex for " + column_name(i) + ": " +
                                  report.message);
    }
    columns[static_cast<std::size_t>(i)] = &pc->complex;
  }

  DoubleComplex grid;
  for (int i = 0; i <= q + 1; ++i) {
    for (int j = 0; i + j <= q + 1; ++j) {
      grid.set_dim(i, j, columns[static_cast<std::size_t>(i)]->dim(j));
    }
  }
  for (int i = 0; i <= q; ++i) {
    const CochainComplex& from = *columns[static_cast<std::size_t>(i)];
    const CochainComplex& to = *columns[static_cast<std::size_t>(i) + 1];
    const std::vector<int> from_set = contiguous_index_set(bundle.l * (i + 1));
    const std::vector<int> to_set = contiguous_index_set(bundle.l * (i + 2));
    std::vector<const ProviderMorphism*> slots(static_cast<std::size_t>(i) + 2);
    for (int h = 0; h <= i + 1; ++h) {
      const ProviderMorphism* pm = find_morphism(bundle, from_set, to_set, h);
      if (pm == nullptr) {
        throw std::invalid_argument("bundle is missing the morphism " +
                                    column_name(i) + " -> " + column_name(i + 1) +
                                    " at slot " + std::to_string(h));
      }
      const std::string name = "morphism " + column_name(i) + " -> " +
                               column_name(i + 1) + " at slot " +
                               std::to_string(h);
      std::map<int, QMatrix> maps;
      for (std::size_t t = 0; t < pm->matrices.size(); ++t) {
        maps.emplace(pm->lo + static_cast<int>(t), pm->matrices[t]);
      }
      const ComplexReport square =
          validate_morphism(ComplexMorphism(from, to, std::move(maps)));
      if (!square.ok) {
        throw std::invalid_argument(name + ": " + square.message);
      }
      slots[static_cast<std::size_t>(h)] = pm;
    }
    for (int j = 0; i + j <= q; ++j) {
      const int rows = to.dim(j);
      const int cols = from.dim(j);
      QMatrix delta(rows, cols);
      for (int h = 0; h <= i + 1; ++h) {
        const std::string name = "morphism " + column_name(i) + " -> " +
                                 column_name(i + 1) + " at slot " +
                                 std::to_string(h);
        const QMatrix part = morphism_matrix_at(
            *slots[static_cast<std::size_t>(h)], j, rows, cols, name);
        delta = add(delta, h % 2 == 0 ? part : part.scaled(-1));
      }
      grid.set_horiz(i, j, std::move(delta));
      QMatrix vertical = from.diff(j);
      if (i % 2 == 1) {
        vertical = vertical.scaled(-1);
      }
      grid.set_vert(i, j, std::move(vertical));
    }
  }

  const DoubleReport report = validate_double_complex(grid);
  if (!report.ok) {
    throw std::invalid_argument("assembled grid fails at cell (" +
                                std::to_string(report.i) + "," +
                                std::to_string(report.j) + "): " + report.message);
  }
  BettiVector out;
  out.values = cohomology_dims(total_complex(grid), 0, q);
  return out;
}

ProviderBundle mock_bundle_from_problem(const DescentProblem& prob) {
  const DescentContext ctx(prob, false);
  const int q = ctx.q();

  ProviderBundle bundle;
  bundle.q = q;
  bundle.l = 1;
  for (int i = 0; i <= q + 1; ++i) {
    ProviderComplex pc;
    pc.index_set = contiguous_index_set(i + 1);
    pc.complex =
        normalized_cochain_complex(*ctx.power(i).carrier, q + 1 - i);
    bundle.complexes.push_back(std::move(pc));
  }
  for (int i = 0; i <= q; ++i) {
    for (int h = 0; h <= i + 1; ++h) {
      ProviderMorphism pm;
      pm.from = contiguous_index_set(i + 1);
      pm.to = contiguous_index_set(i + 2);
      pm.slot = h;
      pm.lo = 0;
      const SSetMap& projection = projection_map(ctx.power(i + 1), h);
      for (int j = 0; j <= q - i; ++j) {
        pm.matrices.push_back(
            pullback_matrix(projection, j, CochainModel::normalized));
      }
      bundle.morphisms.push_back(std::move(pm));
    }
  }
  return bundle;
}

}  // namespace descent
