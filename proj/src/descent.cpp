#include "descent/descent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace descent {

std::string BettiVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(values[i]);
  }
  return out;
}

DescentContext::DescentContext(const DescentProblem& prob, bool with_checker_caps)
    : prob_(prob) {
  if (prob.q < 0) throw std::invalid_argument("negative betti range");
  const VertexMapReport report = validate_vertex_map(prob.f);
  if (!report.ok) throw std::invalid_argument(report.message);

  image_ = image_complex(prob.f);
  VertexMap onto{prob.f.source, image_, prob.f.assignment};

  const int q = prob.q;
  const int nerve_cap = q + 2;
  xs_ = nerve_of_complex(onto.source, nerve_cap);
  ys_ = nerve_of_complex(image_, nerve_cap);
  f_ = induced_sset_map(onto, xs_, ys_);

  // Replacing the target by the image makes every level surjective (each
  // image simplex lifts along a monotone section); the check guards the
  // construction rather than the input.
  if (!check_levelwise_surjective(f_, q + 1))
    throw std::logic_error("image-corrected map is not levelwise surjective");

  std::vector<int> caps;
  for (int p = 0; p <= q + 1; ++p)
    caps.push_back(with_checker_caps ? q + 1 : std::max(q + 1 - p, 0));
  powers_ = fibered_power_tower(f_, caps);
}

const FiberedPower& DescentContext::power(int p) const {
  return powers_.at(static_cast<std::size_t>(p));
}

DoubleComplex DescentContext::descent_double_complex(CochainModel model) const {
  const int q = prob_.q;
  DoubleComplex d;
  std::vector<CochainComplex> columns;
  for (int p = 0; p <= q + 1; ++p) {
    const int cap = q + 1 - p;
    const SSet& w = *power(p).carrier;
    columns.push_back(model == CochainModel::normalized
                          ? normalized_cochain_complex(w, cap)
                          : unnormalized_cochain_complex(w, cap));
  }
  for (int p = 0; p <= q + 1; ++p) {
    for (int n = 0; n + p <= q + 1; ++n) {
      d.set_dim(p, n, columns[static_cast<std::size_t>(p)].dim(n));
      if (n + p <= q) {
        // Vertical: coboundary with the alternating column sign.
        QMatrix vert = columns[static_cast<std::size_t>(p)].diff(n);
        if (p % 2 == 1) vert = vert.scaled(Rational(-1));
        d.set_vert(p, n, std::move(vert));
        // Horizontal: alternating sum of projection pullbacks into the next
        // power.
        const FiberedPower& next = power(p + 1);
        QMatrix horiz(columns[static_cast<std::size_t>(p + 1)].dim(n),
                      columns[static_cast<std::size_t>(p)].dim(n));
        for (int i = 0; i <= p + 1; ++i) {
          const QMatrix part = pullback_matrix(projection_map(next, i), n, model);
          horiz = add(horiz, i % 2 == 0 ? part : part.scaled(Rational(-1)));
        }
        d.set_horiz(p, n, std::move(horiz));
      }
    }
  }
  return d;
}

BettiVector DescentContext::betti_of_image() const {
  const DoubleComplex d = descent_double_complex(CochainModel::normalized);
  const CochainComplex tot = total_complex(d);
  return BettiVector{cohomology_dims(tot, 0, prob_.q)};
}

BettiVector DescentContext::direct_betti() const {
  const CochainComplex c = normalized_cochain_complex(*ys_, prob_.q + 1);
  return BettiVector{cohomology_dims(c, 0, prob_.q)};
}

DoubleComplex build_descent_double_complex(const DescentProblem& prob,
                                           CochainModel model) {
  return DescentContext(prob, false).descent_double_complex(model);
}

BettiVector betti_of_image(const DescentProblem& prob) {
  return DescentContext(prob, false).betti_of_image();
}

BettiVector direct_betti(const DescentProblem& prob) {
  return DescentContext(prob, false).direct_betti();
}

namespace {

// Unnormalized level-n simplices of a power, bucketed by common image term.
// The augmented row maps preserve the image term, so every rank computation
// splits over these buckets.
struct LevelBuckets {
  std::vector<SimplexTerm> terms;
  std::map<SimplexTerm, std::vector<int>> by_image;
  std::map<SimplexTerm, int> position_in_bucket;
};

LevelBuckets bucket_level(const FiberedPower& w, int n) {
  LevelBuckets out;
  out.terms = w.carrier->simplices_at(n);
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    const SimplexTerm image = w.to_base.apply(out.terms[i]);
    auto& bucket = out.by_image[image];
    out.position_in_bucket[out.terms[i]] = static_cast<int>(bucket.size());
    bucket.push_back(static_cast<int>(i));
  }
  return out;
}

// Per-bucket matrix of the alternating projection-pullback sum
// C^n(W^p) -> C^n(W^(p+1)) over one image simplex.
QMatrix bucket_delta(const FiberedPower& next, const LevelBuckets& rows,
                     const LevelBuckets& cols, const SimplexTerm& image) {
  auto rit = rows.by_image.find(image);
  auto cit = cols.by_image.find(image);
  const int nrows = rit == rows.by_image.end() ? 0 : static_cast<int>(rit->second.size());
  const int ncols = cit == cols.by_image.end() ? 0 : static_cast<int>(cit->second.size());
  QMatrix m(nrows, ncols);
  if (nrows == 0 || ncols == 0) return m;
  for (int r = 0; r < nrows; ++r) {
    const SimplexTerm& term = rows.terms[static_cast<std::size_t>(rit->second[static_cast<std::size_t>(r)])];
    for (int i = 0; i <= next.p; ++i) {
      const SimplexTerm dropped = projection_map(next, i).apply(term);
      m.add_at(r, cols.position_in_bucket.at(dropped),
               Rational(i % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

}  // namespace

ExactnessReport verify_mv_exactness(const DescentContext& ctx) {
  const int q = ctx.q();
  ExactnessReport report;

  for (int n = 0; n <= q + 1; ++n) {
    std::vector<LevelBuckets> buckets;
    for (int p = 0; p <= q + 1; ++p) buckets.push_back(bucket_level(ctx.power(p), n));

    const auto y_terms = ctx.map().target().simplices_at(n);

    // Augmentation: one column per image simplex, entry 1 at each member of
    // its fiber. Kernel per bucket is therefore 0 or 1 columns.
    int aug_rank = 0;
    for (const SimplexTerm& y : y_terms)
      if (buckets[0].by_image.count(y)) ++aug_rank;
    const bool injective = aug_rank == static_cast<int>(y_terms.size());
    report.augmentation_injective.push_back(injective);
    if (!injective) report.pass = false;

    for (int p = 0; p <= q; ++p) {
      ExactnessEntry entry;
      entry.degree = n;
      entry.position = p;
      int dim_kernel = 0;
      int dim_image = 0;
      bool composites_zero = true;

      for (const SimplexTerm& y : y_terms) {
        const QMatrix out =
            bucket_delta(ctx.power(p + 1), buckets[static_cast<std::size_t>(p + 1)],
                         buckets[static_cast<std::size_t>(p)], y);
        const int out_rank = rank(out);
        dim_kernel += out.cols() - out_rank;
        if (p == 0) {
          // Image of the augmentation inside this bucket is the constant
          // vector; dimension 1 when the fiber is nonempty. The composite
          // (delta after augmentation) is zero iff the constant vector lies
          // in the kernel.
          if (out.cols() > 0) {
            dim_image += 1;
            QMatrix constant(out.cols(), 1);
            for (int r = 0; r < out.cols(); ++r) constant.set(r, 0, Rational(1));
            if (!matmul(out, constant).is_zero()) composites_zero = false;
          }
        } else {
          const QMatrix in =
              bucket_delta(ctx.power(p), buckets[static_cast<std::size_t>(p)],
                           buckets[static_cast<std::size_t>(p - 1)], y);
          dim_image += rank(in);
          if (!matmul(out, in).is_zero()) composites_zero = false;
        }
      }

      entry.dim_kernel = dim_kernel;
      entry.dim_image = dim_image;
      entry.composite_zero = composites_zero;
      entry.pass = composites_zero && dim_kernel == dim_image;
      if (!entry.pass) report.pass = false;
      report.entries.push_back(entry);
    }
  }
  return report;
}

ExactnessReport verify_mv_exactness(const DescentProblem& prob) {
  return verify_mv_exactness(DescentContext(prob, true));
}

std::pair<int, int> descent_inequality(const DescentContext& ctx, int n) {
  if (n < 0 || n > ctx.q()) throw std::invalid_argument("degree outside betti range");
  const int lhs = ctx.direct_betti().values[static_cast<std::size_t>(n)];
  int rhs = 0;
  for (int i = 0; i <= n; ++i) {
    const int j = n - i;
    const CochainComplex c =
        normalized_cochain_complex(*ctx.power(i).carrier, ctx.q() + 1 - i);
    rhs += cohomology_dims(c, j, j)[0];
  }
  return {lhs, rhs};
}

std::pair<int, int> descent_inequality(const DescentProblem& prob, int n) {
  return descent_inequality(DescentContext(prob, false), n);
}

DegenerationReport e2_degeneration_report(const DescentContext& ctx) {
  const int q = ctx.q();
  DegenerationReport report;
  const DoubleComplex d = ctx.descent_double_complex(CochainModel::normalized);
  report.e1 = page(d, Filtration::row, 1);
  report.e2 = page(d, Filtration::row, 2);
  report.expected = ctx.direct_betti().values;
  for (int j = 0; j <= q; ++j) report.column0.push_back(report.e2.dim_at(0, j));
  if (report.column0 != report.expected) report.pass = false;
  for (const auto& [cell, dim] : report.e2.dims) {
    const auto [i, j] = cell;
    if (i >= 1 && i + j <= q && dim != 0) {
      report.violations.push_back({cell, dim});
      report.pass = false;
    }
  }
  return report;
}

DegenerationReport e2_degeneration_report(const DescentProblem& prob) {
  return e2_degeneration_report(DescentContext(prob, false));
}

}  // namespace descent
