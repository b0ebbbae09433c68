#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/scomplex.hpp"
#include "descent/sset.hpp"

namespace {

using descent::CochainModel;
using descent::SComplex;
using descent::SimplexTerm;
using descent::SSet;
using descent::SSetMap;
using descent::VertexMap;

SComplex triangle_boundary() {
  return SComplex({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
}

SComplex full_triangle() {
  return SComplex({"v0", "v1", "v2"}, {{"v0", "v1", "v2"}});
}

SComplex tetra_boundary() {
  return SComplex({"v0", "v1", "v2", "v3"}, {{"v0", "v1", "v2"},
                                             {"v0", "v1", "v3"},
                                             {"v0", "v2", "v3"},
                                             {"v1", "v2", "v3"}});
}

// Independent count of all n-simplices of a nerve: weakly increasing vertex
// sequences of length n+1 whose support is a simplex of the complex.
long long monotone_sequence_count(const SComplex& k, int n) {
  const int vertex_count = static_cast<int>(k.vertices().size());
  long long total = 0;
  std::vector<int> seq;
  std::function<void(int)> extend = [&](int min_vertex) {
    if (static_cast<int>(seq.size()) == n + 1) {
      std::vector<int> support(seq);
      support.erase(std::unique(support.begin(), support.end()), support.end());
      if (k.has_simplex(support)) {
        ++total;
      }
      return;
    }
    for (int v = min_vertex; v < vertex_count; ++v) {
      seq.push_back(v);
      extend(v);
      seq.pop_back();
    }
  };
  extend(0);
  return total;
}

}  // namespace

TEST_CASE("nerves list the complex faces per dimension") {
  const auto circle = nerve_of_complex(triangle_boundary(), 2);
  CHECK(circle->nd_count(0) == 3);
  CHECK(circle->nd_count(1) == 3);
  CHECK(circle->nd_count(2) == 0);
  CHECK(validate_sset(*circle).ok);

  const auto disk = nerve_of_complex(full_triangle(), 3);
  CHECK(disk->nd_count(0) == 3);
  CHECK(disk->nd_count(1) == 3);
  CHECK(disk->nd_count(2) == 1);
  CHECK(disk->nd_count(3) == 0);
  CHECK(validate_sset(*disk).ok);
  CHECK(disk->label(2, 0) == "{v0,v1,v2}");

  const auto sphere = nerve_of_complex(tetra_boundary(), 3);
  CHECK(sphere->nd_count(0) == 4);
  CHECK(sphere->nd_count(1) == 6);
  CHECK(sphere->nd_count(2) == 4);
  CHECK(sphere->nd_count(3) == 0);
  CHECK(validate_sset(*sphere).ok);
}

TEST_CASE("level counts match the monotone sequence oracle") {
  const SComplex point({"p"}, {{"p"}});
  const SComplex edge({"a", "b"}, {{"a", "b"}});
  const auto point_nerve = nerve_of_complex(point, 3);
  const auto edge_nerve = nerve_of_complex(edge, 3);
  const auto circle = nerve_of_complex(triangle_boundary(), 3);
  const auto disk = nerve_of_complex(full_triangle(), 3);

  struct Case {
    const SSet* space;
    const SComplex complex;
  };
  const std::vector<Case> cases = {{point_nerve.get(), point},
                                   {edge_nerve.get(), edge},
                                   {circle.get(), triangle_boundary()},
                                   {disk.get(), full_triangle()}};
  for (const auto& c : cases) {
    for (int n = 0; n <= 3; ++n) {
      INFO("level " << n);
      CHECK(static_cast<long long>(c.space->simplices_at(n).size()) ==
            monotone_sequence_count(c.complex, n));
    }
  }
  // Hand values: an edge has 3 1-simplices and 4 2-simplices; a point has one
  // simplex in every dimension.
  CHECK(edge_nerve->simplices_at(1).size() == 3);
  CHECK(edge_nerve->simplices_at(2).size() == 4);
  CHECK(point_nerve->simplices_at(3).size() == 1);
  CHECK(circle->simplices_at(2).size() == 9);
  CHECK_THROWS_AS(circle->simplices_at(4), std::out_of_range);

  // The enumeration is deterministic.
  CHECK(disk->simplices_at(3) == disk->simplices_at(3));
}

TEST_CASE("face and degeneracy operators satisfy the simplicial identities") {
  const auto disk = nerve_of_complex(full_triangle(), 4);
  for (int n = 0; n <= 3; ++n) {
    for (const SimplexTerm& t : disk->simplices_at(n)) {
      for (int j = 0; j <= n; ++j) {
        const SimplexTerm u = disk->degenerate(t, j);
        REQUIRE(u.dim() == n + 1);
        for (int i = 0; i <= n + 1; ++i) {
          const SimplexTerm got = disk->face(u, i);
          SimplexTerm expected;
          if (i == j || i == j + 1) {
            expected = t;
          } else if (i < j) {
            expected = disk->degenerate(disk->face(t, i), j - 1);
          } else {
            expected = disk->degenerate(disk->face(t, i - 1), j);
          }
          INFO("n=" << n << " j=" << j << " i=" << i);
          CHECK(got == expected);
        }
        for (int i = 0; i <= j; ++i) {
          CHECK(disk->degenerate(u, i) ==
                disk->degenerate(disk->degenerate(t, i), j + 1));
        }
      }
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          CHECK(disk->face(disk->face(t, j), i) ==
                disk->face(disk->face(t, i), j - 1));
        }
      }
    }
  }
}

TEST_CASE("structural validation rejects broken face tables") {
  // An edge whose face is the edge itself: wrong dimension.
  CHECK_THROWS_AS(SSet(1, {{"p"}, {"e"}}, {{}, {{SimplexTerm{1, 0, {}}}}}),
                  std::invalid_argument);
  const SSet bad_dim(1, {{"p"}, {"e"}},
                     {{}, {{SimplexTerm{1, 0, {}}, SimplexTerm{0, 0, {}}}}});
  CHECK_FALSE(validate_sset(bad_dim).ok);

  // A face pointing at a nonexistent base.
  const SSet bad_base(1, {{"p"}, {"e"}},
                      {{}, {{SimplexTerm{0, 3, {}}, SimplexTerm{0, 0, {}}}}});
  CHECK_FALSE(validate_sset(bad_base).ok);

  // Two squares glued into a cylinder-like fake with mismatched faces breaks
  // the d_i d_j identity.
  const auto disk = nerve_of_complex(full_triangle(), 2);
  auto faces_of = [&](int dim, int index) {
    std::vector<SimplexTerm> out;
    for (int i = 0; i <= dim; ++i) {
      out.push_back(disk->face_of(dim, index, i));
    }
    return out;
  };
  std::vector<SimplexTerm> triangle_faces = faces_of(2, 0);
  std::swap(triangle_faces[0], triangle_faces[2]);
  const SSet scrambled(
      2, {{"v0", "v1", "v2"}, {"e01", "e02", "e12"}, {"t"}},
      {{}, {faces_of(1, 0), faces_of(1, 1), faces_of(1, 2)}, {triangle_faces}});
  CHECK_FALSE(validate_sset(scrambled).ok);
}

TEST_CASE("normalized and unnormalized cochains have the same cohomology") {
  const auto circle = nerve_of_complex(triangle_boundary(), 3);
  const auto sphere = nerve_of_complex(tetra_boundary(), 3);
  const auto disk = nerve_of_complex(full_triangle(), 3);
  for (const auto& space : {circle, sphere, disk}) {
    const auto normalized = normalized_cochain_complex(*space, 3);
    const auto unnormalized = unnormalized_cochain_complex(*space, 3);
    REQUIRE(validate_complex(normalized).ok);
    REQUIRE(validate_complex(unnormalized).ok);
    CHECK(cohomology_dims(normalized, 0, 2) == cohomology_dims(unnormalized, 0, 2));
  }
  const auto h = cohomology_dims(normalized_cochain_complex(*circle, 3), 0, 2);
  CHECK(h == std::vector<int>{1, 1, 0});
  const auto hs = cohomology_dims(normalized_cochain_complex(*sphere, 3), 0, 2);
  CHECK(hs == std::vector<int>{1, 0, 1});
}

TEST_CASE("unnormalized point cochains alternate between zero and identity") {
  const auto point = nerve_of_complex(SComplex({"p"}, {{"p"}}), 4);
  const auto c = unnormalized_cochain_complex(*point, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(c.dim(n) == 1);
  }
  CHECK(c.diff(0).is_zero());
  CHECK(c.diff(1) == descent::QMatrix::identity(1));
  CHECK(c.diff(2).is_zero());
  CHECK(c.diff(3) == descent::QMatrix::identity(1));
  CHECK(cohomology_dims(c, 0, 3) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("induced maps validate and pull cochains back") {
  // Identity pullback is the identity matrix in both models.
  const SComplex circle = triangle_boundary();
  std::vector<int> self = {0, 1, 2};
  const SSetMap id_map = induced_sset_map(VertexMap{circle, circle, self}, 2);
  CHECK(validate_sset_map(id_map).ok);
  for (int n = 0; n <= 2; ++n) {
    const auto m = pullback_matrix(id_map, n, CochainModel::normalized);
    CHECK(m == descent::QMatrix::identity(m.rows()));
  }
  CHECK(validate_morphism(pullback_cochain_map(id_map, 2, CochainModel::normalized)).ok);
  CHECK(validate_morphism(pullback_cochain_map(id_map, 2, CochainModel::unnormalized)).ok);

  // Collapsing the triangle to a point: pullbacks still form a morphism.
  const SComplex point({"p"}, {{"p"}});
  const SSetMap collapse =
      induced_sset_map(VertexMap{full_triangle(), point, {0, 0, 0}}, 3);
  CHECK(validate_sset_map(collapse).ok);
  CHECK(validate_morphism(pullback_cochain_map(collapse, 3, CochainModel::normalized)).ok);
  CHECK(validate_morphism(pullback_cochain_map(collapse, 3, CochainModel::unnormalized)).ok);
  CHECK(check_levelwise_surjective(collapse, 3));

  // An edge included into the circle misses simplices at every level.
  const SComplex edge({"a", "b"}, {{"a", "b"}});
  const SSetMap include = induced_sset_map(VertexMap{edge, circle, {0, 1}}, 2);
  CHECK(validate_sset_map(include).ok);
  CHECK_FALSE(check_levelwise_surjective(include, 2));
}

TEST_CASE("invalid vertex maps are rejected with the offending simplex") {
  const SComplex edge({"a", "b"}, {{"a", "b"}});
  const SComplex two_edges({"t0", "t1", "t2", "t3"}, {{"t0", "t1"}, {"t2", "t3"}});

  // Image of the edge is not a simplex of the target.
  try {
    induced_sset_map(VertexMap{edge, two_edges, {1, 2}}, 1);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("{a,b}") != std::string::npos);
  }

  // Reversing an edge violates monotonicity.
  const SComplex pair({"t0", "t1"}, {{"t0", "t1"}});
  try {
    induced_sset_map(VertexMap{edge, pair, {1, 0}}, 1);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    const std::string message = e.what();
    CHECK(message.find("monotone") != std::string::npos);
    CHECK(message.find("subdivision") != std::string::npos);
  }
}
