#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "descent/io.hpp"
#include "descent/provider.hpp"

namespace {

using descent::CochainComplex;
using descent::ProviderBundle;
using descent::ProviderComplex;
using descent::ProviderMorphism;
using descent::QMatrix;

// Bundle of one-dimensional degree-0 columns whose slot maps are all the
// identity: the pattern of a cover of a point. Assembles to (1, 0, ..., 0)
// because the alternating sums vanish out of even columns and are the
// identity out of odd ones.
ProviderBundle point_pattern_bundle(int q) {
  ProviderBundle bundle;
  bundle.q = q;
  bundle.l = 1;
  for (int i = 0; i <= q + 1; ++i) {
    ProviderComplex pc;
    for (int v = 1; v <= i + 1; ++v) pc.index_set.push_back(v);
    pc.complex = CochainComplex(0, {1}, {});
    bundle.complexes.push_back(std::move(pc));
  }
  for (int i = 0; i <= q; ++i) {
    for (int h = 0; h <= i + 1; ++h) {
      ProviderMorphism pm;
      for (int v = 1; v <= i + 1; ++v) pm.from.push_back(v);
      for (int v = 1; v <= i + 2; ++v) pm.to.push_back(v);
      pm.slot = h;
      pm.lo = 0;
      pm.matrices = {QMatrix::identity(1)};
      bundle.morphisms.push_back(std::move(pm));
    }
  }
  return bundle;
}

}  // namespace

TEST_CASE("the mock bundle reproduces the grid answer") {
  for (const auto& entry : canonical::suite()) {
    INFO(entry.name);
    const ProviderBundle bundle = mock_bundle_from_problem(entry.prob);
    CHECK(bundle.q == entry.prob.q);
    CHECK(bundle.l == 1);
    REQUIRE(bundle.complexes.size() ==
            static_cast<std::size_t>(entry.prob.q) + 2);
    for (int i = 0; i <= entry.prob.q + 1; ++i) {
      const auto& indices = bundle.complexes[static_cast<std::size_t>(i)].index_set;
      REQUIRE(indices.size() == static_cast<std::size_t>(i) + 1);
      CHECK(indices.front() == 1);
      CHECK(indices.back() == i + 1);
    }
    const auto betti = assemble_from_provider(bundle, entry.prob.q);
    CHECK(betti.values == entry.betti);
  }
}

TEST_CASE("a bundle of empty columns assembles to zero") {
  ProviderBundle bundle = point_pattern_bundle(1);
  for (auto& pc : bundle.complexes) pc.complex = CochainComplex::zero_complex();
  for (auto& pm : bundle.morphisms) pm.matrices.clear();
  const auto betti = assemble_from_provider(bundle, 1);
  CHECK(betti.values == std::vector<int>{0, 0});
}

TEST_CASE("the point pattern assembles to the cohomology of a point") {
  for (int q = 0; q <= 2; ++q) {
    std::vector<int> expected(static_cast<std::size_t>(q) + 1, 0);
    expected[0] = 1;
    CHECK(assemble_from_provider(point_pattern_bundle(q), q).values == expected);
  }
}

TEST_CASE("missing or damaged pieces are named") {
  const auto prob = canonical::two_arc();

  {
    ProviderBundle bundle = mock_bundle_from_problem(prob);
    bundle.complexes.erase(bundle.complexes.begin() + 1);
    try {
      assemble_from_provider(bundle, prob.q);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("L_1") != std::string::npos);
    }
  }
  {
    // An index set that is not 1..(i+1) does not count as column i.
    ProviderBundle bundle = mock_bundle_from_problem(prob);
    bundle.complexes[1].index_set = {1, 3};
    try {
      assemble_from_provider(bundle, prob.q);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      const std::string message = e.what();
      CHECK(message.find("missing the complex") != std::string::npos);
      CHECK(message.find("L_1") != std::string::npos);
    }
  }
  {
    ProviderBundle bundle = mock_bundle_from_problem(prob);
    auto is_slot1 = [](const ProviderMorphism& pm) {
      return pm.slot == 1 && pm.from.size() == 1;
    };
    bundle.morphisms.erase(
        std::find_if(bundle.morphisms.begin(), bundle.morphisms.end(), is_slot1));
    try {
      assemble_from_provider(bundle, prob.q);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      const std::string message = e.what();
      CHECK(message.find("missing the morphism") != std::string::npos);
      CHECK(message.find("L_0 -> L_1") != std::string::npos);
      CHECK(message.find("slot 1") != std::string::npos);
    }
  }
  {
    // Scaling one projection map breaks its commuting square.
    ProviderBundle bundle = mock_bundle_from_problem(prob);
    for (auto& pm : bundle.morphisms) {
      if (pm.slot == 0 && pm.from.size() == 1 && !pm.matrices.empty()) {
        pm.matrices[0] = pm.matrices[0].scaled(descent::Rational(2));
        break;
      }
    }
    try {
      assemble_from_provider(bundle, prob.q);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      const std::string message = e.what();
      CHECK(message.find("L_0 -> L_1") != std::string::npos);
      CHECK(message.find("slot 0") != std::string::npos);
    }
  }
  {
    ProviderBundle bundle = point_pattern_bundle(1);
    CHECK_THROWS_AS(assemble_from_provider(bundle, -1), std::invalid_argument);
    bundle.l = 0;
    CHECK_THROWS_AS(assemble_from_provider(bundle, 1), std::invalid_argument);
  }
}

TEST_CASE("bundle documents round-trip through JSON") {
  ProviderBundle bundle = mock_bundle_from_problem(canonical::two_points());

  // A coordinate-swap morphism rides along without affecting assembly.
  ProviderMorphism swap_tagged;
  swap_tagged.from = {1, 2};
  swap_tagged.to = {1, 2};
  swap_tagged.swap = {1, 0};
  swap_tagged.lo = 0;
  swap_tagged.matrices = {QMatrix::identity(bundle.complexes[1].complex.dim(0))};
  bundle.morphisms.push_back(swap_tagged);

  const auto baseline = assemble_from_provider(bundle, bundle.q);

  const descent::Json doc = descent::bundle_to_json(bundle);
  const ProviderBundle back = descent::bundle_from_json(doc);
  CHECK(back.q == bundle.q);
  CHECK(back.l == bundle.l);
  REQUIRE(back.complexes.size() == bundle.complexes.size());
  REQUIRE(back.morphisms.size() == bundle.morphisms.size());
  CHECK(back.morphisms.back().swap == std::vector<int>{1, 0});
  CHECK(assemble_from_provider(back, bundle.q).values == baseline.values);
  CHECK(descent::bundle_to_json(back) == doc);

  descent::Json bad = doc;
  bad["morphisms"][0].erase("slot");
  try {
    descent::bundle_from_json(bad);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("slot or a swap") != std::string::npos);
  }
}
