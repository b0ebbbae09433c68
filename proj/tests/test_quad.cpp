#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/quad.hpp"

namespace {

using descent::emit_system;
using descent::FiberedSystem;
using descent::generate_fibered_systems;
using descent::parse_system;
using descent::QuadraticPoly;
using descent::Rational;
using descent::substitute_block;

QuadraticPoly sample_poly() {
  QuadraticPoly p;
  p.add_term({"X1", "X2"}, 1);
  p.add_term({"Y1"}, 1);
  p.add_term({}, Rational(-1, 3));
  return p;
}

}  // namespace

TEST_CASE("terms merge, cancel, and reject cubic monomials") {
  QuadraticPoly p;
  p.add_term({"X1", "X2"}, Rational(1, 2));
  p.add_term({"X2", "X1"}, Rational(1, 2));
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().at({"X1", "X2"}) == 1);

  p.add_term({"X1"}, 3);
  p.add_term({"X1"}, -3);
  CHECK(p.terms().count({"X1"}) == 0);

  CHECK_THROWS_AS(p.add_term({"X1", "X2", "Y1"}, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({""}, 1), std::invalid_argument);

  QuadraticPoly zero;
  zero.add_term({"Y1"}, 0);
  CHECK(zero.terms().empty());
  CHECK(zero == QuadraticPoly{});
}

TEST_CASE("polynomials print deterministically") {
  CHECK(QuadraticPoly{}.to_string() == "0");

  QuadraticPoly p;
  p.add_term({}, Rational(3, 4));
  p.add_term({"X1", "X1"}, 1);
  p.add_term({"X1", "Y1"}, -2);
  CHECK(p.to_string() == "3/4 + X1*X1 - 2*X1*Y1");

  QuadraticPoly negative;
  negative.add_term({"Y2"}, -1);
  CHECK(negative.to_string() == "-Y2");
}

TEST_CASE("variable names follow the block convention") {
  CHECK(descent::x_var(2) == "X2");
  CHECK(descent::y_var(7) == "Y7");
  CHECK(descent::block_var(3, 0) == "X3_0");
  CHECK(descent::x_index("X12") == 12);
  CHECK(descent::x_index("X0") == 0);
  CHECK(descent::x_index("X1_0") == 0);
  CHECK(descent::y_index("Y3") == 3);
  CHECK(descent::y_index("X3") == 0);
  CHECK(descent::y_index("Yonder") == 0);
}

TEST_CASE("block substitution renames the X variables only") {
  const QuadraticPoly p = sample_poly();

  const QuadraticPoly copy2 = substitute_block(p, 2, 2, 1, 1);
  QuadraticPoly expected2;
  expected2.add_term({"X1_2", "X2_2"}, 1);
  expected2.add_term({"Y1"}, 1);
  expected2.add_term({}, Rational(-1, 3));
  CHECK(copy2 == expected2);

  QuadraticPoly square;
  square.add_term({"X1", "X1"}, 1);
  QuadraticPoly square0;
  square0.add_term({"X1_0", "X1_0"}, 1);
  CHECK(substitute_block(square, 0, 1, 0, 0) == square0);
  QuadraticPoly square1;
  square1.add_term({"X1_1", "X1_1"}, 1);
  CHECK(substitute_block(square, 1, 1, 0, 0) == square1);

  CHECK_THROWS_AS(substitute_block(p, 3, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(substitute_block(p, -1, 2, 1, 1), std::out_of_range);

  QuadraticPoly stray;
  stray.add_term({"Z"}, 1);
  try {
    substitute_block(stray, 0, 2, 1, 1);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("Z") != std::string::npos);
  }
  QuadraticPoly high;
  high.add_term({"X3"}, 1);
  try {
    substitute_block(high, 0, 2, 1, 1);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("X3") != std::string::npos);
  }
}

TEST_CASE("generated grids have the documented shape") {
  struct Shape {
    int k;
    int m;
    int l;
    int q;
  };
  for (const Shape s : {Shape{2, 3, 1, 1}, Shape{1, 2, 2, 0}, Shape{3, 1, 1, 2}}) {
    INFO("k=" << s.k << " m=" << s.m << " l=" << s.l << " q=" << s.q);
    std::vector<QuadraticPoly> polys;
    for (int i = 0; i < s.l; ++i) {
      QuadraticPoly p;
      p.add_term({descent::x_var(1 + i % s.k)}, i + 1);
      if (s.m > 0) p.add_term({descent::y_var(1)}, 1);
      polys.push_back(p);
    }
    const FiberedSystem fs = generate_fibered_systems(polys, s.k, s.m, s.q);
    CHECK(fs.k == s.k);
    CHECK(fs.m == s.m);
    CHECK(fs.l == s.l);
    CHECK(fs.q == s.q);
    CHECK(fs.variables.size() ==
          static_cast<std::size_t>(s.k * (s.q + 2) + s.m));
    REQUIRE(fs.blocks.size() == static_cast<std::size_t>(s.l));
    for (std::size_t i = 0; i < fs.blocks.size(); ++i) {
      REQUIRE(fs.blocks[i].size() == static_cast<std::size_t>(s.q) + 2);
      for (int j = 0; j <= s.q + 1; ++j) {
        CHECK(fs.blocks[i][static_cast<std::size_t>(j)] ==
              substitute_block(polys[i], j, s.k, s.m, s.q));
      }
    }
    for (int p = 0; p <= s.q + 1; ++p) {
      CHECK(fs.system_size(p) == s.l * (p + 1));
      const auto members = fs.system(p);
      REQUIRE(members.size() == static_cast<std::size_t>(fs.system_size(p)));
      // Copy-major: all polynomials of copy 0 first.
      for (std::size_t idx = 0; idx < members.size(); ++idx) {
        CHECK(members[idx].first == static_cast<int>(idx) % s.l + 1);
        CHECK(members[idx].second == static_cast<int>(idx) / s.l);
      }
      const auto indices = fs.index_set(p);
      REQUIRE(indices.size() == static_cast<std::size_t>((p + 1) * s.l));
      CHECK(indices.front() == 1);
      CHECK(indices.back() == (p + 1) * s.l);
    }
    CHECK_THROWS_AS(fs.system(s.q + 2), std::out_of_range);
    CHECK_THROWS_AS(fs.index_set(-1), std::out_of_range);
  }
}

TEST_CASE("the variable universe can be inferred from the input") {
  QuadraticPoly a;
  a.add_term({"X2", "Y3"}, 1);
  QuadraticPoly b;
  b.add_term({"X1"}, Rational(5, 2));
  const FiberedSystem inferred = generate_fibered_systems({a, b}, 1);
  CHECK(inferred == generate_fibered_systems({a, b}, 2, 3, 1));

  QuadraticPoly stray;
  stray.add_term({"W1"}, 1);
  try {
    generate_fibered_systems({stray}, 1);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("W1") != std::string::npos);
  }
  CHECK_THROWS_AS(generate_fibered_systems({a}, 2, 3, -1), std::invalid_argument);
}

TEST_CASE("swapping two copies is an involution that fixes Y") {
  const auto swap = descent::coordinate_swap(2, 0, 2, 1, 1);
  CHECK(swap.size() == 4);
  CHECK(swap.at("X1_0") == "X1_2");
  CHECK(swap.at("X1_2") == "X1_0");
  CHECK(swap.at("X2_0") == "X2_2");
  CHECK(swap.at("X2_2") == "X2_0");
  CHECK(swap.count("Y1") == 0);

  const FiberedSystem fs =
      generate_fibered_systems({sample_poly()}, 2, 1, 1);
  for (int i = 0; i < fs.l; ++i) {
    const QuadraticPoly& at0 = fs.blocks[static_cast<std::size_t>(i)][0];
    const QuadraticPoly& at2 = fs.blocks[static_cast<std::size_t>(i)][2];
    CHECK(at0.rename_variables(swap) == at2);
    CHECK(at2.rename_variables(swap) == at0);
    CHECK(at0.rename_variables(swap).rename_variables(swap) == at0);
    const QuadraticPoly& middle = fs.blocks[static_cast<std::size_t>(i)][1];
    CHECK(middle.rename_variables(swap) == middle);
  }

  CHECK(descent::coordinate_swap(1, 1, 2, 1, 1).empty());
  CHECK_THROWS_AS(descent::coordinate_swap(3, 0, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(descent::coordinate_swap(1, 2, 2, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(descent::coordinate_swap(1, -1, 2, 1, 1), std::out_of_range);
}

TEST_CASE("system documents round-trip") {
  QuadraticPoly a;
  a.add_term({"X1", "X1"}, Rational(1, 2));
  a.add_term({"Y1"}, -1);
  QuadraticPoly b;
  b.add_term({"X1", "X2"}, Rational(-7, 5));
  b.add_term({}, 2);
  const FiberedSystem fs = generate_fibered_systems({a, b}, 2, 1, 1);

  const std::string doc = emit_system(fs);
  const FiberedSystem back = parse_system(doc);
  CHECK(back == fs);
  CHECK(emit_system(back) == doc);

  CHECK_THROWS_AS(parse_system("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system("{\"k\":1,\"m\":0,\"l\":1,\"q\":-2}"),
                  std::invalid_argument);
}
