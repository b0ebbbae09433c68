#pragma once

#include <map>
#include <string>
#include <vector>

#include "descent/rational.hpp"

namespace descent {

// Polynomial of total degree at most 2 with rational coefficients. Monomials
// are keyed by their sorted variable lists (size 0, 1, or 2); zero
// coefficients are never stored.
class QuadraticPoly {
 public:
  QuadraticPoly() = default;

  // Adds coefficient * (product of variables). Throws std::invalid_argument
  // when more than two variables are given.
  void add_term(std::vector<std::string> variables, const Rational& coefficient);
  const std::map<std::vector<std::string>, Rational>& terms() const { return terms_; }

  // Renames variables by the given map; names absent from the map are kept.
  QuadraticPoly rename_variables(
      const std::map<std::string, std::string>& renaming) const;

  bool operator==(const QuadraticPoly& other) const { return terms_ == other.terms_; }
  std::string to_string() const;

 private:
  std::map<std::vector<std::string>, Rational> terms_;
};

// Variable universe X1..Xk, Y1..Ym; block copies of Xi are named Xi_j.
std::string x_var(int i);
std::string y_var(int j);
std::string block_var(int i, int j);

// Returns i >= 1 when name is Xi or Yj respectively, 0 otherwise.
int x_index(const std::string& name);
int y_index(const std::string& name);

// Returns the first variable of p outside X1..Xk, Y1..Ym, or "" if none.
std::string find_unknown_variable(const QuadraticPoly& p, int k, int m);

// Xi -> Xi_j for every i; Y variables unchanged. Requires 0 <= j <= q+1 and
// p over the declared universe.
QuadraticPoly substitute_block(const QuadraticPoly& p, int j, int k, int m, int q);

// The block grid P_{i,j}, the nested systems S_p, and the index sets L_j.
struct FiberedSystem {
  int k = 0;
  int m = 0;
  int l = 0;
  int q = 0;
  std::vector<std::string> variables;              // X blocks by copy, then Y
  std::vector<std::vector<QuadraticPoly>> blocks;  // blocks[i-1][j] = P_{i,j}

  std::vector<int> index_set(int j) const;  // L_j = {1, ..., (j+1)l}
  int system_size(int p) const { return l * (p + 1); }
  // Members of S_p as (i, j) block coordinates, copy-major.
  std::vector<std::pair<int, int>> system(int p) const;

  bool operator==(const FiberedSystem& other) const;
};

// Builds the grid over copies j = 0..q+1. The two-argument form takes the
// variable universe to be exactly the X and Y indices that occur in polys.
FiberedSystem generate_fibered_systems(const std::vector<QuadraticPoly>& polys,
                                       int k, int m, int q);
FiberedSystem generate_fibered_systems(const std::vector<QuadraticPoly>& polys,
                                       int q);

// Renaming that exchanges the X blocks with copy indices j and p and fixes
// every other variable, Y included. Requires 0 <= j <= p <= q+1. Applying it
// twice gives the identity.
std::map<std::string, std::string> coordinate_swap(int p, int j, int k, int m, int q);

// Deterministic serialization of a FiberedSystem and its inverse.
// emit_system(parse_system(doc)) == doc for documents produced by emit_system.
std::string emit_system(const FiberedSystem& fs);
FiberedSystem parse_system(const std::string& document);

}  // namespace descent
