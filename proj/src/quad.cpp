#include "descent/quad.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace descent {

void QuadraticPoly::add_term(std::vector<std::string> variables,
                             const Rational& coefficient) {
  if (variables.size() > 2) {
    throw std::invalid_argument("monomial of degree " +
                                std::to_string(variables.size()) +
                                " exceeds degree 2");
  }
  for (const std::string& v : variables) {
    if (v.empty()) {
      throw std::invalid_argument("empty variable name in monomial");
    }
  }
  std::sort(variables.begin(), variables.end());
  auto it = terms_.find(variables);
  if (it == terms_.end()) {
    if (coefficient != 0) {
      terms_.emplace(std::move(variables), coefficient);
    }
    return;
  }
  it->second += coefficient;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

QuadraticPoly QuadraticPoly::rename_variables(
    const std::map<std::string, std::string>& renaming) const {
  QuadraticPoly out;
  for (const auto& [vars, coeff] : terms_) {
    std::vector<std::string> renamed;
    renamed.reserve(vars.size());
    for (const std::string& v : vars) {
      auto it = renaming.find(v);
      renamed.push_back(it == renaming.end() ? v : it->second);
    }
    out.add_term(std::move(renamed), coeff);
  }
  return out;
}

std::string QuadraticPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [vars, coeff] : terms_) {
    if (!first) {
      out << (coeff > 0 ? " + " : " - ");
    } else if (coeff < 0) {
      out << "-";
    }
    first = false;
    const Rational mag = coeff > 0 ? coeff : Rational(-coeff);
    if (mag != 1 || vars.empty()) {
      out << mag;
      if (!vars.empty()) {
        out << "*";
      }
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0) {
        out << "*";
      }
      out << vars[i];
    }
  }
  return out.str();
}

std::string x_var(int i) { return "X" + std::to_string(i); }
std::string y_var(int j) { return "Y" + std::to_string(j); }
std::string block_var(int i, int j) {
  return "X" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

int indexed_name(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix || name[1] == '0') {
    return 0;
  }
  int value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      return 0;
    }
    value = value * 10 + (name[i] - '0');
  }
  return value;
}

}  // namespace

int x_index(const std::string& name) { return indexed_name(name, 'X'); }
int y_index(const std::string& name) { return indexed_name(name, 'Y'); }

std::string find_unknown_variable(const QuadraticPoly& p, int k, int m) {
  for (const auto& [vars, coeff] : p.terms()) {
    for (const std::string& v : vars) {
      const int xi = x_index(v);
      if (xi >= 1 && xi <= k) {
        continue;
      }
      const int yj = y_index(v);
      if (yj >= 1 && yj <= m) {
        continue;
      }
      return v;
    }
  }
  return "";
}

QuadraticPoly substitute_block(const QuadraticPoly& p, int j, int k, int m, int q) {
  if (j < 0 || j > q + 1) {
    throw std::out_of_range("block copy index " + std::to_string(j) +
                            " outside 0.." + std::to_string(q + 1));
  }
  const std::string unknown = find_unknown_variable(p, k, m);
  if (!unknown.empty()) {
    throw std::invalid_argument("unknown variable " + unknown);
  }
  std::map<std::string, std::string> renaming;
  for (int i = 1; i <= k; ++i) {
    renaming[x_var(i)] = block_var(i, j);
  }
  return p.rename_variables(renaming);
}

std::vector<int> FiberedSystem::index_set(int j) const {
  if (j < 0 || j > q + 1) {
    throw std::out_of_range("index set L_" + std::to_string(j) +
                            " outside 0.." + std::to_string(q + 1));
  }
  std::vector<int> out((j + 1) * l);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<int>(i) + 1;
  }
  return out;
}

std::vector<std::pair<int, int>> FiberedSystem::system(int p) const {
  if (p < 0 || p > q + 1) {
    throw std::out_of_range("system S_" + std::to_string(p) + " outside 0.." +
                            std::to_string(q + 1));
  }
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(l) * (p + 1));
  for (int j = 0; j <= p; ++j) {
    for (int i = 1; i <= l; ++i) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

bool FiberedSystem::operator==(const FiberedSystem& other) const {
  return k == other.k && m == other.m && l == other.l && q == other.q &&
         variables == other.variables && blocks == other.blocks;
}

FiberedSystem generate_fibered_systems(const std::vector<QuadraticPoly>& polys,
                                       int k, int m, int q) {
  if (k < 0 || m < 0 || q < 0) {
    throw std::invalid_argument("variable and degree counts must be nonnegative");
  }
  for (const QuadraticPoly& p : polys) {
    const std::string unknown = find_unknown_variable(p, k, m);
    if (!unknown.empty()) {
      throw std::invalid_argument("unknown variable " + unknown + " in " +
                                  p.to_string());
    }
  }
  FiberedSystem fs;
  fs.k = k;
  fs.m = m;
  fs.l = static_cast<int>(polys.size());
  fs.q = q;
  for (int j = 0; j <= q + 1; ++j) {
    for (int i = 1; i <= k; ++i) {
      fs.variables.push_back(block_var(i, j));
    }
  }
  for (int j = 1; j <= m; ++j) {
    fs.variables.push_back(y_var(j));
  }
  fs.blocks.resize(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    fs.blocks[i].reserve(q + 2);
    for (int j = 0; j <= q + 1; ++j) {
      fs.blocks[i].push_back(substitute_block(polys[i], j, k, m, q));
    }
  }
  return fs;
}

FiberedSystem generate_fibered_systems(const std::vector<QuadraticPoly>& polys,
                                       int q) {
  int k = 0;
  int m = 0;
  for (const QuadraticPoly& p : polys) {
    for (const auto& [vars, coeff] : p.terms()) {
      for (const std::string& v : vars) {
        const int xi = x_index(v);
        const int yj = y_index(v);
        if (xi == 0 && yj == 0) {
          throw std::invalid_argument("unknown variable " + v + " in " +
                                      p.to_string());
        }
        k = std::max(k, xi);
        m = std::max(m, yj);
      }
    }
  }
  return generate_fibered_systems(polys, k, m, q);
}

std::map<std::string, std::string> coordinate_swap(int p, int j, int k, int m, int q) {
  if (k < 0 || m < 0 || q < 0 || j < 0 || j > p || p > q + 1) {
    throw std::out_of_range("coordinate swap requires 0 <= j <= p <= q+1");
  }
  std::map<std::string, std::string> swap;
  if (j == p) {
    return swap;
  }
  for (int i = 1; i <= k; ++i) {
    swap[block_var(i, j)] = block_var(i, p);
    swap[block_var(i, p)] = block_var(i, j);
  }
  return swap;
}

}  // namespace descent
