#include <chrono>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "descent/descent.hpp"
#include "descent/double_complex.hpp"
#include "descent/io.hpp"
#include "descent/provider.hpp"
#include "descent/quad.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

using descent::Json;

class Timer {
 public:
  long long elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int resolve_q(int flag_q, int doc_q, const std::string& source) {
  if (flag_q >= 0) {
    return flag_q;
  }
  if (doc_q >= 0) {
    return doc_q;
  }
  throw std::invalid_argument(source + " carries no \"q\" and no --q was given");
}

void print_report(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json page_table(const descent::Page& page, int q) {
  Json table = Json::array();
  for (int i = 0; i <= q + 1; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= q + 1; ++j) {
      row.push_back(page.dim_at(i, j));
    }
    table.push_back(std::move(row));
  }
  return table;
}

int cmd_betti_image(const std::string& path, int flag_q, bool direct,
                    bool unnormalized, bool no_timing) {
  const Timer timer;
  descent::DescentProblem prob =
      descent::problem_from_json(descent::load_json_file(path));
  prob.q = resolve_q(flag_q, prob.q, path);

  const descent::DescentContext ctx(prob, false);
  descent::BettiVector betti;
  if (unnormalized) {
    const descent::DoubleComplex grid =
        ctx.descent_double_complex(descent::CochainModel::unnormalized);
    betti.values = descent::cohomology_dims(descent::total_complex(grid), 0, prob.q);
  } else {
    betti = ctx.betti_of_image();
  }

  Json report;
  report["command"] = "betti-image";
  report["input"] = path;
  report["q"] = prob.q;
  report["model"] = unnormalized ? "unnormalized" : "normalized";
  report["betti"] = betti.values;

  bool agree = true;
  if (direct) {
    const descent::BettiVector oracle = ctx.direct_betti();
    agree = oracle.values == betti.values;
    report["direct"] = oracle.values;
    report["agreement"] = agree;
  }
  if (!no_timing) {
    report["timing_ms"] = timer.elapsed_ms();
  }
  print_report(report);
  return agree ? kExitSuccess : kExitCheckFailure;
}

int cmd_check(const std::string& path, int flag_q, const std::string& which,
              bool with_tables, bool no_timing) {
  const Timer timer;
  descent::DescentProblem prob =
      descent::problem_from_json(descent::load_json_file(path));
  prob.q = resolve_q(flag_q, prob.q, path);

  const descent::DescentContext ctx(prob, true);
  Json report;
  report["command"] = "check";
  report["input"] = path;
  report["q"] = prob.q;
  report["which"] = which;

  bool all_pass = true;
  if (which == "exactness" || which == "all") {
    const descent::ExactnessReport rep = descent::verify_mv_exactness(ctx);
    Json section;
    section["pass"] = rep.pass;
    Json augmentation = Json::array();
    for (const bool injective : rep.augmentation_injective) {
      augmentation.push_back(injective);
    }
    section["augmentation_injective"] = std::move(augmentation);
    Json entries = Json::array();
    for (const descent::ExactnessEntry& entry : rep.entries) {
      Json row;
      row["degree"] = entry.degree;
      row["position"] = entry.position;
      row["dim_kernel"] = entry.dim_kernel;
      row["dim_image"] = entry.dim_image;
      row["composite_zero"] = entry.composite_zero;
      row["pass"] = entry.pass;
      entries.push_back(std::move(row));
    }
    section["entries"] = std::move(entries);
    report["exactness"] = std::move(section);
    all_pass = all_pass && rep.pass;
  }
  if (which == "pages" || which == "all") {
    const descent::DegenerationReport rep = descent::e2_degeneration_report(ctx);
    Json section;
    section["pass"] = rep.pass;
    section["column0"] = rep.column0;
    section["expected"] = rep.expected;
    Json violations = Json::array();
    for (const auto& [cell, dim] : rep.violations) {
      Json row;
      row["i"] = cell.first;
      row["j"] = cell.second;
      row["dim"] = dim;
      violations.push_back(std::move(row));
    }
    section["violations"] = std::move(violations);
    if (with_tables) {
      section["e1"] = page_table(rep.e1, prob.q);
      section["e2"] = page_table(rep.e2, prob.q);
    }
    report["pages"] = std::move(section);
    all_pass = all_pass && rep.pass;
  }
  if (which == "inequality" || which == "all") {
    Json section;
    Json rows = Json::array();
    bool holds_all = true;
    for (int n = 0; n <= prob.q; ++n) {
      const auto [lhs, rhs] = descent::descent_inequality(ctx, n);
      Json row;
      row["n"] = n;
      row["lhs"] = lhs;
      row["rhs"] = rhs;
      row["holds"] = lhs <= rhs;
      holds_all = holds_all && lhs <= rhs;
      rows.push_back(std::move(row));
    }
    section["pass"] = holds_all;
    section["rows"] = std::move(rows);
    report["inequality"] = std::move(section);
    all_pass = all_pass && holds_all;
  }
  report["pass"] = all_pass;
  if (!no_timing) {
    report["timing_ms"] = timer.elapsed_ms();
  }
  print_report(report);
  return all_pass ? kExitSuccess : kExitCheckFailure;
}

int cmd_scaffold(const std::string& path, int flag_q) {
  const descent::PolyDocument doc =
      descent::polys_from_json(descent::load_json_file(path));
  const int q = resolve_q(flag_q, doc.q, path);

  int k = doc.k;
  int m = doc.m;
  if (k < 0 || m < 0) {
    int seen_k = 0;
    int seen_m = 0;
    for (const descent::QuadraticPoly& p : doc.polynomials) {
      for (const auto& [vars, coeff] : p.terms()) {
        for (const std::string& v : vars) {
          seen_k = std::max(seen_k, descent::x_index(v));
          seen_m = std::max(seen_m, descent::y_index(v));
        }
      }
    }
    if (k < 0) {
      k = seen_k;
    }
    if (m < 0) {
      m = seen_m;
    }
  }

  const descent::FiberedSystem fs =
      descent::generate_fibered_systems(doc.polynomials, k, m, q);
  std::cout << descent::emit_system(fs);
  return kExitSuccess;
}

int cmd_assemble(const std::string& path, int flag_q, bool no_timing) {
  const Timer timer;
  const descent::ProviderBundle bundle =
      descent::bundle_from_json(descent::load_json_file(path));
  const int q = resolve_q(flag_q, bundle.q, path);
  const descent::BettiVector betti = descent::assemble_from_provider(bundle, q);

  Json report;
  report["command"] = "assemble";
  report["input"] = path;
  report["q"] = q;
  report["betti"] = betti.values;
  if (!no_timing) {
    report["timing_ms"] = timer.elapsed_ms();
  }
  print_report(report);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of the image of a simplicial surjection"};
  app.require_subcommand(1);

  std::string path;
  int flag_q = -1;
  bool direct = false;
  bool unnormalized = false;
  bool with_tables = false;
  bool no_timing = false;
  std::string which = "all";

  CLI::App* betti = app.add_subcommand(
      "betti-image", "Betti numbers of the image of the mapped complex");
  betti->add_option("problem", path, "problem document")->required();
  betti->add_option("--q", flag_q, "Betti range, overriding the document");
  betti->add_flag("--direct", direct,
                  "also compute from the image nerve and compare");
  betti->add_flag("--unnormalized", unnormalized, "use unnormalized cochains");
  betti->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* check = app.add_subcommand(
      "check", "run the exactness, page, and inequality verifiers");
  check->add_option("problem", path, "problem document")->required();
  check->add_option("--q", flag_q, "Betti range, overriding the document");
  check->add_option("--which", which, "verifier to run")
      ->check(CLI::IsMember({"exactness", "pages", "inequality", "all"}));
  check->add_flag("--pages", with_tables, "include full page tables");
  check->add_flag("--no-timing", no_timing, "omit the timing field");

  CLI::App* scaffold = app.add_subcommand(
      "scaffold", "expand quadratic polynomials into the fibered systems");
  scaffold->add_option("polynomials", path, "polynomial document")->required();
  scaffold->add_option("--q", flag_q, "Betti range, overriding the document");

  CLI::App* assemble = app.add_subcommand(
      "assemble", "assemble a provider bundle and report Betti numbers");
  assemble->add_option("bundle", path, "bundle document")->required();
  assemble->add_option("--q", flag_q, "Betti range, overriding the document");
  assemble->add_flag("--no-timing", no_timing, "omit the timing field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (betti->parsed()) {
      return cmd_betti_image(path, flag_q, direct, unnormalized, no_timing);
    }
    if (check->parsed()) {
      return cmd_check(path, flag_q, which, with_tables, no_timing);
    }
    if (scaffold->parsed()) {
      return cmd_scaffold(path, flag_q);
    }
    if (assemble->parsed()) {
      return cmd_assemble(path, flag_q, no_timing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
