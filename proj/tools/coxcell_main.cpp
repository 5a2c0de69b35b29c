#include "coxcell/cache.hpp"
#include "coxcell/report.hpp"
#include "coxcell/suite.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace coxcell;

namespace {

struct Built {
  CoxeterSystem W;
  HeckeAlgebra H;
  Built(const std::string& type, long long bound, const std::string& cache_dir)
      : W(parse_type(type, bound)), H(W) {
    build_with_cache(cache_dir, W, H);
  }
};

int select_cell(const CoxeterSystem& W, const CellDecomposition& cells, long long a,
                const std::string& containing) {
  int member = -1;
  if (!containing.empty()) {
    auto id = W.parse_word(containing);
    if (!id) throw CoxcellError("cannot parse element word: " + containing);
    member = *id;
  }
  return cells.find_cell(a, member);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxcell: exact Kazhdan-Lusztig cells, the asymptotic ring J, and "
               "truncated-convolution multiplicities for finite Coxeter groups"};
  app.require_subcommand(1);

  long long bound = 20000;
  std::string cache_dir, format = "json";
  uint64_t seed = SuiteOptions{}.seed;
  int jobs = 1;
  app.add_option("--bound", bound, "Maximum group order accepted by the type parser")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Directory for the persistent KL cache");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--jobs", jobs, "Worker threads for the structure-constant scan")
      ->check(CLI::PositiveNumber);

  std::string type, containing, inject_fault, truncated_op;
  long long cell_a = -1;

  auto* cmd_cells = app.add_subcommand("cells", "Cell decomposition report");
  cmd_cells->add_option("type", type, "Coxeter type, e.g. A3, B2, I2(7), H3, A2xA1")->required();

  auto* cmd_jtable = app.add_subcommand("jtable", "Gamma table of one two-sided cell");
  cmd_jtable->add_option("type", type)->required();
  cmd_jtable->add_option("--a", cell_a, "a-value of the cell")->required();
  cmd_jtable->add_option("--containing", containing, "Word of a member, to disambiguate");

  auto* cmd_trunc = app.add_subcommand("truncated", "Truncated-convolution tables for one cell");
  cmd_trunc->add_option("type", type)->required();
  cmd_trunc->add_option("op", truncated_op, "psix | dimhom | circle | convmult")
      ->required()
      ->check(CLI::IsMember({"psix", "dimhom", "circle", "convmult"}));
  cmd_trunc->add_option("--a", cell_a, "a-value of the cell")->required();
  cmd_trunc->add_option("--containing", containing, "Word of a member, to disambiguate");

  auto* cmd_verify = app.add_subcommand("verify", "Run the full property suite");
  cmd_verify->add_option("type", type)->required();
  cmd_verify->add_option("--inject-fault", inject_fault,
                         "Corrupt internal data first (test hook); target: gamma");

  auto* cmd_export = app.add_subcommand("export", "Export the KL polynomial table");
  cmd_export->add_option("type", type)->required();

  // Accept the global flags after the subcommand as well.
  for (CLI::App* sub : {cmd_cells, cmd_jtable, cmd_trunc, cmd_verify, cmd_export})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Built b(type, bound, cache_dir);

    if (cmd_export->parsed()) {
      std::cout << render_report(kl_export_report(b.W, b.H), format);
      return 0;
    }

    CellDecomposition cells = compute_cells(b.W, b.H);
    GammaTable g(b.W, b.H, cells, jobs);

    if (cmd_cells->parsed()) {
      std::cout << render_report(cells_report(b.W, b.H, cells, g), format);
      return 0;
    }
    if (cmd_jtable->parsed()) {
      int cell = select_cell(b.W, cells, cell_a, containing);
      std::cout << render_report(jtable_report(b.W, cells, g, cell), format);
      return 0;
    }
    if (cmd_trunc->parsed()) {
      int cell = select_cell(b.W, cells, cell_a, containing);
      JRing J(b.W, b.H, cells, g);
      TruncContext ctx(J, cell);
      std::cout << render_report(truncated_report(ctx, truncated_op), format);
      return 0;
    }
    if (cmd_verify->parsed()) {
      SuiteOptions opt;
      opt.seed = seed;
      opt.inject_fault = inject_fault;
      auto reports = run_property_suite(b.W, b.H, cells, g, opt);
      json rep;
      rep["group"] = b.W.type_string;
      rep["seed"] = seed;
      rep["kl_entries_computed"] = b.H.kl_computed();
      rep["checks"] = suite_report_json(reports);
      rep["status"] = all_pass(reports) ? "pass" : "fail";
      std::cout << render_report(rep, format);
      return all_pass(reports) ? 0 : 1;
    }
  } catch (const CoxcellError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
