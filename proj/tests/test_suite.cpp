#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcell/suite.hpp"

using namespace coxcell;

namespace {
struct Fixture {
  CoxeterSystem W;
  HeckeAlgebra H;
  CellDecomposition cd;
  GammaTable* g = nullptr;
  explicit Fixture(const std::string& type) : W(parse_type(type)), H(W) {
    H.build();
    cd = compute_cells(W, H);
    g = new GammaTable(W, H, cd);
  }
  ~Fixture() { delete g; }
};
}  // namespace

TEST_CASE("A2 full suite passes") {
  Fixture f("A2");
  auto reports = run_property_suite(f.W, f.H, f.cd, *f.g);
  CHECK(all_pass(reports));
  for (const auto& r : reports) {
    CHECK(r.group == "A2");
    CHECK(r.seed == SuiteOptions{}.seed);
    CHECK(r.counterexample.empty());
  }
  // Reports are merged deterministically by check name.
  for (size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].check < reports[i].check);
  // The type-A-only and small-group-only checks are present.
  auto has = [&](const std::string& name) {
    for (const auto& r : reports)
      if (r.check == name) return true;
    return false;
  };
  CHECK(has("rs-correspondence"));
  CHECK(has("center-dimension"));
  CHECK(has("oracle-h-agreement"));
  CHECK(has("p7-cyclic-symmetry"));
}

TEST_CASE("I2(7) suite passes, including the dihedral-only checks") {
  Fixture f("I2(7)");
  auto reports = run_property_suite(f.W, f.H, f.cd, *f.g);
  CHECK(all_pass(reports));
  bool dihedral = false;
  for (const auto& r : reports) dihedral |= r.check == "dihedral-structure";
  CHECK(dihedral);
}

TEST_CASE("a corrupted gamma entry makes P7 fail with a counterexample") {
  Fixture f("A2");
  SuiteOptions opt;
  opt.inject_fault = "gamma";
  auto reports = run_property_suite(f.W, f.H, f.cd, *f.g, opt);
  CHECK(!all_pass(reports));
  bool p7_failed = false;
  for (const auto& r : reports)
    if (r.check == "p7-cyclic-symmetry") {
      p7_failed = !r.pass;
      CHECK(!r.counterexample.empty());
      CHECK(r.counterexample.find("gamma(") != std::string::npos);
    }
  CHECK(p7_failed);
}

TEST_CASE("unknown fault targets are rejected") {
  Fixture f("A1");
  SuiteOptions opt;
  opt.inject_fault = "bogus";
  CHECK_THROWS_AS((void)run_property_suite(f.W, f.H, f.cd, *f.g, opt), CoxcellError);
}

TEST_CASE("suite report JSON carries group, check, status and seed") {
  Fixture f("A1");
  SuiteOptions opt;
  opt.seed = 777;
  auto reports = run_property_suite(f.W, f.H, f.cd, *f.g, opt);
  json j = suite_report_json(reports);
  REQUIRE(j.is_array());
  REQUIRE(!j.empty());
  for (const auto& one : j) {
    CHECK(one.at("group") == "A1");
    CHECK(one.at("status") == "pass");
    CHECK(one.at("seed") == 777);
    CHECK(!one.contains("counterexample"));
  }
}
