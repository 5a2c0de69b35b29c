#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcell/cache.hpp"
#include "coxcell/report.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace coxcell;

namespace {
struct TempDir {
  std::string path;
  TempDir() {
    path = (std::filesystem::temp_directory_path() /
            ("coxcell-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter()++)))
               .string();
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};
}  // namespace

TEST_CASE("laurent json round trip") {
  Laurent p = Laurent::monomial(4, 3);
  p.add_term(-7, -2);
  p.add_term(0, BigInt("981234987123498761234987612349876"));
  json j = laurent_json(p);
  CHECK(laurent_from_json(j) == p);
  CHECK(laurent_json(Laurent()).empty());
}

TEST_CASE("cache round trip yields an identical table with zero recomputation") {
  TempDir dir;
  CoxeterSystem W = parse_type("B2");
  HeckeAlgebra H(W);
  H.build();
  cache_store(dir.path, W, H);

  HeckeAlgebra H2(W);
  REQUIRE(cache_load(dir.path, W, H2));
  CHECK(H2.kl_computed() == 0);
  for (int w = 0; w < W.size; ++w) {
    CHECK(H2.c_basis(w) == H.c_basis(w));
    CHECK(H2.mu_list(w) == H.mu_list(w));
  }
}

TEST_CASE("corrupt cache files are rejected, never partially trusted") {
  TempDir dir;
  CoxeterSystem W = parse_type("A2");
  HeckeAlgebra H(W);
  H.build();
  cache_store(dir.path, W, H);
  std::string path = cache_path(dir.path, W);

  auto slurp = [&]() {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto spit = [&](const std::string& s) {
    std::ofstream out(path, std::ios::trunc);
    out << s;
  };
  std::string good = slurp();

  SUBCASE("flipped checksum") {
    std::string bad = good;
    size_t pos = bad.find("\"checksum\":\"");
    REQUIRE(pos != std::string::npos);
    bad[pos + 12] = bad[pos + 12] == 'a' ? 'b' : 'a';
    spit(bad);
    HeckeAlgebra H2(W);
    CHECK(!cache_load(dir.path, W, H2));
  }
  SUBCASE("truncated file") {
    spit(good.substr(0, good.size() / 2));
    HeckeAlgebra H2(W);
    CHECK(!cache_load(dir.path, W, H2));
  }
  SUBCASE("type mismatch") {
    // A B2 table stored under the A2 cache name must be refused.
    CoxeterSystem WB = parse_type("B2");
    HeckeAlgebra HB(WB);
    HB.build();
    cache_store(dir.path, WB, HB);
    std::filesystem::copy_file(cache_path(dir.path, WB), path,
                               std::filesystem::copy_options::overwrite_existing);
    HeckeAlgebra H2(W);
    CHECK(!cache_load(dir.path, W, H2));
  }
  SUBCASE("missing file is quiet") {
    std::filesystem::remove(path);
    HeckeAlgebra H2(W);
    CHECK(!cache_load(dir.path, W, H2));
  }
}

TEST_CASE("build_with_cache is warm on the second call") {
  TempDir dir;
  CoxeterSystem W = parse_type("A2");
  HeckeAlgebra H1(W);
  build_with_cache(dir.path, W, H1);
  CHECK(H1.kl_computed() == (size_t)W.size - 1);
  HeckeAlgebra H2(W);
  build_with_cache(dir.path, W, H2);
  CHECK(H2.kl_computed() == 0);
  for (int w = 0; w < W.size; ++w) CHECK(H2.c_basis(w) == H1.c_basis(w));
}

TEST_CASE("reports are deterministic") {
  CoxeterSystem W = parse_type("A2");
  HeckeAlgebra H(W);
  H.build();
  CellDecomposition cd = compute_cells(W, H);
  GammaTable g(W, H, cd);
  json r1 = cells_report(W, H, cd, g);

  CoxeterSystem W2 = parse_type("A2");
  HeckeAlgebra H2(W2);
  H2.build();
  CellDecomposition cd2 = compute_cells(W2, H2);
  GammaTable g2(W2, H2, cd2);
  json r2 = cells_report(W2, H2, cd2, g2);

  for (const std::string fmt : {"json", "csv", "text"})
    CHECK(render_report(r1, fmt) == render_report(r2, fmt));
}

TEST_CASE("render formats") {
  json rep;
  rep["name"] = "demo";
  rep["poly"] = laurent_json(Laurent::v() + Laurent::monomial(-1));
  rep["list"] = json::array({1, 2, 3});

  std::string csv = render_report(rep, "csv");
  CHECK(csv.find("name,demo") != std::string::npos);
  CHECK(csv.find("poly,v + v^-1") != std::string::npos);
  CHECK(csv.find("list,1,2,3") != std::string::npos);

  std::string text = render_report(rep, "text");
  CHECK(text.find("v + v^-1") != std::string::npos);

  std::string js = render_report(rep, "json");
  CHECK(json::parse(js) == rep);

  CHECK_THROWS_AS((void)render_report(rep, "yaml"), CoxcellError);
}
