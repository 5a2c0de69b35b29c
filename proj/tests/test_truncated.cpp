#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcell/truncated.hpp"

using namespace coxcell;

namespace {
struct Fixture {
  CoxeterSystem W;
  HeckeAlgebra H;
  CellDecomposition cd;
  GammaTable* g = nullptr;
  JRing* J = nullptr;
  explicit Fixture(const std::string& type) : W(parse_type(type)), H(W) {
    H.build();
    cd = compute_cells(W, H);
    g = new GammaTable(W, H, cd);
    J = new JRing(W, H, cd, *g);
  }
  ~Fixture() {
    delete J;
    delete g;
  }
};
}  // namespace

TEST_CASE("A2 middle cell: psi_x tables") {
  Fixture f("A2");
  TruncContext ctx(*f.J, f.cd.find_cell(1));
  int s1 = 1, s2 = 2, s12 = *f.W.parse_word("12");
  std::map<int, long long> p1 = ctx.psi_x(s1);
  CHECK(p1 == std::map<int, long long>{{s1, 1}, {s2, 1}});
  // x outside c0 decomposes with zero multiplicities everywhere.
  std::map<int, long long> p12 = ctx.psi_x(s12);
  CHECK(p12.empty());
}

TEST_CASE("A2 middle cell: dim_hom matrix is ones exactly on {s1,s2}^2") {
  Fixture f("A2");
  TruncContext ctx(*f.J, f.cd.find_cell(1));
  for (int z : ctx.members())
    for (int u : ctx.members()) {
      bool in = (z == 1 || z == 2) && (u == 1 || u == 2);
      CHECK(ctx.dim_hom(z, u) == (in ? 1 : 0));
    }
}

TEST_CASE("A2 middle cell: circle product") {
  Fixture f("A2");
  TruncContext ctx(*f.J, f.cd.find_cell(1));
  const JRing& J = *f.J;
  CHECK(ctx.circle(J.t(1), J.t(1)) == J.t(1));
  CHECK(ctx.circle(J.t(2), J.t(2)) == J.t(2));
  // Not the naive "orthogonal idempotents": the defining sum over y
  // contributes t_{s1} t_{s12} t_{s2} t_{s21} = t_{s1}.
  CHECK(ctx.circle(J.t(1), J.t(2)) == J.t(1));
  CHECK(ctx.circle(J.t(2), J.t(1)) == J.t(2));
  // Associativity on the whole c0 basis.
  for (int x : ctx.c0())
    for (int y : ctx.c0())
      for (int z : ctx.c0())
        CHECK(ctx.circle(ctx.circle(J.t(x), J.t(y)), J.t(z)) ==
              ctx.circle(J.t(x), ctx.circle(J.t(y), J.t(z))));
}

TEST_CASE("conv_multiplicity agrees with iterated J products") {
  Fixture f("B2");
  int cell = f.cd.find_cell(1);
  TruncContext ctx(*f.J, cell);
  const JRing& J = *f.J;
  const auto& mem = ctx.members();
  for (int x : mem)
    for (int y : mem) {
      JElement prod2 = J.mul(J.t(x), J.t(y));
      for (int w : mem) CHECK(ctx.conv_multiplicity({x, y}, w) == prod2.coeff(w));
      for (int z : mem) {
        JElement prod3 = J.mul(prod2, J.t(z));
        for (int w : mem) CHECK(ctx.conv_multiplicity({x, y, z}, w) == prod3.coeff(w));
      }
    }
}

TEST_CASE("conv_ring_decomposition lands in c0") {
  Fixture f("A2");
  TruncContext ctx(*f.J, f.cd.find_cell(1));
  for (int z : ctx.c0())
    for (int u : ctx.c0()) {
      std::map<int, long long> dec = ctx.conv_ring_decomposition(z, u);
      for (const auto& [w, n] : dec) {
        CHECK(ctx.in_c0(w));
        CHECK(n >= 0);
      }
    }
}

TEST_CASE("arguments outside the mandated subsets are errors") {
  Fixture f("A2");
  TruncContext ctx(*f.J, f.cd.find_cell(1));
  const JRing& J = *f.J;
  int s12 = *f.W.parse_word("12");
  CHECK_THROWS_AS((void)ctx.psi_x(0), CoxcellError);                       // e not in cell
  CHECK_THROWS_AS((void)ctx.dim_hom(0, 1), CoxcellError);                  // e not in cell
  CHECK_THROWS_AS((void)ctx.conv_multiplicity({1, 0}, 1), CoxcellError);   // e not in cell
  CHECK_THROWS_AS((void)ctx.circle(J.t(s12), J.t(1)), CoxcellError);       // s12 not in c0
  CHECK_THROWS_AS((void)ctx.conv_ring_decomposition(s12, 1), CoxcellError);
}

TEST_CASE("truncation bound on the B2 middle cell") {
  Fixture f("B2");
  int cell = f.cd.find_cell(1);
  TruncContext ctx(*f.J, cell);
  long long a = ctx.a();
  const auto& mem = ctx.members();
  for (int x : mem)
    for (int y : mem)
      for (int z : mem) {
        Coeffs phi = f.H.c_product({x, y, z});
        for (const auto& [w, p] : phi) {
          if (!ctx.in_cell(w)) continue;
          CHECK(*p.valuation() >= -2 * a);
          CHECK(p.coefficient((int)(-2 * a)) == ctx.conv_multiplicity({x, y, z}, w));
        }
      }
}
