#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcell/jring.hpp"

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

TEST_CASE("J multiplication on the A2 middle cell is the matrix-unit product") {
  Fixture f("A2");
  const auto& W = f.W;
  const JRing& J = *f.J;
  int s1 = 1, s2 = 2, s12 = *W.parse_word("12"), s21 = *W.parse_word("21");
  CHECK(J.mul(J.t(s1), J.t(s1)) == J.t(s1));
  CHECK(J.mul(J.t(s1), J.t(s12)) == J.t(s12));
  CHECK(J.mul(J.t(s12), J.t(s21)) == J.t(s1));
  CHECK(J.mul(J.t(s21), J.t(s12)) == J.t(s2));
  CHECK(J.mul(J.t(s1), J.t(s2)).is_zero());
  CHECK(J.mul(J.t(s1), J.t(s21)).is_zero());
  // Cross-cell products vanish.
  CHECK(J.mul(J.t(0), J.t(s1)).is_zero());
  CHECK(J.mul(J.t(W.w_max), J.t(s1)).is_zero());
}

TEST_CASE("unit of J") {
  Fixture f("A3");
  const JRing& J = *f.J;
  JElement u = J.unit_full();
  for (int x = 0; x < f.W.size; ++x) {
    CHECK(J.mul(u, J.t(x)) == J.t(x));
    CHECK(J.mul(J.t(x), u) == J.t(x));
  }
  // Per-cell unit acts as identity on its own cell only.
  for (int c = 0; c < f.cd.n_cells(); ++c) {
    JElement uc = J.unit(c);
    for (int x : f.cd.cells[c]) CHECK(J.mul(uc, J.t(x)) == J.t(x));
    for (int x = 0; x < f.W.size; ++x)
      if (f.cd.cell_of[x] != c) CHECK(J.mul(uc, J.t(x)).is_zero());
  }
}

TEST_CASE("tau trace pairing") {
  Fixture f("B2");
  const JRing& J = *f.J;
  for (int c = 0; c < f.cd.n_cells(); ++c)
    for (int yp : f.cd.cells[c])
      for (int y : f.cd.cells[c]) {
        long long t = J.tau(J.mul(J.t(yp), J.t(y)));
        CHECK(t == (yp == f.W.inverse[y] ? 1 : 0));
      }
}

TEST_CASE("psi on A1: psi(c_s) = (v + v^-1) t_s") {
  Fixture f("A1");
  AJElement p = f.J->psi(HeckeElement{Basis::C, {{1, Laurent::one()}}});
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.at(1) == Laurent::v() + Laurent::monomial(-1));
}

TEST_CASE("psi(c_e) is the unit with constant coefficients") {
  Fixture f("A2");
  AJElement p = f.J->psi(HeckeElement{Basis::C, {{0, Laurent::one()}}});
  AJElement expect;
  for (const auto& ds : f.cd.distinguished)
    for (int d : ds) expect.add_term(d, Laurent::one());
  CHECK(p == expect);
}

TEST_CASE("psi is an algebra homomorphism on all of A2") {
  Fixture f("A2");
  const JRing& J = *f.J;
  auto psi_c = [&](int w) { return J.psi(HeckeElement{Basis::C, {{w, Laurent::one()}}}); };
  for (int x = 0; x < f.W.size; ++x)
    for (int y = 0; y < f.W.size; ++y) {
      AJElement lhs = J.aj_mul(psi_c(x), psi_c(y));
      AJElement rhs;
      for (const auto& [w, h] : f.H.h_row(x, y))
        for (const auto& [z, p] : psi_c(w).terms) rhs.add_term(z, h * p);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("center dimension is 1 for type A cells") {
  for (const char* type : {"A1", "A2", "A3"}) {
    CAPTURE(type);
    Fixture f(type);
    for (int c = 0; c < f.cd.n_cells(); ++c) CHECK(f.J->center_dimension(c) == 1);
  }
}
