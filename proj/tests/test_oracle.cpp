#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxcell/oracle.hpp"

#include <algorithm>
#include <random>

using namespace coxcell;

TEST_CASE("A1: oracle h_{s,s,s} = v + v^-1") {
  CoxeterSystem W = parse_type("A1");
  TBasisOracle O(W);
  CHECK(O.h(1, 1, 1) == Laurent::v() + Laurent::monomial(-1));
  CHECK(O.h(1, 1, 0).is_zero());
}

TEST_CASE("oracle c-basis and h agree with the engine on all of A2") {
  CoxeterSystem W = parse_type("A2");
  HeckeAlgebra H(W);
  H.build();
  TBasisOracle O(W);
  for (int w = 0; w < W.size; ++w) CHECK(O.c_expansion(w) == H.c_basis(w));
  for (int x = 0; x < W.size; ++x)
    for (int y = 0; y < W.size; ++y) CHECK(O.h_row(x, y) == H.h_row(x, y));
}

TEST_CASE("oracle agrees with the engine on sampled B3 triples") {
  CoxeterSystem W = parse_type("B3");
  HeckeAlgebra H(W);
  H.build();
  TBasisOracle O(W);
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 100; ++i) {
    int x = (int)(rng() % W.size), y = (int)(rng() % W.size), z = (int)(rng() % W.size);
    CHECK(O.h(x, y, z) == H.h_const(x, y, z));
  }
}

TEST_CASE("oracle t_mul satisfies the quadratic relation") {
  CoxeterSystem W = parse_type("B2");
  TBasisOracle O(W);
  for (int s = 0; s < W.rank; ++s) {
    int sid = s + 1;  // length-1 elements are ids 1..rank
    Coeffs ts{{sid, Laurent::one()}};
    Coeffs sq = O.t_mul(ts, ts);
    Coeffs expect{{0, Laurent::one()}, {sid, Laurent::v() - Laurent::monomial(-1)}};
    CHECK(sq == expect);
  }
}

TEST_CASE("oracle refuses groups above its size bound") {
  CoxeterSystem W = parse_type("D4");  // 192 elements
  CHECK_THROWS_AS((void)TBasisOracle(W), CoxcellError);
}

TEST_CASE("type A permutations compose correctly") {
  CoxeterSystem W = parse_type("A3");
  std::vector<int> idp = type_a_permutation(W, W.identity);
  CHECK(idp == std::vector<int>{0, 1, 2, 3});
  for (int w = 0; w < W.size; ++w)
    for (int u = 0; u < W.size; ++u) {
      auto pw = type_a_permutation(W, w), pu = type_a_permutation(W, u);
      auto pm = type_a_permutation(W, W.mul(w, u));
      for (size_t i = 0; i < pw.size(); ++i) CHECK(pm[i] == pw[pu[i]]);
    }
}

TEST_CASE("Robinson-Schensted oracle: cell counts") {
  CoxeterSystem W2 = parse_type("A2");
  RSPartition rs2 = type_a_cell_oracle(W2);
  std::vector<size_t> sizes;
  for (const auto& c : rs2.two_sided_cells) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 1, 4});

  CoxeterSystem W3 = parse_type("A3");
  RSPartition rs3 = type_a_cell_oracle(W3);
  CHECK(rs3.two_sided_cells.size() == 5);  // partitions of 4
  size_t total = 0;
  for (const auto& c : rs3.two_sided_cells) total += c.size();
  CHECK(total == 24);
  CHECK(rs3.left_cells.size() == 10);  // sum of standard tableau counts

  CoxeterSystem W1 = parse_type("A1");
  RSPartition rs1 = type_a_cell_oracle(W1);
  CHECK(rs1.two_sided_cells.size() == 2);
  CHECK(rs1.left_cells.size() == 2);
}

TEST_CASE("RS oracle rejects non-type-A input") {
  CoxeterSystem W = parse_type("B2");
  CHECK_THROWS_AS((void)type_a_cell_oracle(W), CoxcellError);
}
