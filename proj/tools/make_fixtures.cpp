// Regenerates tests/fixtures/golden.json.  Every number here is produced by
// the independent oracle path (dense T-basis products, Robinson-Schensted)
// with no use of the optimized engine, so the fixtures can arbitrate
// engine bugs.

#include "coxcell/oracle.hpp"
#include "coxcell/report.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <vector>

using namespace coxcell;

namespace {

// a(z) = max degree of the oracle h_{x,y,z} over all pairs.
long long oracle_a(const CoxeterSystem& W, const TBasisOracle& O, int z) {
  long long a = 0;
  for (int x = 0; x < W.size; ++x)
    for (int y = 0; y < W.size; ++y) {
      Laurent h = O.h(x, y, z);
      if (!h.is_zero() && *h.degree() > a) a = *h.degree();
    }
  return a;
}

long long oracle_gamma(const CoxeterSystem& W, const TBasisOracle& O, long long a, int x, int y,
                       int z) {
  return (long long)O.h(x, y, z).coefficient((int)-a);
}

json a2_middle_cell() {
  CoxeterSystem W = parse_type("A2");
  TBasisOracle O(W);
  RSPartition rs = type_a_cell_oracle(W);

  // The middle cell is the shape class of size 4.
  std::vector<int> cell;
  for (const auto& c : rs.two_sided_cells)
    if (c.size() == 4) cell = c;

  long long a = oracle_a(W, O, cell[0]);
  for (int z : cell)
    if (oracle_a(W, O, z) != a) throw CoxcellError("fixture: a not constant on A2 middle cell");

  // gamma table over the cell.
  std::map<std::tuple<int, int, int>, long long> gam;
  for (int x : cell)
    for (int y : cell)
      for (int z : cell) gam[{x, y, z}] = oracle_gamma(W, O, a, x, y, z);

  // Distinguished involutions: v^-a appears in the oracle p_{1,d}.
  std::vector<int> dist;
  for (int d : cell) {
    const Coeffs& c = O.c_expansion(d);
    if (c.count(0) && c.at(0).coefficient((int)-a) != 0) dist.push_back(d);
  }

  // c0 = {z : z ~L z^-1}, left cells from the RS oracle.
  auto left_cell_index = [&](int w) {
    for (size_t i = 0; i < rs.left_cells.size(); ++i)
      for (int u : rs.left_cells[i])
        if (u == w) return (int)i;
    throw CoxcellError("fixture: element missing from RS left cells");
  };
  std::vector<int> c0;
  for (int z : cell)
    if (left_cell_index(z) == left_cell_index(W.inverse[z])) c0.push_back(z);

  auto tau = [&](int z) {
    for (int d : dist)
      if (d == z) return 1LL;
    return 0LL;
  };
  // dim_hom(z, u) = sum_y tau(t_{y^-1} t_z t_y t_{u^-1}) from the gamma table.
  auto dim_hom = [&](int z, int u) {
    long long total = 0;
    for (int y : cell)
      for (int p : cell)
        for (int q : cell)
          for (int r : cell)
            total += gam[{W.inverse[y], z, p}] * gam[{p, y, q}] * gam[{q, W.inverse[u], r}] * tau(r);
    return total;
  };
  // psi_x(z): coefficient of t_z in sum_y t_y t_x t_{y^-1}.
  auto psi_x = [&](int x, int z) {
    long long total = 0;
    for (int y : cell)
      for (int p : cell) total += gam[{y, x, p}] * gam[{p, W.inverse[y], z}];
    return total;
  };
  // t_x o t_u = sum_y t_x t_y t_u t_{y^-1}.
  auto circle = [&](int x, int u, int z) {
    long long total = 0;
    for (int y : cell)
      for (int p : cell)
        for (int q : cell) total += gam[{x, y, p}] * gam[{p, u, q}] * gam[{q, W.inverse[y], z}];
    return total;
  };

  json fx;
  fx["a"] = a;
  json dj = json::array(), c0j = json::array(), mem = json::array();
  for (int w : cell) mem.push_back(W.word_str(w));
  for (int d : dist) dj.push_back(W.word_str(d));
  for (int z : c0) c0j.push_back(W.word_str(z));
  fx["members"] = mem;
  fx["distinguished"] = dj;
  fx["c0"] = c0j;

  json gj = json::array();
  for (int x : cell)
    for (int y : cell)
      for (int z : cell)
        gj.push_back(json::array({W.word_str(x), W.word_str(y), W.word_str(z), gam[{x, y, z}]}));
  fx["gamma"] = gj;

  json dh = json::array();
  for (int z : cell) {
    json row = json::array();
    for (int u : cell) row.push_back(dim_hom(z, u));
    dh.push_back(row);
  }
  fx["dim_hom"] = dh;

  int s1 = *W.parse_word("1");
  json ps = json::object();
  for (int z : cell)
    if (long long n = psi_x(s1, z)) ps[W.word_str(z)] = n;
  fx["psi_s1"] = ps;

  json ci = json::object();
  for (int z : cell)
    if (long long n = circle(s1, s1, z)) ci[W.word_str(z)] = n;
  fx["circle_s1_s1"] = ci;
  return fx;
}

json a1_fixture() {
  CoxeterSystem W = parse_type("A1");
  TBasisOracle O(W);
  long long a = oracle_a(W, O, 1);
  long long g = oracle_gamma(W, O, a, 1, 1, 1);
  json fx;
  fx["a"] = a;
  fx["gamma_sss"] = g;
  fx["psi_s_s"] = g * g;        // single-element cell: sum_y gam(y,s,p)gam(p,y^-1,s)
  fx["dim_hom_ss"] = g * g * g; // likewise, with tau(t_s) = 1
  fx["h_sss"] = laurent_json(O.h(1, 1, 1));
  return fx;
}

json wmax_fixture(const std::string& type) {
  CoxeterSystem W = parse_type(type);
  TBasisOracle O(W);
  int w0 = W.w_max;
  Laurent h = O.h(w0, w0, w0);
  json fx;
  fx["nu"] = W.nu;
  fx["a_wmax"] = *h.degree();
  fx["gamma_wmax"] = h.coefficient(-(int)W.nu).convert_to<long long>();
  return fx;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "tests/fixtures/golden.json";
  json fx;
  fx["a1"] = a1_fixture();
  fx["a2_middle_cell"] = a2_middle_cell();
  json wm = json::object();
  for (std::string t : {"A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3"}) {
    std::cerr << "w_max fixture for " << t << "\n";
    wm[t] = wmax_fixture(t);
  }
  fx["wmax_cells"] = wm;
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << fx.dump(2) << "\n";
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}
