#include "coxcell/jring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <vector>

namespace coxcell {

using Rational = boost::multiprecision::cpp_rational;

long long JRing::tau(const JElement& xi) const {
  long long r = 0;
  for (const auto& [z, c] : xi.terms) {
    int cell = cells_.cell_of[z];
    if (std::binary_search(cells_.distinguished[cell].begin(), cells_.distinguished[cell].end(), z))
      r += c;
  }
  return r;
}

AJElement JRing::psi(const HeckeElement& h_c) const {
  if (h_c.basis != Basis::C) throw CoxcellError("psi expects a c-basis element");
  AJElement out;
  for (const auto& [w, coeff] : h_c.terms) {
    auto ftab_ready = [&](int d) { return H_.h_row(w, d); };
    for (const auto& ds : cells_.distinguished) {
      for (int d : ds) {
        Coeffs row = ftab_ready(d);
        for (const auto& [z, h] : row) {
          if (g_.a(z) != g_.a(d)) continue;
          Laurent term;
          term.add_mul(coeff, h);
          out.add_term(z, term);
        }
      }
    }
  }
  return out;
}

long long JRing::center_dimension(int cell) const {
  const auto& members = cells_.cells[cell];
  const int n = (int)members.size();
  std::vector<int> local(W_.size, -1);
  for (int i = 0; i < n; ++i) local[members[i]] = i;

  // Unknowns c_i; equations sum_i c_i (gamma_{x_i, y, w} - gamma_{y, x_i, w}) = 0.
  std::vector<std::vector<Rational>> rows;
  for (int yi = 0; yi < n; ++yi) {
    for (int wi = 0; wi < n; ++wi) {
      std::vector<Rational> eq(n, 0);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        long long c = g_.gamma(members[i], members[yi], members[wi]) -
                      g_.gamma(members[yi], members[i], members[wi]);
        if (c != 0) {
          eq[i] = c;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(eq));
    }
  }

  int rank = 0;
  for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rational lead = rows[rank][col];
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / lead;
      for (int cc = col; cc < n; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return n - rank;
}

}  // namespace coxcell
