#pragma once

#include "coxcell/hecke.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace coxcell {

/// Left/right/two-sided cells of W with the preorder on two-sided cells.
/// Cells are stored as sorted id-lists; two-sided cells are ordered by
/// (a-value, min id) once a-values are known, left/right cells by min id.
struct CellDecomposition {
  std::vector<int> left_cell_of, right_cell_of, cell_of;
  std::vector<std::vector<int>> left_cells, right_cells, cells;
  /// cell_leq[i][j] : cells[i] precedes-or-equals cells[j].
  std::vector<std::vector<uint8_t>> cell_leq;

  std::vector<long long> a_value;               // per two-sided cell
  std::vector<std::vector<int>> distinguished;  // D_c, sorted
  std::vector<std::vector<int>> c0;             // {z : z ~L z^-1}, sorted

  int n_cells() const { return (int)cells.size(); }

  /// Cell selector: by a-value, optionally disambiguated by a member.
  int find_cell(long long a, int containing = -1) const;
};

/// Partition W into cells from the preorder generated by c_s-multiplication
/// on either side.  a_value/distinguished/c0 are left empty; GammaTable
/// fills them.
CellDecomposition compute_cells(const CoxeterSystem& W, const HeckeAlgebra& H);

/// The a-function and the gamma constants, extracted from the full
/// (x,y)-scan of structure-constant rows.  Construction performs the
/// build-phase consistency checks and throws CoxcellError on violation.
class GammaTable {
public:
  /// cells is updated in place: a-values computed, two-sided cells
  /// reordered by (a, min id), distinguished involutions and c0 filled.
  GammaTable(const CoxeterSystem& W, const HeckeAlgebra& H, CellDecomposition& cells,
             int jobs = 1);

  long long a(int z) const { return a_elem_[z]; }
  long long a_cell(int cell) const { return a_cell_[cell]; }

  /// gamma_{x,y,z}; zero for triples not in the support.
  long long gamma(int x, int y, int z) const;
  /// The nonzero part of t_x t_y: sorted pairs (z, gamma_{x,y,z}).
  const std::vector<std::pair<int, long long>>& product_row(int x, int y) const;

  /// Degree of h_{x,y,z} when the degree cube was kept (|W| small enough);
  /// INT8_MIN encodes h = 0.
  bool has_degree_cube() const { return !deg_cube_.empty(); }
  int8_t h_degree(int x, int y, int z) const {
    return deg_cube_[((size_t)x * n_ + y) * n_ + z];
  }

  const CoxeterSystem& system() const { return W_; }

  /// Iterate the nonzero gamma support: fn(x, y, z, gamma_{x,y,z}).
  template <class F>
  void for_each_gamma(F&& fn) const {
    for (const auto& [key, row] : rows_) {
      int x = (int)(key / n_), y = (int)(key % n_);
      for (const auto& [z, g] : row) fn(x, y, z, g);
    }
  }

  /// Corrupt a single gamma entry (fault injection for the test suite).
  /// Picks an entry whose P7 cyclic image is a different triple, so the
  /// P7 property check is guaranteed to fail afterwards.
  void inject_gamma_fault();

private:
  const CoxeterSystem& W_;
  size_t n_;
  std::vector<long long> a_elem_, a_cell_;
  std::unordered_map<uint64_t, std::vector<std::pair<int, long long>>> rows_;
  std::vector<int8_t> deg_cube_;

  static const std::vector<std::pair<int, long long>> empty_row_;
};

}  // namespace coxcell
