#pragma once

#include "coxcell/hecke.hpp"

#include <vector>

namespace coxcell {

/// Independent slow path to the Hecke structure constants.  The KL basis is
/// reconstructed by solving the bar-fixedness linear system in the dense
/// T-basis (no descent recursion, no mu shortcut tables); products are
/// computed by dense T-basis multiplication and a triangular solve.
class TBasisOracle {
public:
  explicit TBasisOracle(const CoxeterSystem& W);

  const Coeffs& c_expansion(int w) const { return oc_[w]; }

  /// T-basis product of two T-basis coefficient vectors.
  Coeffs t_mul(const Coeffs& a, const Coeffs& b) const;

  /// h_{x,y,z} by dense multiplication of the oracle c_x, c_y.
  Laurent h(int x, int y, int z) const;
  /// Whole row (c-basis coordinates of c_x c_y).
  Coeffs h_row(int x, int y) const;

private:
  const CoxeterSystem& W_;
  std::vector<Coeffs> oc_;        // oracle c_w in the T-basis
  std::vector<Coeffs> bar_t_;     // bar(T_w) in the T-basis

  Coeffs t_mul_word(Coeffs a, int w) const;  // a * T_w
};

/// Robinson-Schensted oracle for irreducible type A: two-sided cells are
/// shape classes, left cells are classes of equal recording tableau.
struct RSPartition {
  std::vector<std::vector<int>> left_cells;
  std::vector<std::vector<int>> two_sided_cells;
};
RSPartition type_a_cell_oracle(const CoxeterSystem& W);

/// One-line permutation of {0..n} attached to an element of irreducible
/// type A_n; group multiplication corresponds to composition
/// perm(w*u)[i] = perm(w)[perm(u)[i]].
std::vector<int> type_a_permutation(const CoxeterSystem& W, int w);

}  // namespace coxcell
