#pragma once

#include "coxcell/jring.hpp"

namespace coxcell {

/// Truncated-convolution multiplicities for a fixed two-sided cell:
/// the psi_x decomposition, the Hom-dimension formula, r-fold
/// multiplicities, and the ring (J_0^c, o).  Arguments outside the
/// mandated subsets are errors, not silent zeros.
class TruncContext {
public:
  TruncContext(const JRing& J, int cell)
      : J_(J), cell_(cell), a_(J.cells().a_value.at(cell)) {}

  int cell() const { return cell_; }
  long long a() const { return a_; }
  const std::vector<int>& members() const { return J_.cells().cells[cell_]; }
  const std::vector<int>& distinguished() const { return J_.cells().distinguished[cell_]; }
  const std::vector<int>& c0() const { return J_.cells().c0[cell_]; }

  bool in_cell(int w) const { return J_.cells().cell_of[w] == cell_; }
  bool in_c0(int w) const;

  /// Coefficients of sum_{y in c} t_y t_x t_{y^-1} = sum psi_x(z) t_z.
  std::map<int, long long> psi_x(int x) const;

  /// sum_{y in c} tau(t_{y^-1} t_z t_y t_{u^-1}).
  long long dim_hom(int z, int u) const;

  /// Coefficient of t_w in t_{w_1} ... t_{w_r}; equals the Hecke-side
  /// N(w, -(r-1)a).
  long long conv_multiplicity(const std::vector<int>& ws, int w) const;

  /// xi o xi' = sum_{y in c} xi t_y xi' t_{y^-1}; closed on J_0^c.
  JElement circle(const JElement& xi, const JElement& xi2) const;

  /// Coefficients of sum_{y in c} t_u t_y t_z t_{y^-1}; support inside c0.
  std::map<int, long long> conv_ring_decomposition(int z, int u) const;

  const JRing& jring() const { return J_; }

private:
  const JRing& J_;
  int cell_;
  long long a_;

  void require_cell(int w, const char* what) const;
  void require_c0(int w, const char* what) const;
};

}  // namespace coxcell
