#pragma once

#include "coxcell/cells.hpp"

#include <map>

namespace coxcell {

/// Element of the asymptotic ring J: integer combination of basis t_z.
struct JElement {
  std::map<int, long long> terms;

  void add_term(int z, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(z, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  long long coeff(int z) const {
    auto it = terms.find(z);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const JElement& o) const { return terms == o.terms; }
};

inline JElement sum_into(JElement a, const JElement& b) {
  for (const auto& [z, c] : b.terms) a.add_term(z, c);
  return a;
}

/// Element of A (x) J with Laurent coefficients.
struct AJElement {
  std::map<int, Laurent> terms;

  void add_term(int z, const Laurent& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms.emplace(z, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool operator==(const AJElement& o) const { return terms == o.terms; }
};

/// The ring J = free Z-module on {t_z} with t_x t_y = sum gamma_{x,y,z} t_z,
/// together with the trace form tau, the unit per cell, and the
/// homomorphism psi : H -> A (x) J.
class JRing {
public:
  JRing(const CoxeterSystem& W, const HeckeAlgebra& H, const CellDecomposition& cells,
        const GammaTable& gamma)
      : W_(W), H_(H), cells_(cells), g_(gamma) {}

  JElement t(int z) const {
    W_.check_id(z);
    JElement e;
    e.add_term(z, 1);
    return e;
  }

  JElement mul(const JElement& a, const JElement& b) const {
    JElement r;
    for (const auto& [x, cx] : a.terms)
      for (const auto& [y, cy] : b.terms)
        for (const auto& [z, g] : g_.product_row(x, y)) r.add_term(z, cx * cy * g);
    return r;
  }

  /// sum of t_d over the distinguished involutions of one cell.
  JElement unit(int cell) const {
    JElement e;
    for (int d : cells_.distinguished[cell]) e.add_term(d, 1);
    return e;
  }
  /// The unit of all of J.
  JElement unit_full() const {
    JElement e;
    for (const auto& ds : cells_.distinguished)
      for (int d : ds) e.add_term(d, 1);
    return e;
  }

  /// tau(t_z) = 1 iff z is distinguished.
  long long tau(const JElement& xi) const;

  /// psi(c_w) = sum over z and distinguished d with a(d) = a(z) of
  /// h_{w,d,z} t_z, extended A-linearly to c-basis elements.
  AJElement psi(const HeckeElement& h_c) const;

  AJElement aj_mul(const AJElement& a, const AJElement& b) const {
    AJElement r;
    for (const auto& [x, px] : a.terms)
      for (const auto& [y, py] : b.terms) {
        Laurent prod = px * py;
        for (const auto& [z, g] : g_.product_row(x, y))
          r.add_term(z, prod.scaled(0, g));
      }
    return r;
  }

  /// Q-dimension of the commutant {c : c t_z = t_z c for all z in the cell}
  /// of Q (x) J^cell, by exact rational elimination.
  long long center_dimension(int cell) const;

  const GammaTable& gamma() const { return g_; }
  const CellDecomposition& cells() const { return cells_; }
  const CoxeterSystem& system() const { return W_; }

private:
  const CoxeterSystem& W_;
  const HeckeAlgebra& H_;
  const CellDecomposition& cells_;
  const GammaTable& g_;
};

}  // namespace coxcell
