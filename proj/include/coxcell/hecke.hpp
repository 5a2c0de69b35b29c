#pragma once

#include "coxcell/coxeter.hpp"
#include "coxcell/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace coxcell {

/// Sparse coefficient vector over group elements.
using Coeffs = std::map<int, Laurent>;

enum class Basis { T, C };
enum class Side { Left, Right };

struct HeckeElement {
  Basis basis = Basis::T;
  Coeffs terms;

  void add_term(int w, const Laurent& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

/// Equal-parameter Hecke algebra over Z[v,v^-1], quadratic relation
/// (T_s - v)(T_s + v^-1) = 0, KL basis c_w = sum_y p_{y,w} T_y with
/// p_{w,w} = 1 and p_{y,w} in v^-1 Z[v^-1] for y < w.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const CoxeterSystem& W) : W_(W) {}

  const CoxeterSystem& system() const { return W_; }

  /// Compute every c_w by the descent recursion with mu-corrections.
  void build();

  /// Install a precomputed KL table (cache load).  Entries are (y, w, p);
  /// the diagonal p_{w,w} = 1 is implicit.  Derives mu-lists; leaves the
  /// computed-entries counter at zero.
  void load(const std::vector<std::tuple<int, int, Laurent>>& entries);

  bool built() const { return !cw_.empty(); }
  /// Number of c_w computed by the recursion (0 after a warm cache load).
  size_t kl_computed() const { return kl_computed_; }

  /// p_{y,w}; zero unless y <= w in Bruhat order.
  Laurent kl_p(int y, int w) const;
  /// mu(y,w) = coefficient of v^-1 in p_{y,w}.
  BigInt mu(int y, int w) const;

  /// T-basis expansion of c_w, i.e. the map y -> p_{y,w}.
  const Coeffs& c_basis(int w) const { return cw_[w]; }
  /// Pairs (z, mu(z,w)) with z < w and mu nonzero.
  const std::vector<std::pair<int, BigInt>>& mu_list(int w) const { return mu_[w]; }

  /// T_s * h or h * T_s in the T-basis.
  HeckeElement t_mul_gen(const HeckeElement& h, int s, Side side) const;
  /// The bar involution on a T-basis element.
  HeckeElement bar_t(const HeckeElement& h) const;

  /// Triangular change of basis, both directions.
  HeckeElement to_c_basis(const HeckeElement& h_t) const;
  HeckeElement to_t_basis(const HeckeElement& h_c) const;

  /// f_u = T_u * c_y in c-basis coordinates, for every u; the workhorse
  /// table behind products with a fixed right factor.
  std::vector<Coeffs> t_fold_table(int y) const;

  /// Row of structure constants: z -> h_{x,y,z} where c_x c_y = sum h c_z.
  Coeffs h_row(int x, int y) const;
  Coeffs h_row(int x, const std::vector<Coeffs>& ftab_of_y) const;
  Laurent h_const(int x, int y, int z) const;

  /// Coefficients phi_w of c_{w_1} ... c_{w_r} = sum_w phi_w c_w.
  Coeffs c_product(const std::vector<int>& ws) const;

  /// T_s * (element in c-basis coordinates).
  Coeffs t_gen_on_c(int s, const Coeffs& g) const;

private:
  const CoxeterSystem& W_;
  std::vector<Coeffs> cw_;
  std::vector<std::vector<std::pair<int, BigInt>>> mu_;
  size_t kl_computed_ = 0;

  void derive_mu();
};

}  // namespace coxcell
