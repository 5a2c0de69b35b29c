#include "coxcell/hecke.hpp"

#include <tuple>

namespace coxcell {

namespace {
Laurent v_minus_vinv() {
  Laurent p = Laurent::monomial(1);
  p.add_term(-1, -1);
  return p;
}
}  // namespace

void HeckeAlgebra::build() {
  const int N = W_.size;
  cw_.assign(N, {});
  mu_.assign(N, {});
  const Laurent quad = v_minus_vinv();

  cw_[0].emplace(0, Laurent::one());
  for (int w = 1; w < N; ++w) {
    int s = W_.word[w][0];
    int u = W_.left_mult[s][w];  // u < w, c_w = c_s c_u - mu-corrections
    Coeffs x;
    auto acc = [&x](int y, const Laurent& p) {
      if (p.is_zero()) return;
      auto [it, fresh] = x.emplace(y, p);
      if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) x.erase(it);
      }
    };
    for (const auto& [y, p] : cw_[u]) {
      int sy = W_.left_mult[s][y];
      if (W_.length[sy] > W_.length[y]) {
        acc(sy, p);
      } else {
        acc(sy, p);
        acc(y, p * quad);
      }
      acc(y, p.scaled(-1, 1));  // the v^-1 T_e part of c_s
    }
    for (const auto& [z, m] : mu_[u]) {
      if (!W_.is_left_descent(s, z)) continue;
      for (const auto& [y, p] : cw_[z]) acc(y, p.scaled(0, -m));
    }
    cw_[w] = std::move(x);
    for (const auto& [y, p] : cw_[w]) {
      if (y == w) continue;
      BigInt m = p.coefficient(-1);
      if (m != 0) mu_[w].emplace_back(y, std::move(m));
    }
    ++kl_computed_;
  }
}

void HeckeAlgebra::load(const std::vector<std::tuple<int, int, Laurent>>& entries) {
  cw_.assign(W_.size, {});
  mu_.assign(W_.size, {});
  for (int w = 0; w < W_.size; ++w) cw_[w].emplace(w, Laurent::one());
  for (const auto& [y, w, p] : entries) {
    W_.check_id(y);
    W_.check_id(w);
    cw_[w][y] = p;
  }
  kl_computed_ = 0;
  derive_mu();
}

void HeckeAlgebra::derive_mu() {
  for (int w = 0; w < W_.size; ++w) {
    mu_[w].clear();
    for (const auto& [y, p] : cw_[w]) {
      if (y == w) continue;
      BigInt m = p.coefficient(-1);
      if (m != 0) mu_[w].emplace_back(y, std::move(m));
    }
  }
}

Laurent HeckeAlgebra::kl_p(int y, int w) const {
  auto it = cw_[w].find(y);
  return it == cw_[w].end() ? Laurent() : it->second;
}

BigInt HeckeAlgebra::mu(int y, int w) const { return kl_p(y, w).coefficient(-1); }

HeckeElement HeckeAlgebra::t_mul_gen(const HeckeElement& h, int s, Side side) const {
  if (h.basis != Basis::T) throw CoxcellError("t_mul_gen requires a T-basis element");
  const Laurent quad = v_minus_vinv();
  HeckeElement r;
  for (const auto& [w, p] : h.terms) {
    int sw = side == Side::Left ? W_.left_mult[s][w] : W_.right_mult[s][w];
    if (W_.length[sw] > W_.length[w]) {
      r.add_term(sw, p);
    } else {
      r.add_term(sw, p);
      r.add_term(w, p * quad);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::bar_t(const HeckeElement& h) const {
  if (h.basis != Basis::T) throw CoxcellError("bar_t requires a T-basis element");
  const Laurent quad = v_minus_vinv();
  HeckeElement out;
  for (const auto& [w, p] : h.terms) {
    // bar(T_w) = T_{s_1}^-1 ... T_{s_k}^-1 along a reduced word of w,
    // with T_s^-1 = T_s - (v - v^-1) T_e.
    HeckeElement e;
    e.add_term(0, Laurent::one());
    for (uint8_t s : W_.word[w]) {
      HeckeElement next = t_mul_gen(e, s, Side::Right);
      for (const auto& [u, q] : e.terms) next.add_term(u, -(q * quad));
      e = std::move(next);
    }
    Laurent pb = p.bar();
    for (const auto& [u, q] : e.terms) out.add_term(u, pb * q);
  }
  return out;
}

HeckeElement HeckeAlgebra::to_c_basis(const HeckeElement& h_t) const {
  if (h_t.basis != Basis::T) throw CoxcellError("to_c_basis requires a T-basis element");
  Coeffs rest = h_t.terms;
  HeckeElement out;
  out.basis = Basis::C;
  while (!rest.empty()) {
    auto it = std::prev(rest.end());  // ids are length-sorted, so maximal id is Bruhat-maximal
    int w = it->first;
    Laurent phi = it->second;
    out.add_term(w, phi);
    for (const auto& [y, p] : cw_[w]) {
      auto [jt, fresh] = rest.emplace(y, Laurent());
      jt->second -= phi * p;
      if (jt->second.is_zero()) rest.erase(jt);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::to_t_basis(const HeckeElement& h_c) const {
  if (h_c.basis != Basis::C) throw CoxcellError("to_t_basis requires a c-basis element");
  HeckeElement out;
  for (const auto& [w, phi] : h_c.terms)
    for (const auto& [y, p] : cw_[w]) out.add_term(y, phi * p);
  return out;
}

Coeffs HeckeAlgebra::t_gen_on_c(int s, const Coeffs& g) const {
  // T_s c_z = v c_z if sz < z, else c_{sz} - v^-1 c_z + mu-terms.
  Coeffs r;
  auto acc = [&r](int z, const Laurent& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = r.emplace(z, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  for (const auto& [z, p] : g) {
    if (W_.is_left_descent(s, z)) {
      acc(z, p.scaled(1, 1));
    } else {
      acc(W_.left_mult[s][z], p);
      acc(z, p.scaled(-1, -1));
      for (const auto& [z2, m] : mu_[z])
        if (W_.is_left_descent(s, z2)) acc(z2, p.scaled(0, m));
    }
  }
  return r;
}

std::vector<Coeffs> HeckeAlgebra::t_fold_table(int y) const {
  std::vector<Coeffs> f(W_.size);
  f[0].emplace(y, Laurent::one());
  for (int u = 1; u < W_.size; ++u) {
    int s = W_.word[u][0];
    f[u] = t_gen_on_c(s, f[W_.left_mult[s][u]]);
  }
  return f;
}

Coeffs HeckeAlgebra::h_row(int x, const std::vector<Coeffs>& ftab) const {
  Coeffs row;
  for (const auto& [u, p] : cw_[x]) {
    for (const auto& [z, q] : ftab[u]) {
      auto [it, fresh] = row.emplace(z, Laurent());
      it->second.add_mul(p, q);
      if (it->second.is_zero()) row.erase(it);
    }
  }
  return row;
}

Coeffs HeckeAlgebra::h_row(int x, int y) const { return h_row(x, t_fold_table(y)); }

Laurent HeckeAlgebra::h_const(int x, int y, int z) const {
  Coeffs row = h_row(x, y);
  auto it = row.find(z);
  return it == row.end() ? Laurent() : it->second;
}

Coeffs HeckeAlgebra::c_product(const std::vector<int>& ws) const {
  if (ws.empty()) throw CoxcellError("c_product requires at least one factor");
  Coeffs phi;
  phi.emplace(ws[0], Laurent::one());
  for (size_t i = 1; i < ws.size(); ++i) {
    auto ftab = t_fold_table(ws[i]);
    Coeffs next;
    for (const auto& [u, coeff] : phi) {
      Coeffs row = h_row(u, ftab);
      for (const auto& [z, q] : row) {
        auto [it, fresh] = next.emplace(z, Laurent());
        it->second.add_mul(coeff, q);
        if (it->second.is_zero()) next.erase(it);
      }
    }
    phi = std::move(next);
  }
  return phi;
}

}  // namespace coxcell
