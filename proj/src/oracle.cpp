#include "coxcell/oracle.hpp"

#include <algorithm>
#include <map>

namespace coxcell {

namespace {
Laurent quad_term() {
  Laurent p = Laurent::monomial(1);
  p.add_term(-1, -1);
  return p;  // v - v^-1
}

// Keep only the strictly negative exponents.
Laurent negative_part(const Laurent& p) {
  Laurent r;
  for (const auto& [k, c] : p.terms())
    if (k < 0) r.add_term(k, c);
  return r;
}
}  // namespace

TBasisOracle::TBasisOracle(const CoxeterSystem& W) : W_(W) {
  if (W.size > 120) throw CoxcellError("T-basis oracle is limited to |W| <= 120");
  const int N = W.size;
  const Laurent quad = quad_term();

  // bar(T_w): product of T_s^-1 = T_s - (v - v^-1) T_e along a reduced word.
  bar_t_.assign(N, {});
  for (int w = 0; w < N; ++w) {
    Coeffs e{{0, Laurent::one()}};
    for (uint8_t s : W_.word[w]) {
      Coeffs next;
      auto acc = [&next](int u, const Laurent& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = next.emplace(u, p);
        if (!fresh) {
          it->second += p;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      for (const auto& [u, p] : e) {
        int us = W_.right_mult[s][u];
        if (W_.length[us] > W_.length[u]) {
          acc(us, p);
        } else {
          acc(us, p);
          acc(u, p * quad);
        }
        acc(u, -(p * quad));  // the -(v - v^-1) T_e part of T_s^-1
      }
      e = std::move(next);
    }
    bar_t_[w] = std::move(e);
  }

  // Solve the bar-fixedness system downwards: with C = sum p_u T_u, p_w = 1,
  // the T_u coefficient of bar(C) gives p_u - bar(p_u) = K, and the degree
  // constraint p_u in v^-1 Z[v^-1] picks out the negative part of K.
  oc_.assign(N, {});
  for (int w = 0; w < N; ++w) {
    Coeffs p{{w, Laurent::one()}};
    Coeffs acc = bar_t_[w];  // running bar(C) over the processed support
    for (int u = w - 1; u >= 0; --u) {
      auto it = acc.find(u);
      Laurent k = it == acc.end() ? Laurent() : it->second;
      Laurent pu = negative_part(k);
      if (!(k == pu - pu.bar()))
        throw CoxcellError("oracle bar system is inconsistent");
      if (pu.is_zero()) continue;
      p[u] = pu;
      Laurent pb = pu.bar();
      for (const auto& [t, q] : bar_t_[u]) {
        auto [jt, fresh] = acc.emplace(t, Laurent());
        jt->second.add_mul(pb, q);
        if (jt->second.is_zero()) acc.erase(jt);
      }
    }
    if (!(acc == p)) throw CoxcellError("oracle element is not bar-invariant");
    oc_[w] = std::move(p);
  }
}

Coeffs TBasisOracle::t_mul_word(Coeffs a, int w) const {
  const Laurent quad = quad_term();
  for (uint8_t s : W_.word[w]) {
    Coeffs next;
    for (const auto& [u, p] : a) {
      int us = W_.right_mult[s][u];
      auto add = [&next](int t, const Laurent& q) {
        if (q.is_zero()) return;
        auto [it, fresh] = next.emplace(t, q);
        if (!fresh) {
          it->second += q;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      if (W_.length[us] > W_.length[u]) {
        add(us, p);
      } else {
        add(us, p);
        add(u, p * quad);
      }
    }
    a = std::move(next);
  }
  return a;
}

Coeffs TBasisOracle::t_mul(const Coeffs& a, const Coeffs& b) const {
  Coeffs r;
  for (const auto& [u, q] : b) {
    Coeffs part = t_mul_word(a, u);
    for (const auto& [t, p] : part) {
      auto [it, fresh] = r.emplace(t, Laurent());
      it->second.add_mul(p, q);
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Coeffs TBasisOracle::h_row(int x, int y) const {
  Coeffs prod = t_mul(oc_[x], oc_[y]);
  Coeffs out;
  while (!prod.empty()) {
    auto it = std::prev(prod.end());
    int w = it->first;
    Laurent phi = it->second;
    out.emplace(w, phi);
    for (const auto& [u, p] : oc_[w]) {
      auto [jt, fresh] = prod.emplace(u, Laurent());
      jt->second -= phi * p;
      if (jt->second.is_zero()) prod.erase(jt);
    }
  }
  return out;
}

Laurent TBasisOracle::h(int x, int y, int z) const {
  Coeffs row = h_row(x, y);
  auto it = row.find(z);
  return it == row.end() ? Laurent() : it->second;
}

std::vector<int> type_a_permutation(const CoxeterSystem& W, int w) {
  const int n = W.rank;
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  for (uint8_t s : W.word[w]) std::swap(p[s], p[s + 1]);
  return p;
}

RSPartition type_a_cell_oracle(const CoxeterSystem& W) {
  for (int i = 0; i + 1 < W.rank; ++i)
    if (W.coxeter_matrix[i][i + 1] != 3) throw CoxcellError("RS oracle requires irreducible type A");
  for (int i = 0; i < W.rank; ++i)
    for (int j = i + 2; j < W.rank; ++j)
      if (W.coxeter_matrix[i][j] != 2) throw CoxcellError("RS oracle requires irreducible type A");

  auto insert_rsk = [](const std::vector<int>& seq) {
    std::vector<std::vector<int>> ptab, qtab;
    for (int pos = 0; pos < (int)seq.size(); ++pos) {
      int x = seq[pos];
      for (size_t r = 0;; ++r) {
        if (r == ptab.size()) {
          ptab.push_back({x});
          qtab.push_back({pos});
          break;
        }
        auto it = std::upper_bound(ptab[r].begin(), ptab[r].end(), x);
        if (it == ptab[r].end()) {
          ptab[r].push_back(x);
          qtab[r].push_back(pos);
          break;
        }
        std::swap(x, *it);
      }
    }
    return std::make_pair(ptab, qtab);
  };

  std::map<std::vector<std::vector<int>>, std::vector<int>> by_q;
  std::map<std::vector<int>, std::vector<int>> by_shape;
  for (int w = 0; w < W.size; ++w) {
    auto [ptab, qtab] = insert_rsk(type_a_permutation(W, w));
    by_q[qtab].push_back(w);
    std::vector<int> shape;
    for (const auto& row : ptab) shape.push_back((int)row.size());
    by_shape[shape].push_back(w);
  }
  RSPartition out;
  for (auto& [q, members] : by_q) out.left_cells.push_back(std::move(members));
  for (auto& [sh, members] : by_shape) out.two_sided_cells.push_back(std::move(members));
  auto canon = [](std::vector<std::vector<int>>& part) {
    for (auto& p : part) std::sort(p.begin(), p.end());
    std::sort(part.begin(), part.end());
  };
  canon(out.left_cells);
  canon(out.two_sided_cells);
  return out;
}

}  // namespace coxcell
