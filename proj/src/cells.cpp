#include "coxcell/cells.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <sstream>
#include <thread>

namespace coxcell {

namespace {

// Iterative Tarjan SCC.  Components are renumbered so that the partition is
// listed by minimal member id.
struct SCCResult {
  std::vector<int> comp_of;
  std::vector<std::vector<int>> comps;
};

SCCResult tarjan(const std::vector<std::vector<int>>& adj) {
  const int n = (int)adj.size();
  SCCResult r;
  r.comp_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<uint8_t> on_stack(n, 0);
  int next_index = 0;
  std::vector<std::pair<int, size_t>> call;  // (node, next child position)

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [u, pos] = call.back();
      if (pos == 0) {
        index[u] = low[u] = next_index++;
        stack.push_back(u);
        on_stack[u] = 1;
      }
      if (pos < adj[u].size()) {
        int w = adj[u][pos++];
        if (index[w] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
      } else {
        if (low[u] == index[u]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            r.comp_of[w] = (int)r.comps.size();
            comp.push_back(w);
          } while (w != u);
          std::sort(comp.begin(), comp.end());
          r.comps.push_back(std::move(comp));
        }
        int u_done = u;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[u_done]);
      }
    }
  }
  // renumber by minimal member
  std::vector<int> order(r.comps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return r.comps[a][0] < r.comps[b][0]; });
  std::vector<std::vector<int>> comps2;
  std::vector<int> remap(r.comps.size());
  for (size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = (int)i;
    comps2.push_back(std::move(r.comps[order[i]]));
  }
  r.comps = std::move(comps2);
  for (int& c : r.comp_of) c = remap[c];
  return r;
}

long long to_ll(const BigInt& b) {
  if (b > (std::numeric_limits<long long>::max)() || b < (std::numeric_limits<long long>::min)())
    throw CoxcellError("gamma coefficient overflows int64");
  return b.convert_to<long long>();
}

}  // namespace

CellDecomposition compute_cells(const CoxeterSystem& W, const HeckeAlgebra& H) {
  const int N = W.size;
  // Edge x -> z means z appears in c_s c_x (left) or c_x c_s (right),
  // i.e. z precedes x in the corresponding preorder.
  std::vector<std::vector<int>> left_adj(N), right_adj(N), both_adj(N);
  for (int x = 0; x < N; ++x) {
    for (int s = 0; s < W.rank; ++s) {
      if (!W.is_left_descent(s, x)) {
        left_adj[x].push_back(W.left_mult[s][x]);
        for (const auto& [z, m] : H.mu_list(x))
          if (W.is_left_descent(s, z)) left_adj[x].push_back(z);
      }
      if (!W.is_right_descent(s, x)) {
        right_adj[x].push_back(W.right_mult[s][x]);
        for (const auto& [z, m] : H.mu_list(W.inverse[x]))
          if (W.is_left_descent(s, z)) right_adj[x].push_back(W.inverse[z]);
      }
    }
    std::sort(left_adj[x].begin(), left_adj[x].end());
    left_adj[x].erase(std::unique(left_adj[x].begin(), left_adj[x].end()), left_adj[x].end());
    std::sort(right_adj[x].begin(), right_adj[x].end());
    right_adj[x].erase(std::unique(right_adj[x].begin(), right_adj[x].end()), right_adj[x].end());
    std::merge(left_adj[x].begin(), left_adj[x].end(), right_adj[x].begin(), right_adj[x].end(),
               std::back_inserter(both_adj[x]));
    both_adj[x].erase(std::unique(both_adj[x].begin(), both_adj[x].end()), both_adj[x].end());
  }

  CellDecomposition d;
  auto l = tarjan(left_adj);
  auto rr = tarjan(right_adj);
  auto t = tarjan(both_adj);
  d.left_cell_of = std::move(l.comp_of);
  d.left_cells = std::move(l.comps);
  d.right_cell_of = std::move(rr.comp_of);
  d.right_cells = std::move(rr.comps);
  d.cell_of = std::move(t.comp_of);
  d.cells = std::move(t.comps);

  // Preorder on two-sided cells by reachability in the condensation.
  const int nc = d.n_cells();
  std::vector<std::vector<int>> cadj(nc);
  for (int x = 0; x < N; ++x)
    for (int z : both_adj[x])
      if (d.cell_of[z] != d.cell_of[x]) cadj[d.cell_of[x]].push_back(d.cell_of[z]);
  for (auto& v : cadj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  d.cell_leq.assign(nc, std::vector<uint8_t>(nc, 0));
  for (int j = 0; j < nc; ++j) {
    std::vector<int> todo{j};
    d.cell_leq[j][j] = 1;
    while (!todo.empty()) {
      int c = todo.back();
      todo.pop_back();
      for (int c2 : cadj[c])
        if (!d.cell_leq[c2][j]) {
          d.cell_leq[c2][j] = 1;
          todo.push_back(c2);
        }
    }
  }
  return d;
}

int CellDecomposition::find_cell(long long a, int containing) const {
  if (containing >= 0) {
    int c = cell_of[containing];
    if (a >= 0 && a_value[c] != a)
      throw CoxcellError("cell selector mismatch: element lies in a cell with a different a-value");
    return c;
  }
  int found = -1;
  for (int c = 0; c < n_cells(); ++c) {
    if (a_value[c] == a) {
      if (found >= 0) throw CoxcellError("a-value selects more than one two-sided cell; use --containing");
      found = c;
    }
  }
  if (found < 0) throw CoxcellError("no two-sided cell with a = " + std::to_string(a));
  return found;
}

const std::vector<std::pair<int, long long>> GammaTable::empty_row_;

GammaTable::GammaTable(const CoxeterSystem& W, const HeckeAlgebra& H, CellDecomposition& cells,
                       int jobs)
    : W_(W), n_(W.size) {
  const int N = W.size;
  struct ZStat {
    int amax = INT_MIN;
    int amax_cell = INT_MIN;
    int vmin = INT_MAX;
    std::vector<std::tuple<int, int, BigInt>> vlist;  // (x, y, coeff at vmin)
    int dmax = INT_MIN;
    std::vector<std::tuple<int, int, BigInt>> dlist;  // (x, y, coeff at dmax)
  };

  const bool keep_cube = N <= 200;
  if (keep_cube) deg_cube_.assign((size_t)N * N * N, INT8_MIN);

  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, N);
  std::vector<std::vector<ZStat>> partials(jobs, std::vector<ZStat>(N));
  std::vector<std::string> errors(jobs);

  auto worker = [&](int t) {
    try {
      std::vector<ZStat>& stat = partials[t];
      for (int y = t; y < N; y += jobs) {
        auto ftab = H.t_fold_table(y);
        for (int x = 0; x < N; ++x) {
          Coeffs row = H.h_row(x, ftab);
          for (const auto& [z, q] : row) {
            for (const auto& [k, c] : q.terms())
              if (c < 0)
                throw CoxcellError("negative coefficient in h_{" + W.word_str(x) + "," +
                                   W.word_str(y) + "," + W.word_str(z) + "} = " + q.str());
            int dg = *q.degree(), vl = *q.valuation();
            ZStat& zs = stat[z];
            if (keep_cube) {
              if (dg > 125 || dg < -125) throw CoxcellError("degree out of cube range");
              deg_cube_[((size_t)x * N + y) * N + z] = (int8_t)dg;
            }
            zs.amax = std::max(zs.amax, dg);
            if (vl < zs.vmin) { zs.vmin = vl; zs.vlist.clear(); }
            if (vl == zs.vmin) zs.vlist.emplace_back(x, y, q.coefficient(vl));
            if (dg > zs.dmax) { zs.dmax = dg; zs.dlist.clear(); }
            if (dg == zs.dmax) zs.dlist.emplace_back(x, y, q.coefficient(dg));
          }
        }
      }
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (!e.empty()) throw CoxcellError(e);

  // Merge thread partials (thread order is deterministic by construction).
  std::vector<ZStat> stat(N);
  for (int t = 0; t < jobs; ++t) {
    for (int z = 0; z < N; ++z) {
      ZStat& a = stat[z];
      ZStat& b = partials[t][z];
      a.amax = std::max(a.amax, b.amax);
      if (b.vmin < a.vmin) { a.vmin = b.vmin; a.vlist.clear(); }
      if (b.vmin == a.vmin)
        a.vlist.insert(a.vlist.end(), std::make_move_iterator(b.vlist.begin()),
                       std::make_move_iterator(b.vlist.end()));
      if (b.dmax > a.dmax) { a.dmax = b.dmax; a.dlist.clear(); }
      if (b.dmax == a.dmax)
        a.dlist.insert(a.dlist.end(), std::make_move_iterator(b.dlist.begin()),
                       std::make_move_iterator(b.dlist.end()));
    }
  }
  partials.clear();

  // Cell-restricted maxima (checked, not assumed).
  std::vector<int> amax_cell(N, INT_MIN);
  if (keep_cube) {
    for (int z = 0; z < N; ++z) {
      int cz = cells.cell_of[z];
      int best = INT_MIN;
      for (int x = 0; x < N; ++x) {
        if (cells.cell_of[x] != cz) continue;
        for (int y = 0; y < N; ++y) {
          if (cells.cell_of[y] != cz) continue;
          int8_t dg = deg_cube_[((size_t)x * N + y) * N + z];
          if (dg != INT8_MIN) best = std::max(best, (int)dg);
        }
      }
      amax_cell[z] = best;
    }
  }

  a_elem_.assign(N, 0);
  for (int z = 0; z < N; ++z) {
    const ZStat& zs = stat[z];
    if (zs.amax == INT_MIN) throw CoxcellError("h row scan missed an element");
    if (zs.amax != -zs.vmin)
      throw CoxcellError("a-function mismatch: max degree != -min valuation at " + W.word_str(z));
    if (keep_cube && amax_cell[z] != zs.amax)
      throw CoxcellError("cell-restricted a-maximum does not attain a(z) at " + W.word_str(z));
    a_elem_[z] = zs.amax;
  }

  // a is constant on two-sided cells; record per-cell values and reorder
  // the two-sided cells by (a, min id).
  {
    const int nc = cells.n_cells();
    std::vector<long long> a_of(nc, -1);
    for (int z = 0; z < N; ++z) {
      int c = cells.cell_of[z];
      if (a_of[c] < 0) a_of[c] = a_elem_[z];
      else if (a_of[c] != a_elem_[z])
        throw CoxcellError("a-function is not constant on a two-sided cell");
    }
    std::vector<int> order(nc);
    for (int i = 0; i < nc; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      if (a_of[i] != a_of[j]) return a_of[i] < a_of[j];
      return cells.cells[i][0] < cells.cells[j][0];
    });
    std::vector<int> remap(nc);
    std::vector<std::vector<int>> cells2(nc);
    std::vector<std::vector<uint8_t>> leq2(nc, std::vector<uint8_t>(nc));
    a_cell_.assign(nc, 0);
    for (int i = 0; i < nc; ++i) {
      remap[order[i]] = i;
      cells2[i] = std::move(cells.cells[order[i]]);
      a_cell_[i] = a_of[order[i]];
    }
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j) leq2[remap[i]][remap[j]] = cells.cell_leq[i][j];
    cells.cells = std::move(cells2);
    cells.cell_leq = std::move(leq2);
    for (int z = 0; z < N; ++z) cells.cell_of[z] = remap[cells.cell_of[z]];
    cells.a_value = a_cell_;
  }

  // gamma support from the minimal-valuation lists; by the two-sided
  // expansion of h the maximal-degree lists must carry the same data.
  for (int z = 0; z < N; ++z) {
    ZStat& zs = stat[z];
    if (zs.vmin != -a_elem_[z]) throw CoxcellError("gamma extraction level mismatch");
    auto key_sort = [](std::vector<std::tuple<int, int, BigInt>>& v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
      });
    };
    key_sort(zs.vlist);
    key_sort(zs.dlist);
    if (zs.vlist != zs.dlist)
      throw CoxcellError("coefficient at v^-a differs from coefficient at v^a for " + W.word_str(z));
    for (const auto& [x, y, c] : zs.vlist) {
      if (c < 0) throw CoxcellError("negative gamma");
      if (cells.cell_of[x] != cells.cell_of[z] || cells.cell_of[y] != cells.cell_of[z])
        throw CoxcellError("nonzero gamma outside a single two-sided cell (P8 violation)");
      rows_[(uint64_t)x * n_ + y].emplace_back(z, to_ll(c));
    }
    zs.vlist.clear();
    zs.dlist.clear();
  }
  for (auto& [k, row] : rows_)
    std::sort(row.begin(), row.end());

  // Distinguished involutions: v^-a occurs in p_{1,d}; the coefficient is 1
  // and d is an involution.
  cells.distinguished.assign(cells.n_cells(), {});
  for (int d = 0; d < N; ++d) {
    BigInt c = H.kl_p(0, d).coefficient((int)-a_elem_[d]);
    if (c == 0) continue;
    if (c != 1) throw CoxcellError("coefficient of v^-a in p_{1,d} is not 1 at " + W.word_str(d));
    if (W.inverse[d] != d) throw CoxcellError("distinguished element is not an involution: " + W.word_str(d));
    if (((W.length[d] - a_elem_[d]) % 2) != 0)
      throw CoxcellError("parity |d| = a mod 2 fails at " + W.word_str(d));
    cells.distinguished[cells.cell_of[d]].push_back(d);
  }
  for (auto& v : cells.distinguished)
    if (v.empty()) throw CoxcellError("a two-sided cell has no distinguished involution");

  cells.c0.assign(cells.n_cells(), {});
  for (int z = 0; z < N; ++z)
    if (cells.left_cell_of[z] == cells.left_cell_of[W.inverse[z]])
      cells.c0[cells.cell_of[z]].push_back(z);
}

long long GammaTable::gamma(int x, int y, int z) const {
  for (const auto& [zz, g] : product_row(x, y))
    if (zz == z) return g;
  return 0;
}

const std::vector<std::pair<int, long long>>& GammaTable::product_row(int x, int y) const {
  auto it = rows_.find((uint64_t)x * n_ + y);
  return it == rows_.end() ? empty_row_ : it->second;
}

void GammaTable::inject_gamma_fault() {
  for (auto& [key, row] : rows_) {
    int x = (int)(key / n_), y = (int)(key % n_);
    for (auto& [z, g] : row) {
      bool p7_fixed = W_.inverse[z] == x && x == y && W_.inverse[y] == z;
      if (!p7_fixed) {
        g += 1;
        return;
      }
    }
  }
  throw CoxcellError("no gamma entry available for fault injection");
}

}  // namespace coxcell
