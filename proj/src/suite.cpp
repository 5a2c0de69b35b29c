#include "coxcell/suite.hpp"

#include "coxcell/jring.hpp"
#include "coxcell/truncated.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace coxcell {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// nullopt = pass, otherwise the counterexample string.
using CheckResult = std::optional<std::string>;
using CheckFn = std::function<CheckResult(std::mt19937_64&)>;

struct Ctx {
  const CoxeterSystem& W;
  const HeckeAlgebra& H;
  const CellDecomposition& cells;
  GammaTable& g;
  JRing J;

  Ctx(const CoxeterSystem& W_, const HeckeAlgebra& H_, const CellDecomposition& cells_,
      GammaTable& g_)
      : W(W_), H(H_), cells(cells_), g(g_), J(W_, H_, cells_, g_) {}

  std::string w(int id) const { return W.word_str(id); }
  bool irreducible_dihedral() const {
    return W.rank == 2 && W.coxeter_matrix[0][1] >= 3;
  }
  bool irreducible_type_a() const {
    for (int i = 0; i < W.rank; ++i)
      for (int j = i + 1; j < W.rank; ++j)
        if (W.coxeter_matrix[i][j] != (j == i + 1 ? 3 : 2)) return false;
    return true;
  }
  int rand_elem(std::mt19937_64& rng) const {
    return (int)(rng() % (uint64_t)W.size);
  }
  int rand_in(const std::vector<int>& v, std::mt19937_64& rng) const {
    return v[rng() % v.size()];
  }
};

std::string laurent_or_zero(const Coeffs& row, int z) {
  auto it = row.find(z);
  return it == row.end() ? "0" : it->second.str();
}

// ---------------------------------------------------------------- checks

CheckResult check_length_descent(const Ctx& c, std::mt19937_64&) {
  const auto& W = c.W;
  for (int w = 0; w < W.size; ++w) {
    for (int s = 0; s < W.rank; ++s) {
      long long d = (long long)W.length[W.right_mult[s][w]] - (long long)W.length[w];
      if (d != 1 && d != -1) return "length(w*s) != length(w) +/- 1 at w=" + c.w(w);
      bool desc = (W.right_desc[w] >> s) & 1u;
      if (desc != (d == -1)) return "right descent table wrong at w=" + c.w(w);
      bool ldesc = (W.left_desc[w] >> s) & 1u;
      long long dl = (long long)W.length[W.left_mult[s][w]] - (long long)W.length[w];
      if (ldesc != (dl == -1)) return "left descent table wrong at w=" + c.w(w);
    }
    if (W.inverse[W.inverse[w]] != w || W.length[W.inverse[w]] != W.length[w])
      return "inverse not a length-preserving involution at w=" + c.w(w);
  }
  int longest = 0;
  for (int w = 0; w < W.size; ++w)
    if (W.length[w] == W.nu) ++longest;
  if (longest != 1 || W.length[W.w_max] != W.nu) return "longest element not unique";
  if (W.left_desc[0] != 0 || W.right_desc[0] != 0) return "identity has descents";
  uint32_t all = W.rank >= 32 ? ~0u : ((1u << W.rank) - 1);
  if (W.left_desc[W.w_max] != all || W.right_desc[W.w_max] != all)
    return "w_max does not have full descent sets";
  return std::nullopt;
}

CheckResult check_bruhat(const Ctx& c, std::mt19937_64& rng) {
  const auto& W = c.W;
  auto pairs = [&](auto&& fn) -> CheckResult {
    if (W.size <= 48) {
      for (int y = 0; y < W.size; ++y)
        for (int w = 0; w < W.size; ++w)
          if (auto r = fn(y, w)) return r;
    } else {
      for (int i = 0; i < 4000; ++i)
        if (auto r = fn(c.rand_elem(rng), c.rand_elem(rng))) return r;
    }
    return std::nullopt;
  };
  if (auto r = pairs([&](int y, int w) -> CheckResult {
        bool le = W.bruhat_leq(y, w);
        if (y == w && !le) return "bruhat not reflexive at " + c.w(y);
        if (le && y != w && W.length[y] >= W.length[w])
          return "bruhat_leq violates length at y=" + c.w(y) + " w=" + c.w(w);
        if (le != W.bruhat_leq(W.inverse[y], W.inverse[w]))
          return "bruhat not inverse-invariant at y=" + c.w(y) + " w=" + c.w(w);
        if (!W.bruhat_leq(0, w)) return "identity not minimal";
        if (!W.bruhat_leq(y, W.w_max)) return "w_max not maximal";
        return std::nullopt;
      }))
    return r;
  if (c.irreducible_dihedral()) {
    for (int y = 0; y < W.size; ++y)
      for (int w = 0; w < W.size; ++w) {
        bool expect = (y == w) || W.length[y] < W.length[w];
        if (W.bruhat_leq(y, w) != expect)
          return "dihedral closed form fails at y=" + c.w(y) + " w=" + c.w(w);
      }
  }
  return std::nullopt;
}

CheckResult check_kl_degree(const Ctx& c, std::mt19937_64&) {
  const auto& W = c.W;
  for (int w = 0; w < W.size; ++w)
    for (const auto& [y, p] : c.H.c_basis(w)) {
      if (y == w) {
        if (!(p == Laurent::one())) return "p_{w,w} != 1 at w=" + c.w(w);
        continue;
      }
      if (!W.bruhat_leq(y, w)) return "p_{y,w} != 0 outside Bruhat order: y=" + c.w(y) + " w=" + c.w(w);
      if (p.is_zero()) continue;
      if (*p.degree() > -1)
        return "p_{y,w} not in v^-1 Z[v^-1]: y=" + c.w(y) + " w=" + c.w(w) + " p=" + p.str();
      if (*p.valuation() < (long long)W.length[y] - (long long)W.length[w])
        return "p_{y,w} valuation too low: y=" + c.w(y) + " w=" + c.w(w) + " p=" + p.str();
    }
  if (c.irreducible_dihedral()) {
    // Dihedral KL polynomials are all v^(l(y)-l(w)) for y < w.
    for (int w = 0; w < W.size; ++w)
      for (int y = 0; y < W.size; ++y)
        if (W.bruhat_leq(y, w) && y != w) {
          Laurent expect = Laurent::monomial((int)W.length[y] - (int)W.length[w]);
          if (!(c.H.kl_p(y, w) == expect))
            return "dihedral KL closed form fails at y=" + c.w(y) + " w=" + c.w(w);
        }
  }
  return std::nullopt;
}

CheckResult check_bar_invariance(const Ctx& c, std::mt19937_64& rng) {
  auto one = [&](int w) -> CheckResult {
    HeckeElement h{Basis::T, c.H.c_basis(w)};
    if (!(c.H.bar_t(h).terms == h.terms)) return "c_w not bar-invariant at w=" + c.w(w);
    return std::nullopt;
  };
  if (c.W.size <= 48) {
    for (int w = 0; w < c.W.size; ++w)
      if (auto r = one(w)) return r;
  } else {
    for (int i = 0; i < 40; ++i)
      if (auto r = one(c.rand_elem(rng))) return r;
  }
  return std::nullopt;
}

CheckResult check_oracle_h(const Ctx& c, std::mt19937_64& rng) {
  TBasisOracle O(c.W);
  for (int w = 0; w < c.W.size; ++w)
    if (!(O.c_expansion(w) == c.H.c_basis(w)))
      return "oracle c-basis disagrees with engine at w=" + c.w(w);
  if (c.W.size <= 8) {
    for (int x = 0; x < c.W.size; ++x)
      for (int y = 0; y < c.W.size; ++y)
        if (!(c.H.h_row(x, y) == O.h_row(x, y)))
          return "oracle h-row disagrees at x=" + c.w(x) + " y=" + c.w(y);
  } else {
    for (int i = 0; i < 1000; ++i) {
      int x = c.rand_elem(rng), y = c.rand_elem(rng), z = c.rand_elem(rng);
      Coeffs row = c.H.h_row(x, y);
      Laurent engine = row.count(z) ? row.at(z) : Laurent();
      if (!(engine == O.h(x, y, z)))
        return "oracle h disagrees at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
    }
  }
  return std::nullopt;
}

CheckResult check_rs_type_a(const Ctx& c, std::mt19937_64& rng) {
  RSPartition rs = type_a_cell_oracle(c.W);
  auto canon = [](std::vector<std::vector<int>> p) {
    for (auto& v : p) std::sort(v.begin(), v.end());
    std::sort(p.begin(), p.end());
    return p;
  };
  if (canon(c.cells.left_cells) != rs.left_cells)
    return "left cells disagree with the Robinson-Schensted oracle";
  if (canon(c.cells.cells) != rs.two_sided_cells)
    return "two-sided cells disagree with the Robinson-Schensted oracle";
  auto hom = [&](int w, int u) -> bool {
    auto pw = type_a_permutation(c.W, w), pu = type_a_permutation(c.W, u);
    auto pm = type_a_permutation(c.W, c.W.mul(w, u));
    for (size_t i = 0; i < pw.size(); ++i)
      if (pm[i] != pw[pu[i]]) return false;
    return true;
  };
  if (c.W.size <= 48) {
    for (int w = 0; w < c.W.size; ++w)
      for (int u = 0; u < c.W.size; ++u)
        if (!hom(w, u)) return "mul disagrees with permutation composition at w=" + c.w(w) + " u=" + c.w(u);
  } else {
    for (int i = 0; i < 2000; ++i) {
      int w = c.rand_elem(rng), u = c.rand_elem(rng);
      if (!hom(w, u)) return "mul disagrees with permutation composition at w=" + c.w(w) + " u=" + c.w(u);
    }
  }
  return std::nullopt;
}

CheckResult check_a_function(const Ctx& c, std::mt19937_64&) {
  const auto& W = c.W;
  for (int z = 0; z < W.size; ++z) {
    if (c.g.a(z) != c.g.a_cell(c.cells.cell_of[z]))
      return "a not constant on the cell of z=" + c.w(z);
    if (c.g.a(z) != c.g.a(W.inverse[z])) return "a(z) != a(z^-1) at z=" + c.w(z);
    if (c.g.a(z) < 0 || c.g.a(z) > (long long)W.nu) return "a out of range at z=" + c.w(z);
  }
  if (c.g.a(0) != 0) return "a(e) != 0";
  if (c.g.a(W.w_max) != (long long)W.nu) return "a(w_max) != nu";
  return std::nullopt;
}

CheckResult check_p4(const Ctx& c, std::mt19937_64& rng) {
  if (c.g.has_degree_cube()) {
    const int N = c.W.size;
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        for (int z = 0; z < N; ++z) {
          int8_t d = c.g.h_degree(x, y, z);
          if (d != INT8_MIN && d > c.g.a(z))
            return "deg h_{x,y,z} > a(z) at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
        }
    return std::nullopt;
  }
  for (int i = 0; i < 300; ++i) {
    int x = c.rand_elem(rng), y = c.rand_elem(rng);
    for (const auto& [z, p] : c.H.h_row(x, y))
      if (*p.degree() > c.g.a(z))
        return "deg h_{x,y,z} > a(z) at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
  }
  return std::nullopt;
}

CheckResult check_p7(const Ctx& c, std::mt19937_64&) {
  CheckResult bad;
  c.g.for_each_gamma([&](int x, int y, int z, long long gv) {
    if (bad) return;
    long long other = c.g.gamma(c.W.inverse[z], x, c.W.inverse[y]);
    if (gv != other) {
      std::ostringstream os;
      os << "gamma(" << c.w(x) << ", " << c.w(y) << ", " << c.w(z) << ") = " << gv
         << " but gamma(" << c.w(c.W.inverse[z]) << ", " << c.w(x) << ", "
         << c.w(c.W.inverse[y]) << ") = " << other;
      bad = os.str();
    }
  });
  return bad;
}

CheckResult check_p8(const Ctx& c, std::mt19937_64&) {
  CheckResult bad;
  const auto& L = c.cells.left_cell_of;
  c.g.for_each_gamma([&](int x, int y, int z, long long) {
    if (bad) return;
    bool ok = c.cells.cell_of[x] == c.cells.cell_of[y] && c.cells.cell_of[y] == c.cells.cell_of[z] &&
              L[x] == L[c.W.inverse[y]] && L[y] == L[z] && L[c.W.inverse[x]] == L[c.W.inverse[z]];
    if (!ok)
      bad = "support triple violates cell membership: (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
  });
  return bad;
}

CheckResult check_gamma_nonneg(const Ctx& c, std::mt19937_64&) {
  CheckResult bad;
  c.g.for_each_gamma([&](int x, int y, int z, long long gv) {
    if (bad) return;
    if (gv < 0) {
      std::ostringstream os;
      os << "gamma(" << c.w(x) << ", " << c.w(y) << ", " << c.w(z) << ") = " << gv;
      bad = os.str();
    }
  });
  return bad;
}

CheckResult check_tau_duality(const Ctx& c, std::mt19937_64&) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell)
    for (int yp : c.cells.cells[cell])
      for (int y : c.cells.cells[cell]) {
        long long t = c.J.tau(c.J.mul(c.J.t(yp), c.J.t(y)));
        long long expect = (yp == c.W.inverse[y]) ? 1 : 0;
        if (t != expect) {
          std::ostringstream os;
          os << "tau(t_{y'} t_y) = " << t << " != " << expect << " at y'=" << c.w(yp)
             << " y=" << c.w(y);
          return os.str();
        }
      }
  return std::nullopt;
}

CheckResult check_j_unit(const Ctx& c, std::mt19937_64&) {
  JElement u = c.J.unit_full();
  for (int x = 0; x < c.W.size; ++x) {
    JElement tx = c.J.t(x);
    if (!(c.J.mul(u, tx) == tx)) return "unit fails on the left at x=" + c.w(x);
    if (!(c.J.mul(tx, u) == tx)) return "unit fails on the right at x=" + c.w(x);
  }
  // psi(c_e) must be the unit of J with coefficient 1.
  AJElement pe = c.J.psi(HeckeElement{Basis::C, {{0, Laurent::one()}}});
  AJElement expect;
  for (const auto& [d, one] : u.terms) expect.add_term(d, Laurent::constant(one));
  if (!(pe == expect)) return "psi(c_e) is not the unit of J";
  return std::nullopt;
}

CheckResult check_j_assoc(const Ctx& c, std::mt19937_64& rng) {
  auto one = [&](int x, int y, int z) -> CheckResult {
    JElement lhs = c.J.mul(c.J.mul(c.J.t(x), c.J.t(y)), c.J.t(z));
    JElement rhs = c.J.mul(c.J.t(x), c.J.mul(c.J.t(y), c.J.t(z)));
    if (!(lhs == rhs))
      return "J not associative at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
    return std::nullopt;
  };
  if (c.W.size <= 16) {
    for (int x = 0; x < c.W.size; ++x)
      for (int y = 0; y < c.W.size; ++y)
        for (int z = 0; z < c.W.size; ++z)
          if (auto r = one(x, y, z)) return r;
  } else {
    for (int i = 0; i < 500; ++i)
      if (auto r = one(c.rand_elem(rng), c.rand_elem(rng), c.rand_elem(rng))) return r;
  }
  return std::nullopt;
}

CheckResult check_direct_sum(const Ctx& c, std::mt19937_64& rng) {
  if (c.cells.n_cells() < 2) return std::nullopt;
  // Independent Hecke-side recomputation: for x, y in different cells no
  // h_{x,y,z} reaches v^{-a(z)}.
  for (int i = 0; i < 30; ++i) {
    int x = c.rand_elem(rng), y = c.rand_elem(rng);
    if (c.cells.cell_of[x] == c.cells.cell_of[y]) {
      --i;
      continue;
    }
    for (const auto& [z, p] : c.H.h_row(x, y))
      if (p.coefficient((int)-c.g.a(z)) != 0)
        return "cross-cell gamma nonzero at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
  }
  return std::nullopt;
}

CheckResult check_psi_multiplicative(const Ctx& c, std::mt19937_64& rng) {
  std::vector<std::optional<AJElement>> cache(c.W.size);
  auto psi_c = [&](int w) -> const AJElement& {
    if (!cache[w]) cache[w] = c.J.psi(HeckeElement{Basis::C, {{w, Laurent::one()}}});
    return *cache[w];
  };
  auto one = [&](int x, int y) -> CheckResult {
    AJElement lhs = c.J.aj_mul(psi_c(x), psi_c(y));
    AJElement rhs;
    for (const auto& [w, h] : c.H.h_row(x, y))
      for (const auto& [z, p] : psi_c(w).terms) {
        Laurent prod = h * p;
        rhs.add_term(z, prod);
      }
    if (!(lhs == rhs)) return "psi not multiplicative at x=" + c.w(x) + " y=" + c.w(y);
    return std::nullopt;
  };
  if (c.W.size <= 48) {
    for (int x = 0; x < c.W.size; ++x)
      for (int y = 0; y < c.W.size; ++y)
        if (auto r = one(x, y)) return r;
  } else {
    for (int i = 0; i < 25; ++i)
      if (auto r = one(c.rand_elem(rng), c.rand_elem(rng))) return r;
  }
  return std::nullopt;
}

CheckResult check_distinguished(const Ctx& c, std::mt19937_64&) {
  const auto& W = c.W;
  std::vector<char> isdist(W.size, 0);
  for (const auto& ds : c.cells.distinguished)
    for (int d : ds) isdist[d] = 1;
  for (int z = 0; z < W.size; ++z) {
    BigInt coef = c.H.kl_p(0, z).coefficient((int)-c.g.a(z));
    if (isdist[z]) {
      if (W.inverse[z] != z) return "distinguished element not an involution: " + c.w(z);
      if (coef != 1) return "coefficient of v^-a in p_{1,d} != 1 at d=" + c.w(z);
      if (((long long)W.length[z] - c.g.a(z)) % 2 != 0)
        return "|d| !== a(d) mod 2 at d=" + c.w(z);
    } else if (coef != 0) {
      return "v^-a appears in p_{1,z} for non-distinguished z=" + c.w(z);
    }
  }
  return std::nullopt;
}

CheckResult check_trace_vanishing(const Ctx& c, std::mt19937_64&) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    const auto& members = c.cells.cells[cell];
    const auto& c0 = c.cells.c0[cell];
    for (int z : members) {
      if (std::binary_search(c0.begin(), c0.end(), z)) continue;
      long long tr = 0;
      for (int y : members) tr += c.g.gamma(z, y, y);
      if (tr != 0) {
        std::ostringstream os;
        os << "sum_y gamma(z,y,y) = " << tr << " != 0 at z=" << c.w(z) << " (z in c minus c0)";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

CheckResult check_left_cells_vs_d(const Ctx& c, std::mt19937_64&) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    std::vector<char> isdist(c.W.size, 0);
    for (int d : c.cells.distinguished[cell]) isdist[d] = 1;
    int nlc = 0;
    for (const auto& lc : c.cells.left_cells) {
      if (c.cells.cell_of[lc[0]] != cell) continue;
      ++nlc;
      int nd = 0;
      for (int w : lc) nd += isdist[w];
      if (nd != 1) {
        std::ostringstream os;
        os << "left cell of " << c.w(lc[0]) << " contains " << nd << " distinguished involutions";
        return os.str();
      }
    }
    if (nlc != (int)c.cells.distinguished[cell].size()) {
      std::ostringstream os;
      os << "cell " << cell << ": " << nlc << " left cells but |D_c| = "
         << c.cells.distinguished[cell].size();
      return os.str();
    }
  }
  return std::nullopt;
}

CheckResult check_circle_ring(const Ctx& c, std::mt19937_64& rng) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    TruncContext ctx(c.J, cell);
    const auto& c0 = ctx.c0();
    auto one = [&](int x, int y, int z) -> CheckResult {
      JElement lhs = ctx.circle(ctx.circle(ctx.jring().t(x), ctx.jring().t(y)), ctx.jring().t(z));
      JElement rhs = ctx.circle(ctx.jring().t(x), ctx.circle(ctx.jring().t(y), ctx.jring().t(z)));
      if (!(lhs == rhs))
        return "circle not associative at (" + c.w(x) + ", " + c.w(y) + ", " + c.w(z) + ")";
      return std::nullopt;
    };
    // Closure is asserted inside circle(); exercise it on all pairs.
    for (int x : c0)
      for (int y : c0) (void)ctx.circle(ctx.jring().t(x), ctx.jring().t(y));
    if (c0.size() <= 12) {
      for (int x : c0)
        for (int y : c0)
          for (int z : c0)
            if (auto r = one(x, y, z)) return r;
    } else {
      for (int i = 0; i < 50; ++i)
        if (auto r = one(c.rand_in(c0, rng), c.rand_in(c0, rng), c.rand_in(c0, rng))) return r;
    }
  }
  return std::nullopt;
}

CheckResult check_adjunction(const Ctx& c, std::mt19937_64&) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    TruncContext ctx(c.J, cell);
    for (int u : ctx.members()) {
      std::map<int, long long> psi = ctx.psi_x(u);
      for (int z : ctx.members()) {
        long long lhs = psi.count(z) ? psi.at(z) : 0;
        long long rhs = ctx.dim_hom(z, u);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "psi_u(z) = " << lhs << " != dim_hom(z,u) = " << rhs << " at z=" << c.w(z)
             << " u=" << c.w(u);
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_truncation_bound(const Ctx& c, std::mt19937_64& rng) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    TruncContext ctx(c.J, cell);
    const auto& members = ctx.members();
    long long a = ctx.a();
    int samples = (long long)members.size() * members.size() * members.size() <= 216 ? -1 : 12;
    auto one = [&](int w1, int w2, int w3) -> CheckResult {
      Coeffs phi = c.H.c_product({w1, w2, w3});
      for (const auto& [w, p] : phi) {
        if (!ctx.in_cell(w)) continue;
        if (*p.valuation() < -2 * a)
          return "phi_w valuation below -(r-1)a at (" + c.w(w1) + ", " + c.w(w2) + ", " +
                 c.w(w3) + "), w=" + c.w(w);
        long long n = ctx.conv_multiplicity({w1, w2, w3}, w);
        BigInt coef = p.coefficient((int)(-2 * a));
        if (coef != n)
          return "coefficient(phi_w, -2a) != conv multiplicity at (" + c.w(w1) + ", " +
                 c.w(w2) + ", " + c.w(w3) + "), w=" + c.w(w);
      }
      return std::nullopt;
    };
    if (samples < 0) {
      for (int w1 : members)
        for (int w2 : members)
          for (int w3 : members)
            if (auto r = one(w1, w2, w3)) return r;
    } else {
      for (int i = 0; i < samples; ++i)
        if (auto r = one(c.rand_in(members, rng), c.rand_in(members, rng),
                         c.rand_in(members, rng)))
          return r;
    }
  }
  return std::nullopt;
}

CheckResult check_hecke_j_consistency(const Ctx& c, std::mt19937_64& rng) {
  // coefficient(phi_w, -a) from a two-factor c-product equals gamma.
  auto one = [&](int x, int y) -> CheckResult {
    long long a = c.g.a(x);
    Coeffs row = c.H.h_row(x, y);
    for (int w : c.cells.cells[c.cells.cell_of[x]]) {
      BigInt coef = row.count(w) ? row.at(w).coefficient((int)-a) : BigInt(0);
      if (coef != c.g.gamma(x, y, w))
        return "coefficient(h_{x,y,w}, -a) != gamma at (" + c.w(x) + ", " + c.w(y) + ", " +
               c.w(w) + "): h=" + laurent_or_zero(row, w);
    }
    return std::nullopt;
  };
  if (c.W.size <= 8) {
    for (int x = 0; x < c.W.size; ++x)
      for (int y = 0; y < c.W.size; ++y)
        if (c.cells.cell_of[x] == c.cells.cell_of[y])
          if (auto r = one(x, y)) return r;
  } else {
    for (int i = 0; i < 500; ++i) {
      int x = c.rand_elem(rng);
      if (auto r = one(x, c.rand_in(c.cells.cells[c.cells.cell_of[x]], rng))) return r;
    }
  }
  return std::nullopt;
}

CheckResult check_center_dim_type_a(const Ctx& c, std::mt19937_64&) {
  for (int cell = 0; cell < c.cells.n_cells(); ++cell) {
    long long d = c.J.center_dimension(cell);
    if (d != 1) {
      std::ostringstream os;
      os << "center dimension of cell " << cell << " is " << d << " != 1";
      return os.str();
    }
  }
  return std::nullopt;
}

CheckResult check_dihedral_structure(const Ctx& c, std::mt19937_64&) {
  int m = c.W.coxeter_matrix[0][1];
  if (c.cells.n_cells() != 3) return "dihedral group does not have 3 two-sided cells";
  if (c.cells.a_value[0] != 0 || c.cells.a_value[1] != 1 || c.cells.a_value[2] != m)
    return "dihedral a-values are not 0, 1, m";
  if ((int)c.cells.cells[1].size() != 2 * m - 2) return "dihedral middle cell has wrong size";
  if (c.cells.distinguished[1] != std::vector<int>{1, 2})
    return "dihedral middle cell distinguished involutions are not {s1, s2}";
  return std::nullopt;
}

}  // namespace

std::vector<OracleReport> run_property_suite(const CoxeterSystem& W, const HeckeAlgebra& H,
                                             const CellDecomposition& cells, GammaTable& g,
                                             const SuiteOptions& opt) {
  if (opt.inject_fault == "gamma")
    g.inject_gamma_fault();
  else if (!opt.inject_fault.empty())
    throw CoxcellError("unknown fault target: " + opt.inject_fault);

  Ctx c(W, H, cells, g);

  std::vector<std::pair<std::string, CheckFn>> checks;
  auto add = [&](std::string name, CheckFn fn) { checks.emplace_back(std::move(name), std::move(fn)); };
  auto bind = [&](auto fn) {
    return [&c, fn](std::mt19937_64& rng) { return fn(c, rng); };
  };

  add("a-function", bind(check_a_function));
  add("adjunction-psi-dimhom", bind(check_adjunction));
  add("bruhat-order", bind(check_bruhat));
  add("c-bar-invariance", bind(check_bar_invariance));
  add("circle-ring", bind(check_circle_ring));
  add("distinguished-involutions", bind(check_distinguished));
  add("gamma-nonnegative", bind(check_gamma_nonneg));
  add("hecke-j-consistency", bind(check_hecke_j_consistency));
  add("j-associativity", bind(check_j_assoc));
  add("j-unit", bind(check_j_unit));
  add("kl-degree-bound", bind(check_kl_degree));
  add("left-cells-match-distinguished", bind(check_left_cells_vs_d));
  add("length-descent", bind(check_length_descent));
  add("p4-degree-bound", bind(check_p4));
  add("p7-cyclic-symmetry", bind(check_p7));
  add("p8-cell-membership", bind(check_p8));
  add("psi-multiplicative", bind(check_psi_multiplicative));
  add("ring-direct-sum", bind(check_direct_sum));
  add("tau-duality", bind(check_tau_duality));
  add("trace-vanishing-off-c0", bind(check_trace_vanishing));
  add("truncation-bound", bind(check_truncation_bound));
  if (W.size <= 48) add("oracle-h-agreement", bind(check_oracle_h));
  if (c.irreducible_dihedral()) add("dihedral-structure", bind(check_dihedral_structure));
  if (c.irreducible_type_a()) {
    add("rs-correspondence", bind(check_rs_type_a));
    add("center-dimension", bind(check_center_dim_type_a));
  }

  std::sort(checks.begin(), checks.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<OracleReport> out;
  for (const auto& [name, fn] : checks) {
    OracleReport r;
    r.group = W.type_string;
    r.check = name;
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed ^ fnv1a(name));
    try {
      CheckResult res = fn(rng);
      r.pass = !res.has_value();
      if (res) r.counterexample = *res;
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_pass(const std::vector<OracleReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

json suite_report_json(const std::vector<OracleReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json one;
    one["group"] = r.group;
    one["check"] = r.check;
    one["status"] = r.pass ? "pass" : "fail";
    one["seed"] = r.seed;
    if (!r.pass) one["counterexample"] = r.counterexample;
    arr.push_back(one);
  }
  return arr;
}

}  // namespace coxcell
