#include "coxcell/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace coxcell {
namespace {

// ---------------------------------------------------------------------------
// Exact quadratic arithmetic a + b*sqrt(sq) with rational a, b.  The values
// that occur are the entries 2cos(pi/m), m in {2,3,4,5}, and small integer
// combinations of them, so int64 never comes close to overflow.

struct Frac {
  long long n = 0, d = 1;

  Frac() = default;
  Frac(long long num, long long den = 1) : n(num), d(den) { norm(); }

  void norm() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
};

struct QNum {
  Frac a, b;  // value a + b*sqrt(sq); sq fixed per root computation
  friend QNum operator+(QNum x, QNum y) { return {x.a + y.a, x.b + y.b}; }
  friend QNum operator-(QNum x, QNum y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(QNum x, QNum y) { return x.a == y.a && x.b == y.b; }
};

QNum qmul(QNum x, QNum y, long long sq) {
  return {x.a * y.a + x.b * y.b * Frac(sq), x.a * y.b + x.b * y.a};
}

// 2cos(pi/m) for the labels that occur in non-dihedral factors.
// Returns the value and the required radicand.
QNum two_cos(int m, long long& sq) {
  switch (m) {
    case 2: return {Frac(0), Frac(0)};
    case 3: return {Frac(1), Frac(0)};
    case 4: sq = 2; return {Frac(0), Frac(1)};         // sqrt(2)
    case 5: sq = 5; return {Frac(1, 2), Frac(1, 2)};   // golden ratio
    default: throw CoxcellError("unsupported bond label in root enumeration");
  }
}

// ---------------------------------------------------------------------------
// Irreducible factor, reduced to its right multiplication tables.

struct Factor {
  int rank = 0;
  int size = 0;
  std::vector<std::vector<int>> right;  // [s][id], identity = 0
  std::vector<std::vector<int>> cox;    // m_st for this factor
  long long order = 0;                  // expected |W| from the product formula
  std::string label;
};

// Enumerate a factor through the geometric representation: elements are the
// signed permutations they induce on the positive roots.
void enumerate_by_roots(Factor& f) {
  const int n = f.rank;
  long long sq = 1;
  std::vector<std::vector<QNum>> cos_tab(n, std::vector<QNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cos_tab[i][j] = two_cos(f.cox[i][j], sq);

  using Vec = std::vector<QNum>;
  auto reflect = [&](int s, const Vec& beta) {
    Vec r = beta;
    QNum acc{Frac(-1) * beta[s].a, Frac(-1) * beta[s].b};
    for (int j = 0; j < n; ++j)
      if (j != s) acc = acc + qmul(cos_tab[s][j], beta[j], sq);
    r[s] = acc;
    return r;
  };

  auto vec_key = [&](const Vec& v) {
    std::string k;
    k.reserve(v.size() * 32);
    for (const QNum& q : v) {
      k += std::to_string(q.a.n); k += '/';
      k += std::to_string(q.a.d); k += ',';
      k += std::to_string(q.b.n); k += '/';
      k += std::to_string(q.b.d); k += ';';
    }
    return k;
  };

  // Positive-root closure: s fixes positivity of every positive root except
  // its own simple root.
  std::vector<Vec> roots;
  std::unordered_map<std::string, int> root_id;
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = {Frac(1), Frac(0)};
    root_id.emplace(vec_key(e), (int)roots.size());
    roots.push_back(std::move(e));
  }
  for (size_t head = 0; head < roots.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      if ((int)head == s) continue;
      Vec img = reflect(s, roots[head]);
      auto key = vec_key(img);
      if (!root_id.count(key)) {
        root_id.emplace(key, (int)roots.size());
        roots.push_back(std::move(img));
      }
    }
  }
  const int nroots = (int)roots.size();

  // Generator actions as signed permutations of the positive roots
  // (1-based, negative = negative root).
  std::vector<std::vector<int16_t>> sigma(n, std::vector<int16_t>(nroots));
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < nroots; ++k) {
      if (k == s) { sigma[s][k] = (int16_t)-(s + 1); continue; }
      auto it = root_id.find(vec_key(reflect(s, roots[k])));
      if (it == root_id.end()) throw CoxcellError("root closure is not closed");
      sigma[s][k] = (int16_t)(it->second + 1);
    }
  }

  // BFS over the group; an element is keyed by its images of the simple
  // roots (a basis, so the key is faithful).
  using State = std::vector<int16_t>;
  auto state_key = [&](const State& st) {
    return std::string(reinterpret_cast<const char*>(st.data()), n * sizeof(int16_t));
  };
  std::vector<State> elems;
  std::unordered_map<std::string, int> elem_id;
  State ident(nroots);
  for (int k = 0; k < nroots; ++k) ident[k] = (int16_t)(k + 1);
  elem_id.emplace(state_key(ident), 0);
  elems.push_back(std::move(ident));
  f.right.assign(n, {});

  for (size_t head = 0; head < elems.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      State next(nroots);
      const State& cur = elems[head];
      const auto& sg = sigma[s];
      for (int k = 0; k < nroots; ++k) {
        int16_t j = sg[k];
        next[k] = j > 0 ? cur[j - 1] : (int16_t)-cur[-j - 1];
      }
      auto key = state_key(next);
      auto it = elem_id.find(key);
      int id;
      if (it == elem_id.end()) {
        id = (int)elems.size();
        elem_id.emplace(std::move(key), id);
        elems.push_back(std::move(next));
      } else {
        id = it->second;
      }
      for (int t = 0; t < n; ++t)
        if ((int)f.right[t].size() <= (int)head) f.right[t].resize(head + 1, -1);
      f.right[s][head] = id;
    }
  }
  f.size = (int)elems.size();
  for (int s = 0; s < n; ++s) f.right[s].resize(f.size, -1);
  if (f.size != f.order)
    throw CoxcellError("enumeration of " + f.label + " does not match the product formula");
}

// Dihedral factor I2(m): alternating words handled directly.
// ids: e = 0; (length l, first letter fl) = 2(l-1)+1+fl for 1 <= l < m;
// the longest element = 2m-1.
void enumerate_dihedral(Factor& f, int m) {
  f.size = 2 * m;
  f.right.assign(2, std::vector<int>(f.size, -1));
  auto id_of = [&](int l, int fl) {
    if (l == 0) return 0;
    if (l == m) return 2 * m - 1;
    return 2 * (l - 1) + 1 + fl;
  };
  for (int g = 0; g < 2; ++g) {
    f.right[g][0] = id_of(1, g);
    int fl_top = g ^ ((m - 1) & 1);  // the length-m word ending with g starts here
    f.right[g][2 * m - 1] = id_of(m - 1, fl_top);
    for (int l = 1; l < m; ++l) {
      for (int fl = 0; fl < 2; ++fl) {
        int last = fl ^ ((l - 1) & 1);
        f.right[g][id_of(l, fl)] = (g == last) ? id_of(l - 1, fl) : (l + 1 == m ? 2 * m - 1 : id_of(l + 1, fl));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Type-string parsing.

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Factor parse_factor(const std::string& tok) {
  Factor f;
  f.label = tok;
  auto chain = [&](int n) {
    f.rank = n;
    f.cox.assign(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) f.cox[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) f.cox[i][i + 1] = f.cox[i + 1][i] = 3;
  };
  auto num_after = [&](size_t pos) -> int {
    if (pos >= tok.size()) throw CoxcellError("malformed factor '" + tok + "'");
    for (size_t i = pos; i < tok.size(); ++i)
      if (!std::isdigit((unsigned char)tok[i])) throw CoxcellError("malformed factor '" + tok + "'");
    long long n = std::stoll(tok.substr(pos));
    if (n < 1 || n > 30) throw CoxcellError("rank out of range in '" + tok + "'");
    return (int)n;
  };

  if (tok == "H3") {
    chain(3); f.cox[0][1] = f.cox[1][0] = 5; f.order = 120;
  } else if (tok == "H4") {
    chain(4); f.cox[0][1] = f.cox[1][0] = 5; f.order = 14400;
  } else if (tok == "F4") {
    chain(4); f.cox[1][2] = f.cox[2][1] = 4; f.order = 1152;
  } else if (tok == "G2") {
    f.rank = 2; f.order = 12;  // dihedral, handled as I2(6)
    f.cox = {{1, 6}, {6, 1}};
  } else if (tok.rfind("I2(", 0) == 0 && tok.back() == ')') {
    std::string inner = tok.substr(3, tok.size() - 4);
    if (inner.empty() || !std::all_of(inner.begin(), inner.end(), [](char c) { return std::isdigit((unsigned char)c); }))
      throw CoxcellError("malformed factor '" + tok + "'");
    long long m = std::stoll(inner);
    if (m < 2 || m > 10000) throw CoxcellError("dihedral label out of range in '" + tok + "'");
    f.rank = 2; f.order = 2 * m;
    f.cox = {{1, (int)m}, {(int)m, 1}};
  } else if (tok[0] == 'A') {
    int n = num_after(1); chain(n); f.order = factorial(n + 1);
  } else if (tok[0] == 'B' || tok[0] == 'C') {
    int n = num_after(1); chain(n);
    if (n >= 2) f.cox[n - 2][n - 1] = f.cox[n - 1][n - 2] = 4;
    f.order = (1LL << n) * factorial(n);
  } else if (tok[0] == 'D') {
    int n = num_after(1);
    if (n < 2) throw CoxcellError("D requires rank >= 2");
    chain(n);
    if (n >= 3) {
      f.cox[n - 2][n - 1] = f.cox[n - 1][n - 2] = 2;
      f.cox[n - 3][n - 1] = f.cox[n - 1][n - 3] = 3;
    }
    f.order = (1LL << (n - 1)) * factorial(n);
  } else {
    throw CoxcellError("unrecognized factor '" + tok + "'");
  }
  if (f.order > (1LL << 62) / 4) throw CoxcellError("factor order overflow");
  return f;
}

void build_factor(Factor& f) {
  if (f.rank == 2 && f.cox[0][1] != 2) {
    enumerate_dihedral(f, f.cox[0][1]);
  } else if (f.rank == 1) {
    f.size = 2;
    f.right = {{1, 0}};
  } else if (f.rank == 2) {  // I2(2) = A1 x A1 as a single factor
    enumerate_dihedral(f, 2);
  } else {
    enumerate_by_roots(f);
  }
  if (f.size != f.order)
    throw CoxcellError("order mismatch for factor " + f.label);
}

// Derived per-factor data: lengths, inverses, left tables, ShortLex words.
struct FactorData {
  std::vector<int> length, inverse;
  std::vector<std::vector<int>> left;
  std::vector<std::vector<uint8_t>> word;  // canonical ShortLex
};

FactorData derive_factor_data(const Factor& f) {
  FactorData d;
  const int n = f.rank, N = f.size;
  d.length.assign(N, -1);
  std::vector<std::vector<uint8_t>> bfs_word(N);
  std::queue<int> q;
  d.length[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int w = q.front(); q.pop();
    for (int s = 0; s < n; ++s) {
      int u = f.right[s][w];
      if (d.length[u] < 0) {
        d.length[u] = d.length[w] + 1;
        bfs_word[u] = bfs_word[w];
        bfs_word[u].push_back((uint8_t)s);
        q.push(u);
      }
    }
  }
  d.inverse.assign(N, 0);
  for (int w = 0; w < N; ++w) {
    int r = 0;
    for (auto it = bfs_word[w].rbegin(); it != bfs_word[w].rend(); ++it) r = f.right[*it][r];
    d.inverse[w] = r;
  }
  d.left.assign(n, std::vector<int>(N));
  for (int s = 0; s < n; ++s)
    for (int w = 0; w < N; ++w)
      d.left[s][w] = d.inverse[f.right[s][d.inverse[w]]];

  // ShortLex word: least left descent first, recursively.
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d.length[a] < d.length[b]; });
  d.word.assign(N, {});
  for (int w : order) {
    if (w == 0) continue;
    for (int s = 0; s < n; ++s) {
      int u = d.left[s][w];
      if (d.length[u] < d.length[w]) {
        d.word[w].push_back((uint8_t)s);
        d.word[w].insert(d.word[w].end(), d.word[u].begin(), d.word[u].end());
        break;
      }
    }
  }
  return d;
}

}  // namespace

std::string CoxeterSystem::word_str(int w) const {
  if (w == identity) return "e";
  std::string out;
  bool dotted = rank > 9;
  for (size_t i = 0; i < word[w].size(); ++i) {
    if (dotted && i) out += '.';
    out += std::to_string((int)word[w][i] + 1);
  }
  return out;
}

std::optional<int> CoxeterSystem::parse_word(const std::string& text) const {
  if (text == "e" || text.empty()) return identity;
  std::vector<int> gens;
  if (text.find('.') != std::string::npos) {
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, '.')) {
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit((unsigned char)c); }))
        return std::nullopt;
      gens.push_back(std::stoi(piece) - 1);
    }
  } else {
    for (char c : text) {
      if (!std::isdigit((unsigned char)c) || c == '0') return std::nullopt;
      gens.push_back(c - '1');
    }
  }
  int r = identity;
  for (int s : gens) {
    if (s < 0 || s >= rank) return std::nullopt;
    r = right_mult[s][r];
  }
  return r;
}

CoxeterSystem parse_type(const std::string& spec, long long bound) {
  if (bound <= 0) throw CoxcellError("element bound must be positive");
  std::vector<Factor> factors;
  {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
      if (tok.empty()) throw CoxcellError("malformed type string '" + spec + "'");
      factors.push_back(parse_factor(tok));
    }
  }
  if (factors.empty()) throw CoxcellError("empty type string");

  long long total = 1;
  int rank = 0;
  for (const auto& f : factors) {
    if (total > bound / f.order + 1) throw CoxcellError("group order exceeds element bound");
    total *= f.order;
    rank += f.rank;
  }
  if (total > bound)
    throw CoxcellError("group order " + std::to_string(total) + " exceeds element bound " + std::to_string(bound));

  std::vector<FactorData> data;
  for (auto& f : factors) {
    build_factor(f);
    data.push_back(derive_factor_data(f));
  }

  CoxeterSystem W;
  W.rank = rank;
  W.size = (int)total;
  {
    std::string norm;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) norm += 'x';
      norm += factors[i].label;
    }
    W.type_string = norm;
  }
  W.coxeter_matrix.assign(rank, std::vector<int>(rank, 2));
  {
    int off = 0;
    for (const auto& f : factors) {
      for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.rank; ++j) W.coxeter_matrix[off + i][off + j] = f.cox[i][j];
      off += f.rank;
    }
  }

  // Raw index = mixed-radix tuple over factors; final ids are the ShortLex
  // sort of those tuples (the canonical word of a product element is the
  // concatenation of the factor words, factor generators coming first).
  const int k = (int)factors.size();
  std::vector<int> stride(k, 1), gen_off(k, 0);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].size;
  for (int i = 1; i < k; ++i) gen_off[i] = gen_off[i - 1] + factors[i - 1].rank;

  std::vector<int> raw_len(W.size, 0);
  std::vector<std::vector<uint8_t>> raw_word(W.size);
  for (int raw = 0; raw < W.size; ++raw) {
    int r = raw;
    for (int i = 0; i < k; ++i) {
      int c = r / stride[i];
      r %= stride[i];
      raw_len[raw] += data[i].length[c];
      for (uint8_t s : data[i].word[c]) raw_word[raw].push_back((uint8_t)(s + gen_off[i]));
    }
  }
  std::vector<int> order(W.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (raw_len[a] != raw_len[b]) return raw_len[a] < raw_len[b];
    return raw_word[a] < raw_word[b];
  });
  std::vector<int> id_of_raw(W.size);
  for (int id = 0; id < W.size; ++id) id_of_raw[order[id]] = id;

  W.length.resize(W.size);
  W.word.resize(W.size);
  W.inverse.resize(W.size);
  W.left_mult.assign(rank, std::vector<int>(W.size));
  W.right_mult.assign(rank, std::vector<int>(W.size));
  W.left_desc.assign(W.size, 0);
  W.right_desc.assign(W.size, 0);

  std::vector<int> comp(k);
  for (int raw = 0; raw < W.size; ++raw) {
    int id = id_of_raw[raw];
    W.length[id] = raw_len[raw];
    W.word[id] = raw_word[raw];
    int r = raw;
    int inv_raw = 0;
    for (int i = 0; i < k; ++i) {
      comp[i] = r / stride[i];
      r %= stride[i];
      inv_raw += data[i].inverse[comp[i]] * stride[i];
    }
    W.inverse[id] = id_of_raw[inv_raw];
    for (int i = 0; i < k; ++i) {
      for (int s = 0; s < factors[i].rank; ++s) {
        int g = gen_off[i] + s;
        int rm = raw + (factors[i].right[s][comp[i]] - comp[i]) * stride[i];
        int lm = raw + (data[i].left[s][comp[i]] - comp[i]) * stride[i];
        W.right_mult[g][id] = id_of_raw[rm];
        W.left_mult[g][id] = id_of_raw[lm];
        if (raw_len[rm] < raw_len[raw]) W.right_desc[id] |= 1u << g;
        if (raw_len[lm] < raw_len[raw]) W.left_desc[id] |= 1u << g;
      }
    }
  }

  W.nu = *std::max_element(W.length.begin(), W.length.end());
  int longest_count = 0;
  for (int w = 0; w < W.size; ++w)
    if (W.length[w] == W.nu) { W.w_max = w; ++longest_count; }
  if (longest_count != 1) throw CoxcellError("longest element is not unique");
  return W;
}

}  // namespace coxcell
