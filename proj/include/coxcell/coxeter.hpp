#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcell {

class CoxcellError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite Coxeter group, fully enumerated.  Elements carry dense ids
/// 0..size-1 assigned in ShortLex order (by length, then lexicographically
/// by the canonical reduced word under the generator order of the type
/// string); id 0 is the identity.  Immutable after construction.
struct CoxeterSystem {
  std::string type_string;                      // normalized spec, e.g. "A3xI2(7)"
  int rank = 0;
  std::vector<std::vector<int>> coxeter_matrix; // m_st, m_ss = 1
  int size = 0;

  std::vector<std::vector<int>> left_mult;      // [s][w] -> s*w
  std::vector<std::vector<int>> right_mult;     // [s][w] -> w*s
  std::vector<int> length;
  std::vector<int> inverse;
  std::vector<std::vector<uint8_t>> word;       // canonical ShortLex reduced word
  std::vector<uint32_t> left_desc;              // descent bitsets
  std::vector<uint32_t> right_desc;

  int nu = 0;                                   // length of the longest element
  int w_max = 0;

  static constexpr int identity = 0;

  /// Group product by folding a reduced word of u through the right tables.
  int mul(int w, int u) const {
    int r = w;
    for (uint8_t s : word[u]) r = right_mult[s][r];
    return r;
  }

  bool is_left_descent(int s, int w) const { return (left_desc[w] >> s) & 1u; }
  bool is_right_descent(int s, int w) const { return (right_desc[w] >> s) & 1u; }

  /// Bruhat order via the lifting property along the canonical word of w.
  bool bruhat_leq(int y, int w) const {
    while (w != identity) {
      int s = word[w][0];
      w = left_mult[s][w];
      if (is_left_descent(s, y)) y = left_mult[s][y];
    }
    return y == identity;
  }

  void check_id(int w) const {
    if (w < 0 || w >= size) throw CoxcellError("element id out of range");
  }

  /// "e" for the identity, else generator numbers 1-based, '.'-separated
  /// when the rank exceeds 9.
  std::string word_str(int w) const;
  /// Inverse of word_str; also accepts '.'-separated words for any rank.
  std::optional<int> parse_word(const std::string& text) const;
};

/// Grammar: TYPE := FACTOR ("x" FACTOR)*;
/// FACTOR := ("A"|"B"|"D") n | "I2(" m ")" | "H3" | "H4" | "F4" | "G2".
/// Throws CoxcellError on malformed specs, non-finite input, or when the
/// group order exceeds `bound`.
CoxeterSystem parse_type(const std::string& spec, long long bound = 20000);

}  // namespace coxcell
