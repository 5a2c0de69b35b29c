#include "coxcell/truncated.hpp"

#include <algorithm>

namespace coxcell {

bool TruncContext::in_c0(int w) const {
  const auto& z0 = c0();
  return std::binary_search(z0.begin(), z0.end(), w);
}

void TruncContext::require_cell(int w, const char* what) const {
  if (!in_cell(w))
    throw CoxcellError(std::string(what) + ": element " + J_.system().word_str(w) +
                       " is not in the selected two-sided cell");
}

void TruncContext::require_c0(int w, const char* what) const {
  require_cell(w, what);
  if (!in_c0(w))
    throw CoxcellError(std::string(what) + ": element " + J_.system().word_str(w) +
                       " is not in c0");
}

std::map<int, long long> TruncContext::psi_x(int x) const {
  require_cell(x, "psi_x");
  const auto& W = J_.system();
  JElement acc;
  JElement tx = J_.t(x);
  for (int y : members()) acc = sum_into(acc, J_.mul(J_.mul(J_.t(y), tx), J_.t(W.inverse[y])));
  for (const auto& [z, c] : acc.terms) {
    if (c < 0)
      throw CoxcellError("negative psi_x multiplicity at " + W.word_str(z) +
                         " for x = " + W.word_str(x));
    if (!in_cell(z)) throw CoxcellError("psi_x support left the cell");
  }
  return acc.terms;
}

long long TruncContext::dim_hom(int z, int u) const {
  require_cell(z, "dim_hom");
  require_cell(u, "dim_hom");
  const auto& W = J_.system();
  long long total = 0;
  JElement tz = J_.t(z), tui = J_.t(W.inverse[u]);
  for (int y : members())
    total += J_.tau(J_.mul(J_.mul(J_.mul(J_.t(W.inverse[y]), tz), J_.t(y)), tui));
  if (total < 0) throw CoxcellError("negative Hom dimension");
  return total;
}

long long TruncContext::conv_multiplicity(const std::vector<int>& ws, int w) const {
  if (ws.empty()) throw CoxcellError("conv_multiplicity requires at least one factor");
  for (int wi : ws) require_cell(wi, "conv_multiplicity");
  require_cell(w, "conv_multiplicity");
  JElement acc = J_.t(ws[0]);
  for (size_t i = 1; i < ws.size(); ++i) acc = J_.mul(acc, J_.t(ws[i]));
  long long n = acc.coeff(w);
  if (n < 0) throw CoxcellError("negative convolution multiplicity");
  return n;
}

JElement TruncContext::circle(const JElement& xi, const JElement& xi2) const {
  for (const auto& [w, c] : xi.terms) require_c0(w, "circle");
  for (const auto& [w, c] : xi2.terms) require_c0(w, "circle");
  const auto& W = J_.system();
  JElement acc;
  for (int y : members())
    acc = sum_into(acc, J_.mul(J_.mul(J_.mul(xi, J_.t(y)), xi2), J_.t(W.inverse[y])));
  for (const auto& [z, c] : acc.terms)
    if (!in_c0(z))
      throw CoxcellError("circle product support left J_0 at " + W.word_str(z));
  return acc;
}

std::map<int, long long> TruncContext::conv_ring_decomposition(int z, int u) const {
  require_c0(z, "conv_ring_decomposition");
  require_c0(u, "conv_ring_decomposition");
  const auto& W = J_.system();
  JElement acc;
  JElement tu = J_.t(u), tz = J_.t(z);
  for (int y : members())
    acc = sum_into(acc, J_.mul(J_.mul(J_.mul(tu, J_.t(y)), tz), J_.t(W.inverse[y])));
  for (const auto& [r, c] : acc.terms) {
    if (c < 0) throw CoxcellError("negative decomposition multiplicity at " + W.word_str(r));
    if (!in_c0(r)) throw CoxcellError("decomposition support left c0 at " + W.word_str(r));
  }
  return acc.terms;
}

}  // namespace coxcell
