#include "coxcell/report.hpp"

#include <limits>
#include <sstream>

namespace coxcell {

namespace {
json bigint_json(const BigInt& c) {
  if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
    return (int64_t)c;
  return c.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<int64_t>());
}
}  // namespace

json laurent_json(const Laurent& p) {
  json j = json::object();
  for (const auto& [k, c] : p.terms()) j[std::to_string(k)] = bigint_json(c);
  return j;
}

Laurent laurent_from_json(const json& j) {
  Laurent p;
  for (const auto& [k, c] : j.items()) p.add_term(std::stoi(k), bigint_from_json(c));
  return p;
}

json cells_report(const CoxeterSystem& W, const HeckeAlgebra& H, const CellDecomposition& cells,
                  const GammaTable& g) {
  json rep;
  rep["type"] = W.type_string;
  rep["order"] = W.size;
  rep["nu"] = W.nu;
  rep["kl_entries_computed"] = H.kl_computed();
  rep["n_two_sided_cells"] = cells.n_cells();
  rep["n_left_cells"] = (int)cells.left_cells.size();
  rep["n_right_cells"] = (int)cells.right_cells.size();
  json cj = json::array();
  for (int c = 0; c < cells.n_cells(); ++c) {
    json one;
    one["index"] = c;
    one["a"] = cells.a_value[c];
    one["size"] = (int)cells.cells[c].size();
    json members = json::array(), dist = json::array(), c0 = json::array();
    for (int w : cells.cells[c]) members.push_back(W.word_str(w));
    for (int d : cells.distinguished[c]) dist.push_back(W.word_str(d));
    for (int z : cells.c0[c]) c0.push_back(W.word_str(z));
    one["members"] = members;
    one["distinguished"] = dist;
    one["c0"] = c0;
    int nlc = 0;
    for (const auto& lc : cells.left_cells)
      if (cells.cell_of[lc[0]] == c) ++nlc;
    one["n_left_cells"] = nlc;
    cj.push_back(one);
  }
  rep["two_sided_cells"] = cj;
  json order = json::array();
  for (int i = 0; i < cells.n_cells(); ++i)
    for (int j2 = 0; j2 < cells.n_cells(); ++j2)
      if (i != j2 && cells.cell_leq[i][j2]) order.push_back(json::array({i, j2}));
  rep["cell_order_leq"] = order;
  return rep;
}

json jtable_report(const CoxeterSystem& W, const CellDecomposition& cells, const GammaTable& g,
                   int cell) {
  json rep;
  rep["type"] = W.type_string;
  rep["cell"] = cell;
  rep["a"] = cells.a_value[cell];
  json rows = json::array();
  for (int x : cells.cells[cell])
    for (int y : cells.cells[cell])
      for (const auto& [z, gv] : g.product_row(x, y))
        rows.push_back(json::array({W.word_str(x), W.word_str(y), W.word_str(z), gv}));
  rep["gamma"] = rows;
  return rep;
}

json truncated_report(const TruncContext& ctx, const std::string& sub) {
  const CoxeterSystem& W = ctx.jring().system();
  json rep;
  rep["type"] = W.type_string;
  rep["cell"] = ctx.cell();
  rep["a"] = ctx.a();
  rep["subcommand"] = sub;
  if (sub == "psix") {
    json t = json::object();
    for (int x : ctx.members()) {
      json row = json::object();
      for (const auto& [z, n] : ctx.psi_x(x)) row[W.word_str(z)] = n;
      t[W.word_str(x)] = row;
    }
    rep["psi_x"] = t;
  } else if (sub == "dimhom") {
    json elems = json::array();
    for (int z : ctx.members()) elems.push_back(W.word_str(z));
    rep["elements"] = elems;
    json mat = json::array();
    for (int z : ctx.members()) {
      json row = json::array();
      for (int u : ctx.members()) row.push_back(ctx.dim_hom(z, u));
      mat.push_back(row);
    }
    rep["dim_hom"] = mat;
  } else if (sub == "circle") {
    json t = json::object();
    for (int x : ctx.c0()) {
      json rowj = json::object();
      for (int y : ctx.c0()) {
        JElement prod = ctx.circle(ctx.jring().t(x), ctx.jring().t(y));
        json cellj = json::object();
        for (const auto& [z, n] : prod.terms) cellj[W.word_str(z)] = n;
        rowj[W.word_str(y)] = cellj;
      }
      t[W.word_str(x)] = rowj;
    }
    rep["circle"] = t;
  } else if (sub == "convmult") {
    json rows = json::array();
    for (int x : ctx.members())
      for (int y : ctx.members())
        for (int w : ctx.members()) {
          long long n = ctx.conv_multiplicity({x, y}, w);
          if (n != 0)
            rows.push_back(json::array({W.word_str(x), W.word_str(y), W.word_str(w), n}));
        }
    rep["conv_multiplicity_r2"] = rows;
  } else {
    throw CoxcellError("unknown truncated subcommand: " + sub);
  }
  return rep;
}

json kl_export_report(const CoxeterSystem& W, const HeckeAlgebra& H) {
  json rep;
  rep["type"] = W.type_string;
  rep["order"] = W.size;
  json entries = json::array();
  for (int w = 0; w < W.size; ++w)
    for (const auto& [y, p] : H.c_basis(w))
      if (y != w) entries.push_back(json::array({W.word_str(y), W.word_str(w), laurent_json(p)}));
  rep["kl_polynomials"] = entries;
  return rep;
}

namespace {
// Polynomial encodings are integer-keyed objects; to stay distinguishable
// from word-keyed multiplicity maps (whose keys are words like "12", never
// "0" or negative) we require an exponent <= 0, which every polynomial
// emitted in a report has.
bool looks_like_laurent(const json& j) {
  if (!j.is_object() || j.empty()) return false;
  bool nonpositive = false;
  for (const auto& [k, c] : j.items()) {
    if (!(c.is_number_integer() || c.is_string())) return false;
    size_t pos = 0;
    int exp = 0;
    try {
      exp = std::stoi(k, &pos);
    } catch (...) {
      return false;
    }
    if (pos != k.size()) return false;
    if (exp <= 0) nonpositive = true;
  }
  return nonpositive;
}

std::string scalar_str(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten_csv(const json& j, const std::string& path, std::ostringstream& out) {
  if (looks_like_laurent(j)) {
    out << path << "," << laurent_from_json(j).str() << "\n";
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_csv(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      out << path;
      for (const auto& v : j) out << "," << scalar_str(v);
      out << "\n";
    } else {
      int i = 0;
      for (const auto& v : j) flatten_csv(v, path + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << path << "," << scalar_str(j) << "\n";
  }
}

void render_text(const json& j, int indent, std::ostringstream& out) {
  std::string pad(indent, ' ');
  if (looks_like_laurent(j)) {
    out << laurent_from_json(j).str() << "\n";
  } else if (j.is_object()) {
    out << "\n";
    for (const auto& [k, v] : j.items()) {
      out << pad << k << ": ";
      render_text(v, indent + 2, out);
    }
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      out << "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << " ";
        out << scalar_str(v);
        first = false;
      }
      out << "]\n";
    } else {
      out << "\n";
      for (const auto& v : j) {
        out << pad << "- ";
        render_text(v, indent + 2, out);
      }
    }
  } else {
    out << scalar_str(j) << "\n";
  }
}
}  // namespace

std::string render_report(const json& rep, const std::string& format) {
  if (format == "json") return rep.dump(2) + "\n";
  std::ostringstream out;
  if (format == "csv") {
    flatten_csv(rep, "", out);
    return out.str();
  }
  if (format == "text") {
    render_text(rep, 0, out);
    return out.str();
  }
  throw CoxcellError("unknown output format: " + format);
}

}  // namespace coxcell
