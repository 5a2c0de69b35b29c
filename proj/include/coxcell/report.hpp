#pragma once

#include "coxcell/truncated.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace coxcell {

using json = nlohmann::ordered_json;

/// JSON encoding of a Laurent polynomial: {"k": c} with string-keyed
/// exponents; coefficients as integers when they fit, decimal strings
/// otherwise.
json laurent_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

/// Report builders.  All element references are printed as ShortLex words,
/// all containers are emitted in a fixed sorted order, so every report is
/// byte-identical across runs.
json cells_report(const CoxeterSystem& W, const HeckeAlgebra& H, const CellDecomposition& cells,
                  const GammaTable& g);
json jtable_report(const CoxeterSystem& W, const CellDecomposition& cells, const GammaTable& g,
                   int cell);
json truncated_report(const TruncContext& ctx, const std::string& sub);
json kl_export_report(const CoxeterSystem& W, const HeckeAlgebra& H);

/// Render a report in one of the output formats (json | csv | text).
/// CSV flattens nested values into "path,value" rows with polynomials in
/// the "c*v^k ± ..." string form; text is an indented listing.
std::string render_report(const json& rep, const std::string& format);

}  // namespace coxcell
