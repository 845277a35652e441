#pragma once

#include <vector>

#include <json.hpp>

#include "antiramsey/audit.hpp"
#include "antiramsey/coloring.hpp"
#include "antiramsey/decompose.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/experiments.hpp"
#include "antiramsey/report.hpp"

// JSON documents written and read by the command-line tool. Rationals are
// always "p/q" strings.
namespace antiramsey::io {

using nlohmann::json;

/// {"m","k","K","order":[...],"layers":{"<i>":[edge ids]},"residual":[edge ids]}
json decomposition_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& doc);

/// {"m","k","K","r","guarantee","edges":[{"id","u","v","layer","color"}],
///  "palettes":{"F_<i>"|"residual":{"first","count"}}}
json coloring_json(const Graph& g, const EdgeColoring& c);
/// Throws InputError if the document does not describe exactly the edges of g.
EdgeColoring coloring_from_json(const json& doc, const Graph& g);
/// Rebuilds the layer structure recorded in a colouring (order left empty).
Decomposition decomposition_from_coloring(const EdgeColoring& c);

json witness_json(const DensityWitness& w);
json report_json(const Report& r);
json embedding_json(const Embedding& e);
json violations_json(const std::vector<RainbowViolation>& v);
json trial_rate_json(const TrialRate& r, int n);
/// Aggregate counts for one sweep point.
json sweep_summary_json(const TrialConfig& cfg, const std::vector<TrialRecord>& records);

json parse_json_text(std::string_view text);
json read_json_file(const std::filesystem::path& path);

}  // namespace antiramsey::io
