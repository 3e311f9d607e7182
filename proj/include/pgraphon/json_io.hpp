#ifndef PGRAPHON_JSON_IO_HPP
#define PGRAPHON_JSON_IO_HPP

#include <json.hpp>

#include "pgraphon/cut_norm.hpp"
#include "pgraphon/graphs.hpp"
#include "pgraphon/hom_density.hpp"
#include "pgraphon/step_graphon.hpp"

namespace pgraphon {

using Json = nlohmann::json;

/// Reals arrive as numbers or decimal strings; NaN and infinities are
/// rejected everywhere.
double parse_real(const Json& j);

WeightSpacePtr parse_weight_space(const Json& j);
Json weight_space_to_json(const WeightSpace& space);

/// `fallback` supplies the space when the measure object has none inline.
SignedMeasure parse_measure(const Json& j, WeightSpacePtr fallback = nullptr);
Json measure_to_json(const SignedMeasure& mu, bool inline_space = false);

StepGraphon parse_graphon(const Json& j, WeightSpacePtr fallback = nullptr);
Json graphon_to_json(const StepGraphon& w);

SampledGraph parse_graph(const Json& j, WeightSpacePtr fallback = nullptr);
Json graph_to_json(const SampledGraph& g);

DecoratedGraph parse_decorated_graph(const Json& j, const TestFamilyPtr& family_for_indices);
Json witness_to_json(const CutWitness& wit);

/// Reads a whole JSON document from a file ("-" for standard input).
Json load_json(const std::string& path);

}  // namespace pgraphon

#endif
