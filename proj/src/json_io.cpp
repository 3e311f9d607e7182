#include "pgraphon/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pgraphon/errors.hpp"

namespace pgraphon {

double parse_real(const Json& j) {
    double v;
    if (j.is_number()) {
        v = j.get<double>();
    } else if (j.is_string()) {
        try {
            std::size_t used = 0;
            const std::string s = j.get<std::string>();
            v = std::stod(s, &used);
            if (used != s.size()) throw InputError("trailing junk in real: '" + s + "'");
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("not a real number: '" + j.get<std::string>() + "'");
        }
    } else {
        throw InputError("expected a real number (or decimal string)");
    }
    if (!std::isfinite(v)) throw InputError("NaN and infinite reals are rejected");
    return v;
}

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<double> parse_real_vector(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of reals");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(parse_real(x));
    return out;
}

WeightSpacePtr space_of(const Json& j, const WeightSpacePtr& fallback, const char* what) {
    if (j.is_object() && j.contains("space")) return parse_weight_space(j.at("space"));
    if (fallback) return fallback;
    throw InputError(std::string(what) + " needs a 'space' (inline or from the surrounding document)");
}

}  // namespace

WeightSpacePtr parse_weight_space(const Json& j) {
    const auto& pts = require(j, "points");
    if (!pts.is_array() || pts.empty()) throw InputError("'points' must be a nonempty array");
    std::vector<std::string> points;
    for (const auto& p : pts)
        points.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    const auto& met = require(j, "metric");
    if (!met.is_array()) throw InputError("'metric' must be a matrix");
    std::vector<std::vector<double>> metric;
    for (const auto& row : met) metric.push_back(parse_real_vector(row));
    std::optional<int> cemetery;
    if (j.contains("cemetery") && !j.at("cemetery").is_null())
        cemetery = j.at("cemetery").get<int>();
    return make_space(std::move(points), std::move(metric), cemetery);
}

Json weight_space_to_json(const WeightSpace& space) {
    Json j;
    j["points"] = space.points();
    j["metric"] = space.metric();
    j["cemetery"] = space.cemetery() ? Json(*space.cemetery()) : Json(nullptr);
    return j;
}

SignedMeasure parse_measure(const Json& j, WeightSpacePtr fallback) {
    const auto space = space_of(j, fallback, "measure");
    return SignedMeasure(space, parse_real_vector(require(j, "mass")));
}

Json measure_to_json(const SignedMeasure& mu, bool inline_space) {
    Json j;
    if (inline_space) j["space"] = weight_space_to_json(*mu.space);
    j["mass"] = mu.mass;
    return j;
}

StepGraphon parse_graphon(const Json& j, WeightSpacePtr fallback) {
    const auto space = space_of(j, fallback, "graphon");
    const auto& lens = require(j, "lengths");
    if (!lens.is_array() || lens.empty()) throw InputError("'lengths' must be a nonempty array");
    std::vector<Rational> lengths;
    for (const auto& l : lens) {
        if (l.is_string())
            lengths.push_back(parse_rational(l.get<std::string>()));
        else if (l.is_number_integer())
            lengths.push_back(Rational(l.get<std::int64_t>()));
        else
            throw InputError("lengths must be exact rational strings like \"1/3\"");
    }
    const auto& cells_json = require(j, "cells");
    if (!cells_json.is_array() || cells_json.size() != lengths.size())
        throw InputError("'cells' must be a k x k matrix of measures");
    std::vector<SignedMeasure> cells;
    for (const auto& row : cells_json) {
        if (!row.is_array() || row.size() != lengths.size())
            throw InputError("'cells' must be a k x k matrix of measures");
        for (const auto& c : row) cells.push_back(parse_measure(c, space));
    }
    const GraphonKind kind = j.contains("kind")
                                 ? kind_from_name(j.at("kind").get<std::string>())
                                 : GraphonKind::Probability;
    return StepGraphon(space, std::move(lengths), std::move(cells), kind);
}

Json graphon_to_json(const StepGraphon& w) {
    Json j;
    j["space"] = weight_space_to_json(*w.space());
    Json lens = Json::array();
    for (const auto& l : w.lengths()) lens.push_back(rational_to_string(l));
    j["lengths"] = std::move(lens);
    Json rows = Json::array();
    for (int i = 0; i < w.block_count(); ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < w.block_count(); ++jj) row.push_back(measure_to_json(w.cell(i, jj)));
        rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
    j["kind"] = kind_name(w.kind());
    return j;
}

SampledGraph parse_graph(const Json& j, WeightSpacePtr fallback) {
    const auto space = space_of(j, fallback, "graph");
    const int n = require(j, "n").get<int>();
    const auto& wj = require(j, "weights");
    if (!wj.is_array() || static_cast<int>(wj.size()) != n)
        throw InputError("'weights' must be an n x n index matrix");
    std::vector<int> weights;
    for (const auto& row : wj) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("'weights' must be an n x n index matrix");
        for (const auto& x : row) weights.push_back(x.get<int>());
    }
    const bool symmetric = j.contains("symmetric") && j.at("symmetric").get<bool>();
    return SampledGraph(space, n, std::move(weights), symmetric);
}

Json graph_to_json(const SampledGraph& g) {
    Json j;
    j["space"] = weight_space_to_json(*g.space);
    j["n"] = g.n;
    Json rows = Json::array();
    for (int i = 0; i < g.n; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < g.n; ++jj) row.push_back(g.weight(i, jj));
        rows.push_back(std::move(row));
    }
    j["weights"] = std::move(rows);
    j["symmetric"] = g.symmetric;
    return j;
}

DecoratedGraph parse_decorated_graph(const Json& j, const TestFamilyPtr& family_for_indices) {
    const int v = require(j, "v").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edges must be [i, j] pairs");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    const auto& dec = require(j, "decorations");
    if (dec.is_object() && dec.contains("family_indices")) {
        if (!family_for_indices)
            throw InputError("family_indices decorations need a test family in context");
        std::vector<int> indices;
        for (const auto& i : dec.at("family_indices")) indices.push_back(i.get<int>());
        return DecoratedGraph::from_family(v, std::move(edges), indices, *family_for_indices);
    }
    if (!dec.is_array()) throw InputError("'decorations' must be an array or {family_indices}");
    std::vector<std::vector<double>> decorations;
    for (const auto& d : dec) decorations.push_back(parse_real_vector(d));
    return DecoratedGraph(v, std::move(edges), std::move(decorations));
}

Json witness_to_json(const CutWitness& wit) {
    Json j;
    j["rows"] = wit.rows;
    j["cols"] = wit.cols;
    j["signs"] = wit.signs;
    j["value"] = wit.value;
    return j;
}

Json load_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace pgraphon
