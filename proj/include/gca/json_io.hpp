#pragma once

#include <string>

#include <json.hpp>

#include "gca/classify.hpp"
#include "gca/graph.hpp"
#include "gca/ideals.hpp"
#include "gca/primtop.hpp"
#include "gca/tails.hpp"

namespace gca {

using json = nlohmann::json;

json vertex_list_json(const Graph& g, VMask m);
json tail_json(const Graph& g, const MaximalTail& t);
json ideal_json(const Graph& g, const Ideal& I);
json graph_json(const Graph& g);
json prim_subset_json(const Graph& g, const PrimSubset& s);
json t1_verdict_json(const Graph& g, const T1Verdict& v);
json clopen_report_json(const Graph& g, const std::vector<ClopenEntry>& rep);
json decomposition_json(const Graph& g, const DecompositionReport& rep);
json quotient_json(const Graph& g, const QuotientReport& rep);
json c_ntilde_json(const Graph& g, const std::vector<Fiber>& fibers);

// Parses {"gamma": [...], "bv": [...], "tau": [...]} against g; missing keys
// mean empty parts. Throws InvalidSubset / UnknownVertex.
PrimSubset prim_subset_from_json(const Graph& g, const json& j);

// DOT rendering; INF multiplicities are labeled with the infinity sign.
// When color_by_tails is set, vertices are shaded by how many maximal tails
// contain them.
std::string export_dot(const Graph& g, bool color_by_tails = false,
                       int bound = kDefaultBound);

}  // namespace gca
