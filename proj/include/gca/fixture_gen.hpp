#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gca/graph.hpp"
#include "gca/multiplicity.hpp"

namespace gca {

// Truncated staircase construction: n rows of connector vertices w_i^j with
// multiplicity maps between consecutive rows, one attached component graph
// per row (each with no nontrivial hereditary and saturated subsets), and a
// single connector edge from every row vertex into its row's component.
struct ExmClassSpec {
  std::vector<int> rows;  // sizes k_1..k_n
  // n-1 matrices; row_edges[i][a][b] = multiplicity from w_{i+1}^{a+1} to
  // w_{i+2}^{b+1}; zero means no edge.
  std::vector<std::vector<std::vector<Mult>>> row_edges;
  std::vector<std::string> components;  // graph DSL per row

  static ExmClassSpec from_json(const nlohmann::json& j);
};

// Builds the truncation and asserts the expected tail pattern
// M_k = rows 1..k united with component k. Throws InvalidSpec.
Graph gen_fixture(const ExmClassSpec& spec, int bound = kDefaultBound);

}  // namespace gca
