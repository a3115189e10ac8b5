#include "gca/fixture_gen.hpp"

#include <algorithm>

#include "gca/errors.hpp"
#include "gca/ideals.hpp"
#include "gca/tails.hpp"

namespace gca {

ExmClassSpec ExmClassSpec::from_json(const nlohmann::json& j) {
  ExmClassSpec spec;
  if (!j.is_object() || !j.contains("rows") || !j.contains("components"))
    throw InvalidSpec("fixture spec needs \"rows\" and \"components\"");
  for (const auto& k : j.at("rows")) {
    if (!k.is_number_integer() || k.get<int>() <= 0)
      throw InvalidSpec("row sizes must be positive integers");
    spec.rows.push_back(k.get<int>());
  }
  for (const auto& c : j.at("components")) {
    if (!c.is_string()) throw InvalidSpec("components must be DSL strings");
    spec.components.push_back(c.get<std::string>());
  }
  if (j.contains("row_edges")) {
    for (const auto& mat : j.at("row_edges")) {
      std::vector<std::vector<Mult>> m;
      for (const auto& row : mat) {
        std::vector<Mult> r;
        for (const auto& e : row) {
          if (e.is_string() && e.get<std::string>() == "inf")
            r.push_back(Mult::inf());
          else if (e.is_number_integer() && e.get<std::int64_t>() >= 0)
            r.push_back(Mult(e.get<std::uint64_t>()));
          else
            throw InvalidSpec("row edge multiplicities must be naturals or \"inf\"");
        }
        m.push_back(std::move(r));
      }
      spec.row_edges.push_back(std::move(m));
    }
  }
  return spec;
}

namespace {

// The component may not carry a nontrivial hereditary and saturated subset,
// and must be loop-free or satisfy condition (K).
void validate_component(const Graph& c, int index) {
  std::string where = "component " + std::to_string(index + 1);
  if (c.size() == 0) throw InvalidSpec(where + " is empty");
  bool loop_free = true;
  for (int v = 0; v < c.size(); ++v)
    if (c.loop_class(v) != LoopClass::zero) loop_free = false;
  if (!loop_free && !c.condition_k())
    throw InvalidSpec(where + " has a loop but not condition (K)");
  for (VMask H = 1; H < c.all(); ++H)
    if (is_hereditary(c, H) && is_saturated(c, H))
      throw InvalidSpec(where + " has a nontrivial hereditary saturated subset");
}

}  // namespace

Graph gen_fixture(const ExmClassSpec& spec, int bound) {
  const int n = static_cast<int>(spec.rows.size());
  if (n == 0) throw InvalidSpec("at least one row is required");
  if (static_cast<int>(spec.components.size()) != n)
    throw InvalidSpec("need exactly one component per row");
  if (static_cast<int>(spec.row_edges.size()) != n - 1)
    throw InvalidSpec("need exactly one multiplicity matrix between consecutive rows");

  std::vector<std::string> names;
  std::vector<std::tuple<int, int, Mult>> edges;
  std::vector<std::vector<int>> row_vertex(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < spec.rows[i]; ++j) {
      row_vertex[i].push_back(static_cast<int>(names.size()));
      names.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }

  for (int i = 0; i + 1 < n; ++i) {
    const auto& mat = spec.row_edges[i];
    if (static_cast<int>(mat.size()) != spec.rows[i])
      throw InvalidSpec("multiplicity matrix has wrong row count");
    for (int a = 0; a < spec.rows[i]; ++a) {
      if (static_cast<int>(mat[a].size()) != spec.rows[i + 1])
        throw InvalidSpec("multiplicity matrix has wrong column count");
      bool emits = false;
      for (int b = 0; b < spec.rows[i + 1]; ++b)
        if (!mat[a][b].is_zero()) {
          emits = true;
          edges.emplace_back(row_vertex[i][a], row_vertex[i + 1][b], mat[a][b]);
        }
      if (!emits)
        throw InvalidSpec("every row vertex must emit into the next row");
    }
    for (int b = 0; b < spec.rows[i + 1]; ++b) {
      bool reached = false;
      for (int a = 0; a < spec.rows[i]; ++a) reached = reached || !mat[a][b].is_zero();
      if (!reached)
        throw InvalidSpec("every row vertex must be reached from the previous row");
    }
  }

  std::vector<int> component_first(n);
  std::vector<VMask> component_mask(n, 0);
  for (int i = 0; i < n; ++i) {
    Graph c = Graph::parse(spec.components[i]);
    validate_component(c, i);
    std::string prefix = "g" + std::to_string(i + 1) + "_";
    component_first[i] = static_cast<int>(names.size());
    int base = static_cast<int>(names.size());
    for (int v = 0; v < c.size(); ++v) {
      component_mask[i] |= vbit(static_cast<int>(names.size()));
      names.push_back(prefix + c.name(v));
    }
    for (int s = 0; s < c.size(); ++s)
      for (int r = 0; r < c.size(); ++r)
        if (!c.mult(s, r).is_zero())
          edges.emplace_back(base + s, base + r, c.mult(s, r));
    // The single connector edge from each row vertex into the component.
    for (int v : row_vertex[i]) edges.emplace_back(v, component_first[i], Mult(1));
  }

  if (names.size() > 64) throw TooLarge("generated fixture exceeds 64 vertices");
  Graph g = Graph::build(std::move(names), std::move(edges));

  // Postcondition: the tails are exactly M_k = rows 1..k united with G_k.
  std::vector<VMask> expected;
  VMask rows_so_far = 0;
  for (int k = 0; k < n; ++k) {
    for (int v : row_vertex[k]) rows_so_far |= vbit(v);
    expected.push_back(rows_so_far | component_mask[k]);
  }
  std::vector<VMask> actual;
  for (const auto& M : maximal_tails(g, std::max(bound, g.size()))) actual.push_back(M.vertices);
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual)
    throw InvalidSpec("generated graph does not realize the expected tail pattern");
  return g;
}

}  // namespace gca
