#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gca/multiplicity.hpp"

namespace gca {

// Vertex subsets are bitmasks over vertex indices; graphs hold at most 64
// vertices (analyses are further bounded, default 16).
using VMask = std::uint64_t;

constexpr VMask vbit(int i) { return VMask{1} << i; }
constexpr bool has(VMask m, int i) { return (m >> i) & 1; }
inline int popcount(VMask m) { return std::popcount(m); }

inline constexpr int kDefaultBound = 16;

enum class LoopClass { zero, one, many };

struct VertexProfile {
  bool is_sink;
  bool is_infinite_emitter;
  LoopClass simple_loop_class;
};

// Finitely presented directed multigraph: parallel edges are stored as
// multiplicities m(source, range) in N u {INF}. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Parses the graph DSL: `vertex <id>`, `<id> -> <id> x<k>`, `x inf`/`xinf`,
  // `#` comments. Edge endpoints are declared implicitly.
  static Graph parse(std::string_view text);

  // Direct construction, used by the fixture generator and induced subgraphs.
  static Graph build(std::vector<std::string> names,
                     std::vector<std::tuple<int, int, Mult>> edges);

  // Canonical DSL text; parse(render(g)) == g.
  std::string render() const;

  int size() const { return static_cast<int>(names_.size()); }
  VMask all() const {
    return size() == 64 ? ~VMask{0} : (VMask{1} << size()) - 1;
  }
  const std::string& name(int v) const { return names_[v]; }
  // Throws UnknownVertex.
  int index(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  Mult mult(int s, int r) const { return adj_[s][r]; }

  // v >= w: reflexive-transitive reachability.
  bool reaches(int v, int w) const;
  // All w with v >= w, as a mask (includes v).
  VMask reach_set(int v) const;
  // All v with v >= w for some w in S.
  VMask reachers_of(VMask S) const;

  // Sum over w in S of m(v, w), INF-absorbing.
  Mult count_into(int v, VMask S) const;
  // Sum over v in from of count_into(v, S).
  Mult count_from_into(VMask from, VMask S) const;
  Mult out_count(int v) const { return count_into(v, all()); }

  bool is_sink(int v) const { return out_count(v).is_zero(); }
  bool is_infinite_emitter(int v) const { return out_count(v).is_inf(); }
  bool is_finite_emitter(int v) const {
    Mult c = out_count(v);
    return !c.is_zero() && !c.is_inf();
  }
  bool row_finite() const;

  // Number of edge-level simple loops based at v, saturated at "many".
  LoopClass loop_class(int v) const;
  VertexProfile vertex_profile(int v) const;
  // Condition (K): every vertex has loop class zero or many.
  bool condition_k() const;

  // Subgraph induced on the vertices of `keep`, preserving declaration order.
  Graph induced(VMask keep) const;

  bool operator==(const Graph& o) const {
    return names_ == o.names_ && adj_ == o.adj_;
  }

 private:
  void finish();
  void check_vertex(int v) const;

  std::vector<std::string> names_;
  std::vector<std::vector<Mult>> adj_;
  std::vector<VMask> reach_;
};

}  // namespace gca
