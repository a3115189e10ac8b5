#pragma once

#include <optional>
#include <vector>

#include "gca/graph.hpp"
#include "gca/ideals.hpp"
#include "gca/tails.hpp"

namespace gca {

enum class SetKind { point, circle };

struct ClopenEntry {
  MaximalTail tail;
  bool clopen = false;
  SetKind kind = SetKind::point;
};

// Per-tail clopen verdicts for U_M = { p : J_{Omega(M),fin} subset p },
// computed both via isolation and via the closure machinery (agreement is
// asserted). Throws NotT1.
std::vector<ClopenEntry> clopen_report(const Graph& g, int bound = kDefaultBound);

struct DiscretenessReport {
  bool all_isolated = false;
  std::vector<SetKind> shape;  // one entry per tail, canonical order
};

DiscretenessReport discreteness_report(const Graph& g, int bound = kDefaultBound);

// Condition (K) and every maximal tail contains a loop base.
bool purely_infinite_check(const Graph& g, int bound = kDefaultBound);

struct Summand {
  MaximalTail tail;
  Ideal ideal;              // (Omega(M), Omega(M)^fin_inf)
  VMask quotient_vertices;  // = tail.vertices
};

struct DecompositionReport {
  std::vector<Summand> summands;
  bool exhaustive = false;
};

// One Kirchberg summand per maximal tail. Throws NotT1, NotPurelyInfinite.
DecompositionReport kirchberg_decomposition(const Graph& g, int bound = kDefaultBound);

struct QuotientReport {
  VMask ideal_generators;  // SigmaH of the generating vertex set
  Graph quotient_graph;    // induced on the complement; asserted loop-free
};

// V = vertices in exactly one maximal tail. Throws NotT1, NotRowFinite.
QuotientReport af_quotient(const Graph& g, int bound = kDefaultBound);

// V' = loop-base vertices. Throws NotT1, ConditionKRequired.
QuotientReport pi_ideal_af_quotient(const Graph& g, int bound = kDefaultBound);

struct Fiber {
  bool at_infinity = false;
  int index = 0;  // 1-based; meaningless when at_infinity
  std::optional<MaximalTail> tail;
  Ideal ideal;
};

// Isolated-tail direct summands in canonical tail order, then the fiber at
// infinity (the zero descriptor for finite graphs). Throws NotT1.
std::vector<Fiber> c_ntilde_structure(const Graph& g, int bound = kDefaultBound);

}  // namespace gca
