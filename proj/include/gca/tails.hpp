#pragma once

#include <string>
#include <vector>

#include "gca/graph.hpp"

namespace gca {

enum class TailKind { gamma, tau };

// A maximal tail M. For tau tails, `loop` is the vertex set of the unique
// simple loop without exit in M that generates it.
struct MaximalTail {
  VMask vertices = 0;
  TailKind kind = TailKind::gamma;
  VMask loop = 0;
  bool operator==(const MaximalTail&) const = default;
};

// Sorted vertex names of a mask; the canonical ordering key for tails.
std::vector<std::string> sorted_names(const Graph& g, VMask m);
bool tail_order_less(const Graph& g, VMask a, VMask b);

bool is_maximal_tail(const Graph& g, VMask M);

// Throws NotATail; NonUniqueGeneratingLoop if two rotation-inequivalent
// exit-free simple loops exist.
MaximalTail classify_tail(const Graph& g, VMask M);

// All maximal tails, classified, in canonical order. Throws TooLarge.
std::vector<MaximalTail> maximal_tails(const Graph& g, int bound = kDefaultBound);

// Y_min / Y_inf over a set of tau tails.
std::vector<MaximalTail> y_min(const Graph& g, const std::vector<MaximalTail>& Y);
std::vector<MaximalTail> y_inf(const Graph& g, const std::vector<MaximalTail>& Y);

// All tails N with M.vertices subset of N.vertices (includes M itself).
std::vector<MaximalTail> tails_containing(const Graph& g, const MaximalTail& M,
                                          int bound = kDefaultBound);

// Isolation predicate of a tail in a T1 graph; throws NotT1 otherwise.
bool is_isolated(const Graph& g, const MaximalTail& M, int bound = kDefaultBound);

}  // namespace gca
