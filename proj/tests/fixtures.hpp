#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gca/graph.hpp"

namespace fx {

inline const char* kPoint = "vertex a\n";
inline const char* kLoop1 = "a -> a x1\n";
inline const char* kLoop2 = "a -> a x2\n";
inline const char* kLine = "a -> b x1\n";
inline const char* kFork = "a -> b x1\na -> c x1\nb -> b x2\nc -> c x2\n";
inline const char* kInfSink = "w -> s xinf\n";
inline const char* kBv = "v -> v x1\nv -> a xinf\n";
inline const char* kTau = "a -> a x1\na -> b x1\nb -> b x2\n";
inline const char* k2Tau = "a -> a x1\nb -> b x1\na -> b x1\n";
inline const char* kMixed = "d -> b x1\nd -> e x1\nb -> b x2\n";
inline const char* kLadder3 =
    "w1 -> w2 x1\nw2 -> w3 x1\nw1 -> v1 x1\nw2 -> v2 x1\nw3 -> v3 x1\n";

inline std::vector<std::pair<std::string, std::string>> all() {
  return {
      {"FX_POINT", kPoint},   {"FX_LOOP1", kLoop1}, {"FX_LOOP2", kLoop2},
      {"FX_LINE", kLine},     {"FX_FORK", kFork},   {"FX_INFSINK", kInfSink},
      {"FX_BV", kBv},         {"FX_TAU", kTau},     {"FX_2TAU", k2Tau},
      {"FX_MIXED", kMixed},   {"FX_LADDER3", kLadder3},
  };
}

inline gca::Graph parse(const char* text) { return gca::Graph::parse(text); }

// Mask of the named vertices in g.
inline gca::VMask verts(const gca::Graph& g, std::initializer_list<const char*> names) {
  gca::VMask m = 0;
  for (const char* n : names) m |= gca::vbit(g.index(n));
  return m;
}

}  // namespace fx
