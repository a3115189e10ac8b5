#pragma once

#include <vector>

#include "gca/graph.hpp"

namespace gca {

// Gauge-invariant ideal J_{H,B}: H hereditary and saturated, B subset of
// H^fin_inf. The full algebra is represented as (E0, empty) and is not a
// proper ideal.
struct Ideal {
  VMask H = 0;
  VMask B = 0;
  bool operator==(const Ideal&) const = default;
};

bool is_hereditary(const Graph& g, VMask X);
bool is_saturated(const Graph& g, VMask X);

// Smallest hereditary and saturated set containing X.
VMask sigma_h(const Graph& g, VMask X);

// Omega(X): vertices outside X that do not reach X.
VMask omega(const Graph& g, VMask X);

// H^fin_inf / H^empty_inf; H must be hereditary and saturated
// (NotHereditarySaturated otherwise).
VMask h_fin_inf(const Graph& g, VMask H);
VMask h_empty_inf(const Graph& g, VMask H);

VMask breaking_vertices(const Graph& g);

// All pairs (H, B) in deterministic order (H by mask value, then B by mask
// value). Throws TooLarge past the bound.
std::vector<Ideal> enumerate_ideals(const Graph& g, int bound = kDefaultBound);

// I <= J  iff  I.H subset of J.H and I.B subset of J.H u J.B.
bool ideal_leq(const Ideal& I, const Ideal& J);

// True iff no gauge-invariant ideal lies strictly between I and (E0, empty).
bool is_maximal_gauge_invariant(const Graph& g, const Ideal& I,
                                int bound = kDefaultBound);

}  // namespace gca
