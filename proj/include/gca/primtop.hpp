#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gca/graph.hpp"
#include "gca/ideals.hpp"
#include "gca/tails.hpp"

namespace gca {

// Rational angle in [0, 1), reduced.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;
  static Angle make(std::int64_t n, std::int64_t d);  // reduces, normalizes
  static Angle parse(const std::string& s);           // "p/q" or "p"
  std::string str() const;
  bool operator==(const Angle&) const = default;
  std::strong_ordering operator<=>(const Angle& o) const {
    return num * o.den <=> o.num * den;  // reduced, so equality is structural
  }
};

// Symbolic subset of the unit circle: empty, a finite set of rational angles,
// or the full circle. Finite sets are closed, so closure is the identity.
class CircleSet {
 public:
  enum class Tag { empty, finite, full };

  CircleSet() = default;
  static CircleSet empty() { return {}; }
  static CircleSet full() {
    CircleSet c;
    c.tag_ = Tag::full;
    return c;
  }
  static CircleSet finite(std::vector<Angle> angles);  // normalizes; {} -> empty

  Tag tag() const { return tag_; }
  bool is_empty() const { return tag_ == Tag::empty; }
  bool is_full() const { return tag_ == Tag::full; }
  const std::vector<Angle>& angles() const { return angles_; }

  CircleSet unite(const CircleSet& o) const;
  bool subset_of(const CircleSet& o) const;
  bool operator==(const CircleSet&) const = default;

 private:
  Tag tag_ = Tag::empty;
  std::vector<Angle> angles_;  // sorted, unique; nonempty iff finite
};

// Symbolic subset of Prim C*(E): gamma-tail points, breaking-vertex points,
// and a circle subset per tau tail (never an empty circle).
struct PrimSubset {
  std::vector<VMask> gamma;        // sorted by mask value, unique
  VMask bv = 0;
  std::map<VMask, CircleSet> tau;  // tau-tail vertex mask -> circle subset

  void normalize();
  bool subset_of(const PrimSubset& o) const;
  PrimSubset unite(const PrimSubset& o) const;
  bool operator==(const PrimSubset&) const = default;
};

// The whole space: all gamma tails, all breaking vertices, full circle per
// tau tail. Throws TooLarge.
PrimSubset prim_space(const Graph& g, int bound = kDefaultBound);

// Hull-kernel closure, evaluated pointwise over prim_space: each candidate
// point is tested against the gamma, breaking-vertex, and tau parts of S.
// Throws InvalidSubset if S mentions non-tails, non-breaking vertices, or
// empty circle parts.
PrimSubset closure(const Graph& g, const PrimSubset& S, int bound = kDefaultBound);

bool is_closed(const Graph& g, const PrimSubset& S, int bound = kDefaultBound);
// Throws UnrepresentableComplement if S has a finite non-full circle part.
bool is_clopen(const Graph& g, const PrimSubset& S, int bound = kDefaultBound);

struct T1Witness {
  enum class Kind { breaking_vertex, tail_pair };
  enum class Reason { none, empty_omega_inf, infinite_edge_count };
  Kind kind;
  int vertex = -1;    // breaking_vertex
  VMask m = 0, n = 0; // tail_pair
  Reason reason = Reason::none;
  bool operator==(const T1Witness&) const = default;
};

struct T1Verdict {
  bool t1 = false;
  std::vector<T1Witness> witnesses;
};

// Direct graph-condition decider with failure witnesses.
T1Verdict t1_check(const Graph& g, int bound = kDefaultBound);

// Via maximal gauge-invariant ideals and the tail -> ideal bijection.
bool t1_check_via_lattice(const Graph& g, int bound = kDefaultBound);

// Via closure of singletons (tau circles probed at 0 and 1/4).
bool t1_check_via_closure(const Graph& g, int bound = kDefaultBound);

// The gauge-invariant ideal of a prim point under the bijection:
// gamma(M) -> (Omega(M), Omega(M)^fin_inf),
// bv(v)    -> (Omega(v), Omega(v)^fin_inf \ {v}),
// tau(N,.) -> (Omega(N), Omega(N)^fin_inf)  (order facts only).
Ideal ideal_of_gamma(const Graph& g, VMask M);
Ideal ideal_of_bv(const Graph& g, int v);

// Independent hull-kernel closure for condition-(K) graphs:
// closure(S) = { p : exists q in S with ideal_of(q) <= ideal_of(p) }.
// Throws ConditionKRequired.
PrimSubset closure_oracle_condition_k(const Graph& g, const PrimSubset& S,
                                      int bound = kDefaultBound);

}  // namespace gca
