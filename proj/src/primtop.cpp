#include "gca/primtop.hpp"

#include <algorithm>
#include <numeric>

#include "gca/errors.hpp"

namespace gca {

Angle Angle::make(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidSubset("angle with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n = ((n % d) + d) % d;
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  if (n == 0) d = 1;
  return Angle{n, d};
}

Angle Angle::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make(std::stoll(s), 1);
    return make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidSubset("bad angle '" + s + "'");
  }
}

std::string Angle::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

CircleSet CircleSet::finite(std::vector<Angle> angles) {
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  CircleSet c;
  if (!angles.empty()) {
    c.tag_ = Tag::finite;
    c.angles_ = std::move(angles);
  }
  return c;
}

CircleSet CircleSet::unite(const CircleSet& o) const {
  if (is_full() || o.is_full()) return full();
  std::vector<Angle> merged = angles_;
  merged.insert(merged.end(), o.angles_.begin(), o.angles_.end());
  return finite(std::move(merged));
}

bool CircleSet::subset_of(const CircleSet& o) const {
  if (is_empty() || o.is_full()) return true;
  if (is_full()) return false;
  if (o.is_empty()) return false;
  return std::includes(o.angles_.begin(), o.angles_.end(), angles_.begin(),
                       angles_.end());
}

void PrimSubset::normalize() {
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  for (auto it = tau.begin(); it != tau.end();)
    it = it->second.is_empty() ? tau.erase(it) : std::next(it);
}

bool PrimSubset::subset_of(const PrimSubset& o) const {
  for (VMask m : gamma)
    if (!std::binary_search(o.gamma.begin(), o.gamma.end(), m)) return false;
  if (bv & ~o.bv) return false;
  for (const auto& [n, c] : tau) {
    auto it = o.tau.find(n);
    if (it == o.tau.end() || !c.subset_of(it->second)) return false;
  }
  return true;
}

PrimSubset PrimSubset::unite(const PrimSubset& o) const {
  PrimSubset out = *this;
  out.gamma.insert(out.gamma.end(), o.gamma.begin(), o.gamma.end());
  out.bv |= o.bv;
  for (const auto& [n, c] : o.tau) {
    auto it = out.tau.find(n);
    if (it == out.tau.end())
      out.tau.emplace(n, c);
    else
      it->second = it->second.unite(c);
  }
  out.normalize();
  return out;
}

namespace {

struct Space {
  std::vector<MaximalTail> gamma_tails;
  std::vector<MaximalTail> tau_tails;
  VMask bv = 0;
};

Space make_space(const Graph& g, int bound) {
  Space sp;
  for (const auto& t : maximal_tails(g, bound))
    (t.kind == TailKind::gamma ? sp.gamma_tails : sp.tau_tails).push_back(t);
  sp.bv = breaking_vertices(g);
  return sp;
}

void validate_subset(const Space& sp, const PrimSubset& S) {
  for (VMask m : S.gamma) {
    bool ok = std::any_of(sp.gamma_tails.begin(), sp.gamma_tails.end(),
                          [&](const MaximalTail& t) { return t.vertices == m; });
    if (!ok) throw InvalidSubset("gamma part contains a non-gamma-tail set");
  }
  if (S.bv & ~sp.bv) throw InvalidSubset("bv part contains a non-breaking vertex");
  for (const auto& [n, c] : S.tau) {
    bool ok = std::any_of(sp.tau_tails.begin(), sp.tau_tails.end(),
                          [&](const MaximalTail& t) { return t.vertices == n; });
    if (!ok) throw InvalidSubset("tau part contains a non-tau-tail set");
    if (c.is_empty()) throw InvalidSubset("tau part maps to the empty circle");
  }
}

// Membership machinery for one input subset over one space.
struct ClosureEval {
  const Graph& g;
  const Space& sp;
  const PrimSubset& S;
  VMask ux = 0;       // union of the gamma part
  VMask t_w = 0;      // E0 minus the intersection of Omega(w), w in W
  VMask u_ymin = 0;   // union of Y_min tails
  VMask u_yinf = 0;   // union of Y_inf tails
  std::vector<VMask> ymin_keys;

  ClosureEval(const Graph& g_, const Space& sp_, const PrimSubset& S_)
      : g(g_), sp(sp_), S(S_) {
    for (VMask m : S.gamma) ux |= m;
    if (S.bv) {
      VMask inter = g.all();
      for (int v = 0; v < g.size(); ++v)
        if (has(S.bv, v)) inter &= omega(g, vbit(v));
      t_w = g.all() & ~inter;
    }
    std::vector<MaximalTail> Y;
    for (const auto& [n, c] : S.tau)
      for (const auto& t : sp.tau_tails)
        if (t.vertices == n) Y.push_back(t);
    for (const auto& u : y_min(g, Y)) {
      u_ymin |= u.vertices;
      ymin_keys.push_back(u.vertices);
    }
    for (const auto& u : y_inf(g, Y)) u_yinf |= u.vertices;
  }

  static bool subset(VMask a, VMask b) { return (a & ~b) == 0; }

  // A gamma tail M is absorbed by a region of the space (the union of the
  // gamma part, the breaking-vertex region, or a Y_min/Y_inf union) when M
  // lies inside it and Omega(M)^empty_inf is empty or emits infinitely into
  // it.
  bool tail_absorbed(VMask M, VMask region) const {
    if (region == 0 || !subset(M, region)) return false;
    VMask einf = h_empty_inf(g, omega(g, M));
    return einf == 0 || g.count_from_into(einf, region).is_inf();
  }

  bool vertex_absorbed(int v, VMask region) const {
    return region != 0 && has(region, v) && g.count_into(v, region).is_inf();
  }

  bool gamma_in_closure(const MaximalTail& M) const {
    if (std::binary_search(S.gamma.begin(), S.gamma.end(), M.vertices)) return true;
    if (tail_absorbed(M.vertices, ux)) return true;
    if (tail_absorbed(M.vertices, t_w)) return true;
    return tail_absorbed(M.vertices, u_yinf) ||
           tail_absorbed(M.vertices, u_ymin);
  }

  bool bv_in_closure(int v) const {
    if (has(S.bv, v)) return true;
    if (vertex_absorbed(v, ux)) return true;
    if (vertex_absorbed(v, t_w)) return true;
    return vertex_absorbed(v, u_yinf) || vertex_absorbed(v, u_ymin);
  }

  CircleSet tau_in_closure(const MaximalTail& N) const {
    bool full = subset(N.vertices, ux) && ux;
    full = full || (subset(N.vertices, t_w) && t_w);
    bool in_ymin = std::find(ymin_keys.begin(), ymin_keys.end(), N.vertices) !=
                   ymin_keys.end();
    full = full || (subset(N.vertices, u_yinf) && u_yinf);
    full = full || (!in_ymin && subset(N.vertices, u_ymin) && u_ymin);
    if (full) return CircleSet::full();
    if (in_ymin) return S.tau.at(N.vertices);  // finite circle sets are closed
    return CircleSet::empty();
  }
};

}  // namespace

PrimSubset prim_space(const Graph& g, int bound) {
  Space sp = make_space(g, bound);
  PrimSubset out;
  for (const auto& t : sp.gamma_tails) out.gamma.push_back(t.vertices);
  out.bv = sp.bv;
  for (const auto& t : sp.tau_tails) out.tau.emplace(t.vertices, CircleSet::full());
  out.normalize();
  return out;
}

PrimSubset closure(const Graph& g, const PrimSubset& S, int bound) {
  Space sp = make_space(g, bound);
  PrimSubset in = S;
  in.normalize();
  validate_subset(sp, in);
  ClosureEval ev(g, sp, in);
  PrimSubset out;
  for (const auto& M : sp.gamma_tails)
    if (ev.gamma_in_closure(M)) out.gamma.push_back(M.vertices);
  for (int v = 0; v < g.size(); ++v)
    if (has(sp.bv, v) && ev.bv_in_closure(v)) out.bv |= vbit(v);
  for (const auto& N : sp.tau_tails) {
    CircleSet c = ev.tau_in_closure(N);
    if (!c.is_empty()) out.tau.emplace(N.vertices, c);
  }
  out.normalize();
  return out;
}

bool is_closed(const Graph& g, const PrimSubset& S, int bound) {
  PrimSubset in = S;
  in.normalize();
  return closure(g, in, bound) == in;
}

bool is_clopen(const Graph& g, const PrimSubset& S, int bound) {
  Space sp = make_space(g, bound);
  PrimSubset in = S;
  in.normalize();
  validate_subset(sp, in);
  if (!is_closed(g, in, bound)) return false;
  PrimSubset comp;
  for (const auto& M : sp.gamma_tails)
    if (!std::binary_search(in.gamma.begin(), in.gamma.end(), M.vertices))
      comp.gamma.push_back(M.vertices);
  comp.bv = sp.bv & ~in.bv;
  for (const auto& N : sp.tau_tails) {
    auto it = in.tau.find(N.vertices);
    if (it == in.tau.end())
      comp.tau.emplace(N.vertices, CircleSet::full());
    else if (!it->second.is_full())
      throw UnrepresentableComplement(
          "complement of a finite circle part is cofinite");
  }
  comp.normalize();
  return is_closed(g, comp, bound);
}

T1Verdict t1_check(const Graph& g, int bound) {
  T1Verdict v;
  VMask bv = breaking_vertices(g);
  std::vector<int> bvs;
  for (int i = 0; i < g.size(); ++i)
    if (has(bv, i)) bvs.push_back(i);
  std::sort(bvs.begin(), bvs.end(),
            [&](int a, int b) { return g.name(a) < g.name(b); });
  for (int i : bvs) {
    T1Witness w;
    w.kind = T1Witness::Kind::breaking_vertex;
    w.vertex = i;
    v.witnesses.push_back(w);
  }
  auto tails = maximal_tails(g, bound);
  for (const auto& M : tails) {
    for (const auto& N : tails) {
      if (M.vertices == N.vertices || (M.vertices & ~N.vertices)) continue;
      VMask einf = h_empty_inf(g, omega(g, M.vertices));
      T1Witness w;
      w.kind = T1Witness::Kind::tail_pair;
      w.m = M.vertices;
      w.n = N.vertices;
      if (einf == 0)
        w.reason = T1Witness::Reason::empty_omega_inf;
      else if (g.count_from_into(einf, N.vertices).is_inf())
        w.reason = T1Witness::Reason::infinite_edge_count;
      else
        continue;
      v.witnesses.push_back(w);
    }
  }
  v.t1 = v.witnesses.empty();
  return v;
}

Ideal ideal_of_gamma(const Graph& g, VMask M) {
  VMask om = omega(g, M);
  return {om, h_fin_inf(g, om)};
}

Ideal ideal_of_bv(const Graph& g, int v) {
  VMask om = omega(g, vbit(v));
  return {om, h_fin_inf(g, om) & ~vbit(v)};
}

bool t1_check_via_lattice(const Graph& g, int bound) {
  if (breaking_vertices(g) != 0) return false;
  auto tails = maximal_tails(g, bound);
  std::vector<Ideal> tail_ideals;
  for (const auto& M : tails) {
    Ideal I = ideal_of_gamma(g, M.vertices);
    if (!is_maximal_gauge_invariant(g, I, bound)) return false;
    tail_ideals.push_back(I);
  }
  std::vector<Ideal> maximal;
  Ideal full{g.all(), 0};
  for (const Ideal& J : enumerate_ideals(g, bound))
    if (!(J == full) && is_maximal_gauge_invariant(g, J, bound))
      maximal.push_back(J);
  if (maximal.size() != tail_ideals.size()) return false;
  for (const Ideal& J : maximal)
    if (std::find(tail_ideals.begin(), tail_ideals.end(), J) == tail_ideals.end())
      return false;
  return true;
}

bool t1_check_via_closure(const Graph& g, int bound) {
  Space sp = make_space(g, bound);
  for (const auto& M : sp.gamma_tails) {
    PrimSubset s;
    s.gamma.push_back(M.vertices);
    if (!(closure(g, s, bound) == s)) return false;
  }
  for (int v = 0; v < g.size(); ++v) {
    if (!has(sp.bv, v)) continue;
    PrimSubset s;
    s.bv = vbit(v);
    if (!(closure(g, s, bound) == s)) return false;
  }
  for (const auto& N : sp.tau_tails) {
    for (Angle t : {Angle::make(0, 1), Angle::make(1, 4)}) {
      PrimSubset s;
      s.tau.emplace(N.vertices, CircleSet::finite({t}));
      if (!(closure(g, s, bound) == s)) return false;
    }
  }
  return true;
}

PrimSubset closure_oracle_condition_k(const Graph& g, const PrimSubset& S,
                                      int bound) {
  if (!g.condition_k()) throw ConditionKRequired("graph must satisfy condition (K)");
  Space sp = make_space(g, bound);
  PrimSubset in = S;
  in.normalize();
  validate_subset(sp, in);
  std::vector<Ideal> from;
  for (VMask m : in.gamma) from.push_back(ideal_of_gamma(g, m));
  for (int v = 0; v < g.size(); ++v)
    if (has(in.bv, v)) from.push_back(ideal_of_bv(g, v));
  auto contains_point = [&](const Ideal& I) {
    return std::any_of(from.begin(), from.end(),
                       [&](const Ideal& q) { return ideal_leq(q, I); });
  };
  PrimSubset out;
  for (const auto& M : sp.gamma_tails)
    if (contains_point(ideal_of_gamma(g, M.vertices))) out.gamma.push_back(M.vertices);
  for (int v = 0; v < g.size(); ++v)
    if (has(sp.bv, v) && contains_point(ideal_of_bv(g, v))) out.bv |= vbit(v);
  out.normalize();
  return out;
}

}  // namespace gca
