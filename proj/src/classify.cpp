#include "gca/classify.hpp"

#include <stdexcept>

#include "gca/errors.hpp"
#include "gca/primtop.hpp"

namespace gca {

namespace {

void require_t1(const Graph& g, int bound) {
  if (!t1_check(g, bound).t1) throw NotT1("graph is not T1");
}

// Vertices contained in exactly one maximal tail.
VMask private_vertices(const Graph& g, const std::vector<MaximalTail>& tails) {
  VMask out = 0;
  for (int v = 0; v < g.size(); ++v) {
    int count = 0;
    for (const auto& M : tails)
      if (has(M.vertices, v)) ++count;
    if (count == 1) out |= vbit(v);
  }
  return out;
}

bool quotient_loop_free(const Graph& q) {
  for (int v = 0; v < q.size(); ++v)
    if (q.loop_class(v) != LoopClass::zero) return false;
  return true;
}

}  // namespace

std::vector<ClopenEntry> clopen_report(const Graph& g, int bound) {
  require_t1(g, bound);
  auto tails = maximal_tails(g, bound);
  PrimSubset space = prim_space(g, bound);
  std::vector<ClopenEntry> out;
  for (const auto& M : tails) {
    bool isolated = is_isolated(g, M, bound);
    // Independent route: build U_M from the ideal order and ask the closure
    // machinery whether it is clopen.
    Ideal I = ideal_of_gamma(g, M.vertices);
    PrimSubset u;
    for (VMask m : space.gamma)
      if (ideal_leq(I, ideal_of_gamma(g, m))) u.gamma.push_back(m);
    for (int v = 0; v < g.size(); ++v)
      if (has(space.bv, v) && ideal_leq(I, ideal_of_bv(g, v))) u.bv |= vbit(v);
    for (const auto& [n, c] : space.tau)
      if (ideal_leq(I, ideal_of_gamma(g, n))) u.tau.emplace(n, CircleSet::full());
    u.normalize();
    bool clopen = is_clopen(g, u, bound);
    if (clopen != isolated)
      throw std::logic_error("clopen/isolated disagreement for a tail");
    out.push_back({M, clopen,
                   M.kind == TailKind::gamma ? SetKind::point : SetKind::circle});
  }
  return out;
}

DiscretenessReport discreteness_report(const Graph& g, int bound) {
  require_t1(g, bound);
  DiscretenessReport rep;
  rep.all_isolated = true;
  for (const auto& M : maximal_tails(g, bound)) {
    rep.all_isolated = rep.all_isolated && is_isolated(g, M, bound);
    rep.shape.push_back(M.kind == TailKind::gamma ? SetKind::point : SetKind::circle);
  }
  return rep;
}

bool purely_infinite_check(const Graph& g, int bound) {
  if (!g.condition_k()) return false;
  for (const auto& M : maximal_tails(g, bound)) {
    bool has_loop = false;
    for (int v = 0; v < g.size() && !has_loop; ++v)
      has_loop = has(M.vertices, v) && g.loop_class(v) != LoopClass::zero;
    if (!has_loop) return false;
  }
  return true;
}

DecompositionReport kirchberg_decomposition(const Graph& g, int bound) {
  require_t1(g, bound);
  if (!purely_infinite_check(g, bound))
    throw NotPurelyInfinite("graph algebra is not purely infinite");
  auto tails = maximal_tails(g, bound);
  DecompositionReport rep;
  for (const auto& M : tails)
    rep.summands.push_back({M, ideal_of_gamma(g, M.vertices), M.vertices});
  rep.exhaustive = sigma_h(g, private_vertices(g, tails)) == g.all();
  return rep;
}

QuotientReport af_quotient(const Graph& g, int bound) {
  if (!g.row_finite()) throw NotRowFinite("graph has an infinite emitter");
  require_t1(g, bound);
  auto tails = maximal_tails(g, bound);
  VMask gen = sigma_h(g, private_vertices(g, tails));
  Graph q = g.induced(g.all() & ~gen);
  if (!quotient_loop_free(q))
    throw std::logic_error("AF quotient graph contains a loop");
  return {gen, std::move(q)};
}

QuotientReport pi_ideal_af_quotient(const Graph& g, int bound) {
  require_t1(g, bound);
  if (!g.condition_k()) throw ConditionKRequired("graph must satisfy condition (K)");
  VMask loop_bases = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.loop_class(v) != LoopClass::zero) loop_bases |= vbit(v);
  VMask gen = sigma_h(g, loop_bases);
  Graph q = g.induced(g.all() & ~gen);
  if (!quotient_loop_free(q))
    throw std::logic_error("purely infinite ideal quotient graph contains a loop");
  return {gen, std::move(q)};
}

std::vector<Fiber> c_ntilde_structure(const Graph& g, int bound) {
  require_t1(g, bound);
  auto tails = maximal_tails(g, bound);
  std::vector<Fiber> out;
  int n = 0;
  for (const auto& M : tails) {
    if (!is_isolated(g, M, bound)) continue;
    VMask priv = 0;
    for (int v = 0; v < g.size(); ++v) {
      if (!has(M.vertices, v)) continue;
      bool elsewhere = false;
      for (const auto& N : tails)
        if (N.vertices != M.vertices && has(N.vertices, v)) elsewhere = true;
      if (!elsewhere) priv |= vbit(v);
    }
    Fiber f;
    f.index = ++n;
    f.tail = M;
    f.ideal = {sigma_h(g, priv), 0};
    out.push_back(std::move(f));
  }
  Fiber inf;
  inf.at_infinity = true;
  inf.ideal = {0, 0};  // zero descriptor on finite graphs
  out.push_back(std::move(inf));
  return out;
}

}  // namespace gca
