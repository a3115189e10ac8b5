#include "gca/tails.hpp"

#include <algorithm>

#include "gca/errors.hpp"
#include "gca/ideals.hpp"
#include "gca/primtop.hpp"

namespace gca {

std::vector<std::string> sorted_names(const Graph& g, VMask m) {
  std::vector<std::string> out;
  for (int v = 0; v < g.size(); ++v)
    if (has(m, v)) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool tail_order_less(const Graph& g, VMask a, VMask b) {
  // Smaller tails first, then lexicographic on sorted names: subsets precede
  // their supersets, which keeps nested-tail reports in specialization order.
  std::vector<std::string> an = sorted_names(g, a);
  std::vector<std::string> bn = sorted_names(g, b);
  if (an.size() != bn.size()) return an.size() < bn.size();
  return an < bn;
}

bool is_maximal_tail(const Graph& g, VMask M) {
  if (M == 0) return false;
  // (1) upward closure under >=
  if (g.reachers_of(M) & ~M) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (!has(M, v)) continue;
    // (2) finite emitters must have a successor in M
    if (g.is_finite_emitter(v) && g.count_into(v, M).is_zero()) return false;
  }
  // (3) downward directedness within M
  for (int v = 0; v < g.size(); ++v) {
    if (!has(M, v)) continue;
    for (int w = v; w < g.size(); ++w) {
      if (!has(M, w)) continue;
      if (!(g.reach_set(v) & g.reach_set(w) & M)) return false;
    }
  }
  return true;
}

MaximalTail classify_tail(const Graph& g, VMask M) {
  if (!is_maximal_tail(g, M)) throw NotATail("set is not a maximal tail");
  // An exit-free simple loop in M consists of vertices whose total edge
  // multiplicity into M is exactly 1; follow the unique M-successor of each
  // such vertex and collect the cycles of that partial function.
  std::vector<int> succ(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    if (!has(M, v)) continue;
    if (g.count_into(v, M) != Mult(1)) continue;
    for (int w = 0; w < g.size(); ++w)
      if (has(M, w) && !g.mult(v, w).is_zero()) succ[v] = w;
  }
  std::vector<VMask> loops;
  VMask seen = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (succ[v] < 0 || has(seen, v)) continue;
    // Walk the chain from v; a new cycle is found if we return into it.
    VMask chain = 0;
    int u = v;
    while (u >= 0 && !has(chain, u) && !has(seen, u)) {
      chain |= vbit(u);
      u = succ[u];
    }
    seen |= chain;
    if (u >= 0 && has(chain, u)) {
      VMask cycle = 0;
      for (int w = u; !has(cycle, w); w = succ[w]) cycle |= vbit(w);
      loops.push_back(cycle);
    }
  }
  if (loops.size() > 1)
    throw NonUniqueGeneratingLoop("tail has two exit-free simple loops");
  if (loops.empty()) return {M, TailKind::gamma, 0};
  return {M, TailKind::tau, loops[0]};
}

std::vector<MaximalTail> maximal_tails(const Graph& g, int bound) {
  if (g.size() > bound) throw TooLarge("graph exceeds enumeration bound");
  std::vector<MaximalTail> out;
  VMask all = g.all();
  for (VMask M = 1; M <= all && all != 0; ++M)
    if (is_maximal_tail(g, M)) out.push_back(classify_tail(g, M));
  std::sort(out.begin(), out.end(), [&](const MaximalTail& a, const MaximalTail& b) {
    return tail_order_less(g, a.vertices, b.vertices);
  });
  return out;
}

namespace {
bool loop_path(const Graph& g, VMask fromLoop, VMask toLoop) {
  for (int u = 0; u < g.size(); ++u)
    if (has(fromLoop, u) && (g.reach_set(u) & toLoop)) return true;
  return false;
}
}  // namespace

std::vector<MaximalTail> y_min(const Graph& g, const std::vector<MaximalTail>& Y) {
  std::vector<MaximalTail> out;
  for (const auto& U : Y) {
    bool minimal = true;
    for (const auto& V : Y) {
      if (V.vertices == U.vertices) continue;
      if (loop_path(g, U.loop, V.loop)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(U);
  }
  return out;
}

std::vector<MaximalTail> y_inf(const Graph& g, const std::vector<MaximalTail>& Y) {
  auto mins = y_min(g, Y);
  std::vector<MaximalTail> out;
  for (const auto& U : Y) {
    bool unreachable = true;
    for (const auto& V : mins) {
      if (loop_path(g, U.loop, V.loop)) {
        unreachable = false;
        break;
      }
    }
    if (unreachable) out.push_back(U);
  }
  return out;
}

std::vector<MaximalTail> tails_containing(const Graph& g, const MaximalTail& M,
                                          int bound) {
  std::vector<MaximalTail> out;
  for (const auto& N : maximal_tails(g, bound))
    if ((M.vertices & ~N.vertices) == 0) out.push_back(N);
  return out;
}

bool is_isolated(const Graph& g, const MaximalTail& M, int bound) {
  if (!t1_check(g, bound).t1) throw NotT1("isolation is defined for T1 graphs only");
  auto all_tails = maximal_tails(g, bound);
  // 1. a private vertex
  for (int v = 0; v < g.size(); ++v) {
    if (!has(M.vertices, v)) continue;
    bool elsewhere = false;
    for (const auto& N : all_tails)
      if (N.vertices != M.vertices && has(N.vertices, v)) {
        elsewhere = true;
        break;
      }
    if (!elsewhere) return true;
  }
  // 2. Omega(M)^empty_inf emits finitely into the union of tails containing M
  VMask w_inf = h_empty_inf(g, omega(g, M.vertices));
  if (w_inf == 0) return false;
  VMask uni = 0;
  for (const auto& N : all_tails)
    if ((M.vertices & ~N.vertices) == 0) uni |= N.vertices;
  return !g.count_from_into(w_inf, uni).is_inf();
}

}  // namespace gca
