#include "gca/ideals.hpp"

#include "gca/errors.hpp"

namespace gca {

bool is_hereditary(const Graph& g, VMask X) {
  for (int v = 0; v < g.size(); ++v)
    if (has(X, v) && (g.reach_set(v) & ~X)) return false;
  return true;
}

bool is_saturated(const Graph& g, VMask X) {
  for (int v = 0; v < g.size(); ++v) {
    if (has(X, v)) continue;
    if (!g.is_finite_emitter(v)) continue;
    if (g.count_into(v, ~X & g.all()).is_zero()) return false;
  }
  return true;
}

VMask sigma_h(const Graph& g, VMask X) {
  VMask S = X;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.size(); ++v) {
      if (has(S, v)) {
        VMask down = g.reach_set(v);
        if (down & ~S) {
          S |= down;
          changed = true;
        }
      } else if (g.is_finite_emitter(v) &&
                 g.count_into(v, ~S & g.all()).is_zero()) {
        S |= vbit(v);
        changed = true;
      }
    }
  }
  return S;
}

VMask omega(const Graph& g, VMask X) {
  VMask out = 0;
  for (int w = 0; w < g.size(); ++w)
    if (!has(X, w) && !(g.reach_set(w) & X)) out |= vbit(w);
  return out;
}

namespace {
void require_hs(const Graph& g, VMask H) {
  if (!is_hereditary(g, H) || !is_saturated(g, H))
    throw NotHereditarySaturated("H is not hereditary and saturated");
}
}  // namespace

VMask h_fin_inf(const Graph& g, VMask H) {
  require_hs(g, H);
  VMask out = 0;
  VMask comp = ~H & g.all();
  for (int v = 0; v < g.size(); ++v) {
    if (has(H, v) || !g.is_infinite_emitter(v)) continue;
    Mult c = g.count_into(v, comp);
    if (!c.is_zero() && !c.is_inf()) out |= vbit(v);
  }
  return out;
}

VMask h_empty_inf(const Graph& g, VMask H) {
  require_hs(g, H);
  VMask out = 0;
  VMask comp = ~H & g.all();
  for (int v = 0; v < g.size(); ++v) {
    if (has(H, v) || !g.is_infinite_emitter(v)) continue;
    if (g.count_into(v, comp).is_zero()) out |= vbit(v);
  }
  return out;
}

VMask breaking_vertices(const Graph& g) {
  VMask out = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (!g.is_infinite_emitter(v)) continue;
    VMask om = omega(g, vbit(v));
    Mult outside = g.count_into(v, ~om & g.all());
    if (!outside.is_zero() && !outside.is_inf()) out |= vbit(v);
  }
  return out;
}

std::vector<Ideal> enumerate_ideals(const Graph& g, int bound) {
  if (g.size() > bound) throw TooLarge("graph exceeds enumeration bound");
  std::vector<Ideal> out;
  VMask all = g.all();
  for (VMask H = 0;; ++H) {
    if (is_hereditary(g, H) && is_saturated(g, H)) {
      VMask fin = h_fin_inf(g, H);
      // All subsets B of fin, in increasing mask order.
      VMask B = 0;
      while (true) {
        out.push_back({H, B});
        if (B == fin) break;
        B = (B - fin) & fin;
      }
    }
    if (H == all) break;
  }
  return out;
}

bool ideal_leq(const Ideal& I, const Ideal& J) {
  return (I.H & ~J.H) == 0 && (I.B & ~(J.H | J.B)) == 0;
}

bool is_maximal_gauge_invariant(const Graph& g, const Ideal& I, int bound) {
  Ideal full{g.all(), 0};
  if (I == full) return false;
  for (const Ideal& J : enumerate_ideals(g, bound)) {
    if (J == I || J == full) continue;
    if (ideal_leq(I, J)) return false;
  }
  return true;
}

}  // namespace gca
