#include "gca/json_io.hpp"

#include <algorithm>

#include "gca/errors.hpp"

namespace gca {

json vertex_list_json(const Graph& g, VMask m) {
  return json(sorted_names(g, m));
}

json tail_json(const Graph& g, const MaximalTail& t) {
  json j;
  j["vertices"] = vertex_list_json(g, t.vertices);
  j["kind"] = t.kind == TailKind::gamma ? "gamma" : "tau";
  if (t.kind == TailKind::tau) j["loop"] = vertex_list_json(g, t.loop);
  return j;
}

json ideal_json(const Graph& g, const Ideal& I) {
  return json{{"H", vertex_list_json(g, I.H)}, {"B", vertex_list_json(g, I.B)}};
}

json graph_json(const Graph& g) {
  json verts = json::array();
  for (int v = 0; v < g.size(); ++v) verts.push_back(g.name(v));
  json edges = json::array();
  for (int s = 0; s < g.size(); ++s)
    for (int r = 0; r < g.size(); ++r) {
      Mult m = g.mult(s, r);
      if (m.is_zero()) continue;
      json e{{"source", g.name(s)}, {"range", g.name(r)}};
      if (m.is_inf())
        e["multiplicity"] = "inf";
      else
        e["multiplicity"] = m.finite_value();
      edges.push_back(std::move(e));
    }
  return json{{"vertices", verts}, {"edges", edges}};
}

namespace {
json circle_json(const CircleSet& c) {
  if (c.is_full()) return json("full");
  json a = json::array();
  for (const Angle& t : c.angles()) a.push_back(t.str());
  return a;
}

std::vector<VMask> canonical_masks(const Graph& g, std::vector<VMask> masks) {
  std::sort(masks.begin(), masks.end(), [&](VMask a, VMask b) {
    return tail_order_less(g, a, b);
  });
  return masks;
}
}  // namespace

json prim_subset_json(const Graph& g, const PrimSubset& s) {
  json j;
  j["gamma"] = json::array();
  for (VMask m : canonical_masks(g, s.gamma)) j["gamma"].push_back(vertex_list_json(g, m));
  j["bv"] = vertex_list_json(g, s.bv);
  j["tau"] = json::array();
  std::vector<VMask> keys;
  for (const auto& [n, c] : s.tau) keys.push_back(n);
  for (VMask n : canonical_masks(g, keys))
    j["tau"].push_back(json{{"tail", vertex_list_json(g, n)},
                            {"circle", circle_json(s.tau.at(n))}});
  return j;
}

json t1_verdict_json(const Graph& g, const T1Verdict& v) {
  json ws = json::array();
  for (const auto& w : v.witnesses) {
    if (w.kind == T1Witness::Kind::breaking_vertex) {
      ws.push_back(json{{"type", "breaking_vertex"}, {"vertex", g.name(w.vertex)}});
    } else {
      ws.push_back(json{
          {"type", "tail_pair"},
          {"m", vertex_list_json(g, w.m)},
          {"n", vertex_list_json(g, w.n)},
          {"reason", w.reason == T1Witness::Reason::empty_omega_inf
                         ? "empty_omega_inf"
                         : "infinite_edge_count"}});
    }
  }
  return json{{"t1", v.t1}, {"witnesses", ws}};
}

json clopen_report_json(const Graph& g, const std::vector<ClopenEntry>& rep) {
  json j = json::array();
  for (const auto& e : rep)
    j.push_back(json{{"tail", tail_json(g, e.tail)},
                     {"clopen", e.clopen},
                     {"kind", e.kind == SetKind::point ? "point" : "circle"}});
  return j;
}

json decomposition_json(const Graph& g, const DecompositionReport& rep) {
  json summands = json::array();
  for (const auto& s : rep.summands)
    summands.push_back(json{{"tail", tail_json(g, s.tail)},
                            {"ideal", ideal_json(g, s.ideal)},
                            {"quotient_vertices", vertex_list_json(g, s.quotient_vertices)}});
  return json{{"summands", summands}, {"exhaustive", rep.exhaustive}};
}

json quotient_json(const Graph& g, const QuotientReport& rep) {
  return json{{"ideal_generators", vertex_list_json(g, rep.ideal_generators)},
              {"quotient_graph", graph_json(rep.quotient_graph)}};
}

json c_ntilde_json(const Graph& g, const std::vector<Fiber>& fibers) {
  json j = json::array();
  for (const auto& f : fibers) {
    json e;
    if (f.at_infinity)
      e["index"] = "inf";
    else
      e["index"] = f.index;
    if (f.tail) e["tail"] = tail_json(g, *f.tail);
    e["ideal"] = ideal_json(g, f.ideal);
    j.push_back(std::move(e));
  }
  return j;
}

namespace {
VMask mask_from_names(const Graph& g, const json& names) {
  if (!names.is_array()) throw InvalidSubset("expected an array of vertex names");
  VMask m = 0;
  for (const auto& n : names) {
    if (!n.is_string()) throw InvalidSubset("vertex names must be strings");
    m |= vbit(g.index(n.get<std::string>()));
  }
  return m;
}

CircleSet circle_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "full") return CircleSet::full();
    throw InvalidSubset("circle must be \"full\" or an array of angles");
  }
  if (!j.is_array()) throw InvalidSubset("circle must be \"full\" or an array of angles");
  std::vector<Angle> angles;
  for (const auto& a : j) {
    if (!a.is_string()) throw InvalidSubset("angles must be \"p/q\" strings");
    angles.push_back(Angle::parse(a.get<std::string>()));
  }
  return CircleSet::finite(std::move(angles));
}
}  // namespace

PrimSubset prim_subset_from_json(const Graph& g, const json& j) {
  if (!j.is_object()) throw InvalidSubset("prim subset must be a JSON object");
  PrimSubset s;
  if (j.contains("gamma"))
    for (const auto& m : j.at("gamma")) s.gamma.push_back(mask_from_names(g, m));
  if (j.contains("bv")) s.bv = mask_from_names(g, j.at("bv"));
  if (j.contains("tau"))
    for (const auto& e : j.at("tau")) {
      if (!e.is_object() || !e.contains("tail") || !e.contains("circle"))
        throw InvalidSubset("tau entries need \"tail\" and \"circle\"");
      VMask n = mask_from_names(g, e.at("tail"));
      CircleSet c = circle_from_json(e.at("circle"));
      auto it = s.tau.find(n);
      if (it == s.tau.end())
        s.tau.emplace(n, c);
      else
        it->second = it->second.unite(c);
    }
  s.normalize();
  return s;
}

std::string export_dot(const Graph& g, bool color_by_tails, int bound) {
  std::string out = "digraph E {\n";
  std::vector<int> tail_count(g.size(), 0);
  if (color_by_tails) {
    for (const auto& M : maximal_tails(g, bound))
      for (int v = 0; v < g.size(); ++v)
        if (has(M.vertices, v)) ++tail_count[v];
  }
  for (int v = 0; v < g.size(); ++v) {
    out += "  " + g.name(v);
    if (color_by_tails) {
      const char* color = tail_count[v] == 0   ? "white"
                          : tail_count[v] == 1 ? "lightblue"
                                               : "orange";
      out += " [style=filled, fillcolor=" + std::string(color) +
             ", xlabel=\"" + std::to_string(tail_count[v]) + "\"]";
    }
    out += ";\n";
  }
  for (int s = 0; s < g.size(); ++s)
    for (int r = 0; r < g.size(); ++r) {
      Mult m = g.mult(s, r);
      if (m.is_zero()) continue;
      out += "  " + g.name(s) + " -> " + g.name(r);
      out += " [label=\"" + (m.is_inf() ? std::string("∞") : std::to_string(m.finite_value())) + "\"]";
      out += ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace gca
