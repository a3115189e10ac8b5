#include "gca/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "gca/errors.hpp"

namespace gca {
namespace {

bool valid_id(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

Mult parse_mult_token(const std::string& tok, const std::string& line) {
  // tok is the part after 'x'.
  if (tok == "inf") return Mult::inf();
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw UnknownToken("bad multiplicity token in line: " + line);
  std::uint64_t n = std::stoull(tok);
  if (n == 0) throw ZeroMultiplicity("multiplicity x0 in line: " + line);
  return Mult(n);
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  Graph g;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& id, const std::string& line) -> int {
    if (!valid_id(id)) throw UnknownToken("bad identifier '" + id + "' in line: " + line);
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    if (g.names_.size() >= 64) throw TooLarge("more than 64 vertices");
    int v = static_cast<int>(g.names_.size());
    index.emplace(id, v);
    g.names_.push_back(id);
    return v;
  };

  std::vector<std::tuple<int, int, Mult>> edges;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      if (toks.size() != 2) throw MalformedLine("expected 'vertex <id>': " + line);
      intern(toks[1], line);
      continue;
    }
    // <id> -> <id> x<k>   (also 'x inf' split as two tokens)
    if (toks.size() == 5 && toks[3] == "x") {
      toks[3] = "x" + toks[4];
      toks.pop_back();
    }
    if (toks.size() != 4 || toks[1] != "->")
      throw MalformedLine("expected '<id> -> <id> x<k>': " + line);
    if (toks[3].empty() || toks[3][0] != 'x')
      throw UnknownToken("expected multiplicity 'x<k>' in line: " + line);
    Mult m = parse_mult_token(toks[3].substr(1), line);
    int s = intern(toks[0], line);
    int r = intern(toks[2], line);
    for (auto& [es, er, em] : edges)
      if (es == s && er == r)
        throw MalformedLine("edge redeclared: " + line);
    edges.emplace_back(s, r, m);
  }
  g.adj_.assign(g.names_.size(), std::vector<Mult>(g.names_.size()));
  for (auto& [s, r, m] : edges) g.adj_[s][r] = m;
  g.finish();
  return g;
}

Graph Graph::build(std::vector<std::string> names,
                   std::vector<std::tuple<int, int, Mult>> edges) {
  if (names.size() > 64) throw TooLarge("more than 64 vertices");
  Graph g;
  g.names_ = std::move(names);
  for (auto& n : g.names_)
    if (!valid_id(n)) throw UnknownToken("bad identifier '" + n + "'");
  g.adj_.assign(g.names_.size(), std::vector<Mult>(g.names_.size()));
  for (auto& [s, r, m] : edges) {
    if (s < 0 || s >= g.size() || r < 0 || r >= g.size())
      throw UnknownVertex("edge endpoint out of range");
    if (m.is_zero()) throw ZeroMultiplicity("zero multiplicity edge");
    if (!g.adj_[s][r].is_zero()) throw MalformedLine("edge redeclared");
    g.adj_[s][r] = m;
  }
  g.finish();
  return g;
}

void Graph::finish() {
  // Duplicate names would have collided in intern/build paths already; keep a
  // defensive check for build().
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (names_[i] == names_[j]) throw MalformedLine("duplicate vertex name " + names_[i]);
  // Reflexive-transitive closure, one DFS per vertex.
  reach_.assign(size(), 0);
  for (int v = 0; v < size(); ++v) {
    VMask seen = vbit(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < size(); ++w) {
        if (!adj_[u][w].is_zero() && !has(seen, w)) {
          seen |= vbit(w);
          stack.push_back(w);
        }
      }
    }
    reach_[v] = seen;
  }
}

std::string Graph::render() const {
  std::ostringstream out;
  for (const auto& n : names_) out << "vertex " << n << "\n";
  for (int s = 0; s < size(); ++s)
    for (int r = 0; r < size(); ++r)
      if (!adj_[s][r].is_zero())
        out << names_[s] << " -> " << names_[r] << " x" << adj_[s][r].str() << "\n";
  return out.str();
}

int Graph::index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

bool Graph::has_vertex(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw UnknownVertex("vertex index out of range");
}

bool Graph::reaches(int v, int w) const {
  check_vertex(v);
  check_vertex(w);
  return has(reach_[v], w);
}

VMask Graph::reach_set(int v) const {
  check_vertex(v);
  return reach_[v];
}

VMask Graph::reachers_of(VMask S) const {
  VMask out = 0;
  for (int v = 0; v < size(); ++v)
    if (reach_[v] & S) out |= vbit(v);
  return out;
}

Mult Graph::count_into(int v, VMask S) const {
  check_vertex(v);
  Mult total;
  for (int w = 0; w < size(); ++w)
    if (has(S, w)) total += adj_[v][w];
  return total;
}

Mult Graph::count_from_into(VMask from, VMask S) const {
  Mult total;
  for (int v = 0; v < size(); ++v)
    if (has(from, v)) total += count_into(v, S);
  return total;
}

bool Graph::row_finite() const {
  for (int v = 0; v < size(); ++v)
    if (is_infinite_emitter(v)) return false;
  return true;
}

LoopClass Graph::loop_class(int v) const {
  check_vertex(v);
  // Only vertices strongly connected to v can lie on a simple loop through v.
  VMask scc = 0;
  for (int u = 0; u < size(); ++u)
    if (has(reach_[v], u) && has(reach_[u], v)) scc |= vbit(u);

  // DFS over vertex-simple cycles based at v; the count of edge-level loops
  // along a vertex sequence is the product of multiplicities, saturated at 2.
  int count = 0;  // saturated at 2
  VMask visited = vbit(v);
  auto edge_weight = [](Mult m) -> int { return (m.is_inf() || m >= Mult(2)) ? 2 : 1; };
  std::function<void(int, int)> dfs = [&](int u, int prod) {
    if (count >= 2) return;
    for (int w = 0; w < size(); ++w) {
      if (adj_[u][w].is_zero() || !has(scc, w)) continue;
      int p = std::min(2, prod * edge_weight(adj_[u][w]));
      if (w == v) {
        count = std::min(2, count + p);
        if (count >= 2) return;
      } else if (!has(visited, w)) {
        visited |= vbit(w);
        dfs(w, p);
        visited &= ~vbit(w);
        if (count >= 2) return;
      }
    }
  };
  dfs(v, 1);
  switch (count) {
    case 0: return LoopClass::zero;
    case 1: return LoopClass::one;
    default: return LoopClass::many;
  }
}

VertexProfile Graph::vertex_profile(int v) const {
  return {is_sink(v), is_infinite_emitter(v), loop_class(v)};
}

bool Graph::condition_k() const {
  for (int v = 0; v < size(); ++v)
    if (loop_class(v) == LoopClass::one) return false;
  return true;
}

Graph Graph::induced(VMask keep) const {
  std::vector<std::string> names;
  std::vector<int> old_of;
  for (int v = 0; v < size(); ++v)
    if (has(keep, v)) {
      names.push_back(names_[v]);
      old_of.push_back(v);
    }
  std::vector<std::tuple<int, int, Mult>> edges;
  for (int s = 0; s < static_cast<int>(old_of.size()); ++s)
    for (int r = 0; r < static_cast<int>(old_of.size()); ++r)
      if (!adj_[old_of[s]][old_of[r]].is_zero())
        edges.emplace_back(s, r, adj_[old_of[s]][old_of[r]]);
  return build(std::move(names), std::move(edges));
}

}  // namespace gca
