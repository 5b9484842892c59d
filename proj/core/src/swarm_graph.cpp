#include "agm/swarm_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "agm/errors.hpp"
#include "agm/ratio_dynamics.hpp"

namespace agm {

const char* to_string(Direction d) { return d == Direction::Advance ? "adv" : "back"; }

std::size_t SwarmGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ) n += s.size();
  return n;
}

std::size_t SwarmGraph::index_of(Node n) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), n);
  if (it == vertices.end() || *it != n) return npos;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool SwarmGraph::has_edge(Node from, Node to) const {
  std::size_t i = index_of(from), j = index_of(to);
  if (i == npos || j == npos) return false;
  const auto& s = succ[i];
  return std::find(s.begin(), s.end(), static_cast<std::uint32_t>(j)) != s.end();
}

std::vector<std::vector<std::uint32_t>> SwarmGraph::predecessors() const {
  std::vector<std::vector<std::uint32_t>> pred(vertices.size());
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (std::uint32_t j : succ[i]) pred[j].push_back(static_cast<std::uint32_t>(i));
  return pred;
}

namespace {

// Vertex set via the k-value first enumeration: T-set, then (q-1) scalings.
std::vector<Node> lift_vertices(const FieldCtx& f, const std::vector<Elem>& ks) {
  std::vector<Node> verts;
  verts.reserve(ks.size() * (f.q() - 1));
  for (Elem a = 1; a < f.q(); ++a)
    for (Elem k : ks) verts.push_back(Node{a, f.mul(a, k)});
  std::sort(verts.begin(), verts.end());
  return verts;
}

SwarmGraph build_graph(const FieldCtx& f, Direction dir) {
  SwarmGraph g;
  g.ctx = &f;
  g.dir = dir;
  const bool fwd = dir == Direction::Advance;

  if (f.q_mod8() != 1) {
    g.vertices = lift_vertices(f, fwd ? t_adv_infinity(f) : t_back_infinity(f));
    g.succ.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (fwd) {
        std::size_t j = g.index_of(unique_advance(f, g.vertices[i]));
        g.succ[i].push_back(static_cast<std::uint32_t>(j));
      } else {
        // arrows keep the advancement direction: parent -> this vertex
        std::size_t j = g.index_of(unique_backtrack(f, g.vertices[i]));
        g.succ[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
    for (auto& s : g.succ) std::sort(s.begin(), s.end());
    return g;
  }

  // q = 1 mod 8: no closed criterion; classify by search and keep all edges.
  NodeClassification cls = NodeClassification::compute(f);
  g.vertices = fwd ? cls.adv_infinite_nodes() : cls.back_infinite_nodes();
  g.succ.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (Node c : children(f, g.vertices[i])) {
      std::size_t j = g.index_of(c);
      if (j != SwarmGraph::npos) g.succ[i].push_back(static_cast<std::uint32_t>(j));
    }
  return g;
}

}  // namespace

SwarmGraph build_adv_graph(const FieldCtx& f) { return build_graph(f, Direction::Advance); }
SwarmGraph build_back_graph(const FieldCtx& f) { return build_graph(f, Direction::Backtrack); }

std::size_t AppendageNode::size() const {
  std::size_t n = 1;
  for (const auto& c : feeders) n += c.size();
  return n;
}

std::size_t JellyfishComponent::size() const {
  std::size_t n = 0;
  for (const auto& a : appendages) n += a.size();  // roots are the cycle vertices
  return n;
}

namespace {

std::string shape_of(const AppendageNode& t) {
  std::vector<std::string> parts;
  parts.reserve(t.feeders.size());
  for (const auto& c : t.feeders) parts.push_back(shape_of(c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ")";
  return s;
}

// Booth's least-rotation over an arbitrary comparable token sequence.
std::size_t least_rotation(const std::vector<std::string>& s) {
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  auto at = [&](std::size_t i) -> const std::string& { return s[i % n]; };
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::string& sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (sj != at(k + i + 1)) {
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace

ComponentSignature signature(const JellyfishComponent& c) {
  std::vector<std::string> shapes;
  shapes.reserve(c.appendages.size());
  for (const auto& a : c.appendages) shapes.push_back(shape_of(a));
  std::size_t start = least_rotation(shapes);
  std::string joined;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    joined += shapes[(start + i) % shapes.size()];
    joined += '|';
  }
  return ComponentSignature{c.cycle.size(), joined};
}

namespace {

AppendageNode collect_tree(const SwarmGraph& g,
                           const std::vector<std::vector<std::uint32_t>>& feeders_of,
                           const std::vector<bool>& on_cycle, std::uint32_t v) {
  AppendageNode t{g.vertices[v], {}};
  for (std::uint32_t u : feeders_of[v])
    if (!on_cycle[u]) t.feeders.push_back(collect_tree(g, feeders_of, on_cycle, u));
  return t;
}

void validate_shape(const SwarmGraph& g, const JellyfishComponent& comp) {
  const std::uint32_t mod8 = g.ctx->q_mod8();
  for (std::size_t i = 0; i < comp.cycle.size(); ++i) {
    const AppendageNode& root = comp.appendages[i];
    std::string witness = to_string(*g.ctx, comp.cycle[i]);
    if (mod8 % 4 == 3) {
      // one length-1 tentacle (or colon): a single leaf feeder
      if (root.feeders.size() != 1 || !root.feeders[0].feeders.empty())
        throw StructureViolationError("expected a length-one appendage at " + witness);
    } else if (mod8 == 5) {
      // Y-shaped, depth 2: one middle vertex fed by exactly two leaves
      if (root.feeders.size() != 1) throw StructureViolationError("expected one appendage at " + witness);
      const AppendageNode& mid = root.feeders[0];
      if (mid.feeders.size() != 2 || !mid.feeders[0].feeders.empty() ||
          !mid.feeders[1].feeders.empty())
        throw StructureViolationError("expected a Y-shaped depth-2 appendage at " + witness);
    }
  }
}

}  // namespace

std::vector<JellyfishComponent> decompose(const SwarmGraph& g) {
  const FieldCtx& f = *g.ctx;
  if (f.q_mod8() == 1) throw UnsupportedCongruenceError(f.q(), "decompose");
  const std::size_t n = g.size();

  // Traverse the single-valued direction.
  std::vector<std::uint32_t> step(n);
  std::vector<std::vector<std::uint32_t>> feeders_of;
  if (g.dir == Direction::Advance) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.succ[i].size() != 1)
        throw StructureViolationError("out-degree != 1 at " + to_string(f, g.vertices[i]));
      step[i] = g.succ[i][0];
    }
  } else {
    auto pred = g.predecessors();
    for (std::size_t i = 0; i < n; ++i) {
      if (pred[i].size() != 1)
        throw StructureViolationError("in-degree != 1 at " + to_string(f, g.vertices[i]));
      step[i] = pred[i][0];
    }
  }
  feeders_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) feeders_of[step[i]].push_back(static_cast<std::uint32_t>(i));

  // Functional-graph cycle detection by path coloring.
  std::vector<std::uint8_t> color(n, 0);  // 0 unseen, 1 on current walk, 2 done
  std::vector<bool> on_cycle(n, false);
  std::vector<std::vector<std::uint32_t>> cycles;
  for (std::uint32_t v0 = 0; v0 < n; ++v0) {
    if (color[v0]) continue;
    std::vector<std::uint32_t> path;
    std::uint32_t v = v0;
    while (color[v] == 0) {
      color[v] = 1;
      path.push_back(v);
      v = step[v];
    }
    if (color[v] == 1) {
      // new cycle: the tail of `path` starting at v
      auto it = std::find(path.begin(), path.end(), v);
      std::vector<std::uint32_t> cyc(it, path.end());
      for (std::uint32_t c : cyc) on_cycle[c] = true;
      cycles.push_back(std::move(cyc));
    }
    for (std::uint32_t u : path) color[u] = 2;
  }

  std::vector<JellyfishComponent> comps;
  comps.reserve(cycles.size());
  for (auto& cyc : cycles) {
    // deterministic start: the cycle vertex with minimal encoding
    std::size_t best = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i)
      if (g.vertices[cyc[i]] < g.vertices[cyc[best]]) best = i;
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(best), cyc.end());

    JellyfishComponent comp;
    comp.kind = g.dir == Direction::Advance ? JellyfishComponent::Kind::Tentacled
                                            : JellyfishComponent::Kind::Coloned;
    for (std::uint32_t v : cyc) {
      comp.cycle.push_back(g.vertices[v]);
      comp.appendages.push_back(collect_tree(g, feeders_of, on_cycle, v));
    }
    validate_shape(g, comp);
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const JellyfishComponent& a, const JellyfishComponent& b) {
    if (a.cycle.size() != b.cycle.size()) return a.cycle.size() < b.cycle.size();
    return a.cycle[0] < b.cycle[0];
  });
  return comps;
}

bool reversal_isomorphic(const SwarmGraph& adv, const SwarmGraph& back) {
  auto sig_multiset = [](const SwarmGraph& g) {
    std::vector<ComponentSignature> sigs;
    for (const auto& c : decompose(g)) sigs.push_back(signature(c));
    std::sort(sigs.begin(), sigs.end());
    return sigs;
  };
  return sig_multiset(adv) == sig_multiset(back);
}

std::vector<bool> cyclic_vertices(const SwarmGraph& g) {
  // Iterative Tarjan SCC; vertices in components of size >= 2 are cyclic
  // (the advancement relation has no self-loops on nontrivial nodes).
  const std::size_t n = g.size();
  std::vector<std::uint32_t> index(n, 0), low(n, 0);
  std::vector<bool> on_stack(n, false), cyclic(n, false), visited(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 1;

  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<Frame> frames{{root, 0}};
    visited[root] = true;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.child < g.succ[fr.v].size()) {
        std::uint32_t w = g.succ[fr.v][fr.child++];
        if (!visited[w]) {
          visited[w] = true;
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
      } else {
        std::uint32_t v = fr.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<std::uint32_t> scc;
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc.push_back(w);
          } while (w != v);
          if (scc.size() >= 2)
            for (std::uint32_t u : scc) cyclic[u] = true;
        }
      }
    }
  }
  return cyclic;
}

std::uint32_t max_tentacle_length(const FieldCtx& f) {
  return NodeClassification::compute(f).max_tentacle_length();
}

std::uint32_t max_colon_length(const FieldCtx& f) {
  return NodeClassification::compute(f).max_colon_length();
}

std::string export_dot(const SwarmGraph& g) {
  const FieldCtx& f = *g.ctx;
  std::vector<bool> cyc = cyclic_vertices(g);
  std::ostringstream os;
  os << "digraph agm_f" << f.q() << "_" << to_string(g.dir) << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  n" << node_code(f, g.vertices[i]) << " [label=\"" << to_string(f, g.vertices[i])
       << "\"";
    if (cyc[i]) os << " peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::uint32_t j : g.succ[i])
      os << "  n" << node_code(f, g.vertices[i]) << " -> n" << node_code(f, g.vertices[j])
         << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json tree_json(const FieldCtx& f, const AppendageNode& t) {
  nlohmann::json j;
  j["node"] = to_string(f, t.node);
  auto& arr = j["feeders"] = nlohmann::json::array();
  for (const auto& c : t.feeders) arr.push_back(tree_json(f, c));
  return j;
}

nlohmann::json field_json(const FieldCtx& f) {
  return {{"p", f.p()}, {"t", f.t()}, {"q", f.q()}};
}

}  // namespace

std::string export_json(const SwarmGraph& g, const std::vector<JellyfishComponent>& comps) {
  const FieldCtx& f = *g.ctx;
  nlohmann::json j;
  j["field"] = field_json(f);
  j["direction"] = to_string(g.dir);
  auto& arr = j["components"] = nlohmann::json::array();
  for (const auto& c : comps) {
    nlohmann::json cj;
    auto& cyc = cj["cycle"] = nlohmann::json::array();
    for (Node v : c.cycle) cyc.push_back(to_string(f, v));
    auto& ap = cj["appendages"] = nlohmann::json::object();
    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
      auto& farr = ap[to_string(f, c.cycle[i])] = nlohmann::json::array();
      for (const auto& t : c.appendages[i].feeders) farr.push_back(tree_json(f, t));
    }
    arr.push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

std::string export_json(const SwarmGraph& g) {
  const FieldCtx& f = *g.ctx;
  nlohmann::json j;
  j["field"] = field_json(f);
  j["direction"] = to_string(g.dir);
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (Node v : g.vertices) vs.push_back(to_string(f, v));
  auto& es = j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::uint32_t k : g.succ[i])
      es.push_back({to_string(f, g.vertices[i]), to_string(f, g.vertices[k])});
  return j.dump(2) + "\n";
}

namespace {

std::string shape_from_json(const nlohmann::json& t) {
  std::vector<std::string> parts;
  for (const auto& c : t.at("feeders")) parts.push_back(shape_from_json(c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ")";
  return s;
}

}  // namespace

std::vector<ComponentSignature> signatures_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<ComponentSignature> sigs;
  for (const auto& cj : j.at("components")) {
    std::vector<std::string> shapes;
    for (const auto& label : cj.at("cycle")) {
      std::string s = "(";
      std::vector<std::string> parts;
      for (const auto& t : cj.at("appendages").at(label.get<std::string>()))
        parts.push_back(shape_from_json(t));
      std::sort(parts.begin(), parts.end());
      for (const auto& p : parts) s += p;
      s += ")";
      shapes.push_back(std::move(s));
    }
    std::size_t start = least_rotation(shapes);
    std::string joined;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      joined += shapes[(start + i) % shapes.size()];
      joined += '|';
    }
    sigs.push_back(ComponentSignature{shapes.size(), joined});
  }
  return sigs;
}

}  // namespace agm
