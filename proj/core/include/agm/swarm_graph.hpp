#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agm/field.hpp"
#include "agm/node_dynamics.hpp"

namespace agm {

enum class Direction { Advance, Backtrack };

const char* to_string(Direction d);

/// The AGM graph restricted to an indefinitely advanceable (or indefinitely
/// backtrackable) vertex set. Edges always point in the advancement direction.
struct SwarmGraph {
  const FieldCtx* ctx = nullptr;
  Direction dir = Direction::Advance;
  std::vector<Node> vertices;                     // sorted by node code
  std::vector<std::vector<std::uint32_t>> succ;   // indices into vertices

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const;
  /// Index of a vertex, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(Node n) const;
  bool has_edge(Node from, Node to) const;
  /// Predecessor lists (computed on demand from succ).
  std::vector<std::vector<std::uint32_t>> predecessors() const;
};

SwarmGraph build_adv_graph(const FieldCtx& f);
SwarmGraph build_back_graph(const FieldCtx& f);

/// A tree of appendage nodes feeding (tentacle) or fed by (colon) a cycle
/// vertex; `feeders` are one step farther from the cycle.
struct AppendageNode {
  Node node;
  std::vector<AppendageNode> feeders;
  std::size_t size() const;
};

struct JellyfishComponent {
  enum class Kind { Tentacled, Coloned };
  Kind kind = Kind::Tentacled;
  std::vector<Node> cycle;                 // bell-head, in traversal order
  std::vector<AppendageNode> appendages;   // one per cycle vertex, parallel to cycle
  std::size_t size() const;
};

struct ComponentSignature {
  std::size_t cycle_length = 0;
  std::string shape;  // rotation-canonical appendage shape sequence
  friend auto operator<=>(const ComponentSignature&, const ComponentSignature&) = default;
};

ComponentSignature signature(const JellyfishComponent& c);

/// Partition a restricted graph (q != 1 mod 8) into jellyfish components.
/// Traverses the single-valued direction: successors for ADVANCE graphs,
/// predecessors for BACKTRACK graphs (whose reversal is functional), so the
/// resulting signatures of an adv graph and a back graph compare directly.
/// Throws StructureViolationError with a witness if single-valuedness or the
/// expected tentacle shape fails.
std::vector<JellyfishComponent> decompose(const SwarmGraph& g);

/// Multiset equality of component signatures of adv vs the reversal of back.
bool reversal_isomorphic(const SwarmGraph& adv, const SwarmGraph& back);

/// Vertices lying on a cycle of g (nontrivial strongly connected components).
std::vector<bool> cyclic_vertices(const SwarmGraph& g);

/// Smallest n with S^adv_inf intersect S^back_n = S^cyc, and the dual.
std::uint32_t max_tentacle_length(const FieldCtx& f);
std::uint32_t max_colon_length(const FieldCtx& f);

/// Graphviz text; deterministic. Cyclic vertices are flagged.
std::string export_dot(const SwarmGraph& g);

/// JSON per the component schema; requires a decomposition.
std::string export_json(const SwarmGraph& g, const std::vector<JellyfishComponent>& comps);

/// JSON fallback for graphs without a proven component structure (q = 1 mod 8):
/// {field, direction, vertices, edges}.
std::string export_json(const SwarmGraph& g);

/// Re-derive component signatures from a component-schema JSON document.
std::vector<ComponentSignature> signatures_from_json(const std::string& json_text);

}  // namespace agm
