#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "agm/field.hpp"

namespace agm {

/// An ordered pair of field elements; the vertex type of the AGM graph.
struct Node {
  Elem a = 0;
  Elem b = 0;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline std::uint64_t node_code(const FieldCtx& f, Node n) {
  return std::uint64_t{n.a} * f.q() + n.b;
}

inline Node node_from_code(const FieldCtx& f, std::uint64_t code) {
  return Node{static_cast<Elem>(code / f.q()), static_cast<Elem>(code % f.q())};
}

std::string to_string(const FieldCtx& f, Node n);

/// Membership in S_K: a, b, a+b, a-b all nonzero.
bool is_nontrivial(const FieldCtx& f, Node n);
void require_nontrivial(const FieldCtx& f, Node n);

/// Zero, one, or two nodes; deterministic order (smaller code first).
class NodeSet2 {
 public:
  void push(Node n) { v_[n_++] = n; }
  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Node operator[](std::size_t i) const { return v_[i]; }
  const Node* begin() const { return v_.data(); }
  const Node* end() const { return v_.data() + n_; }
  bool contains(Node n) const { return (n_ > 0 && v_[0] == n) || (n_ > 1 && v_[1] == n); }

 private:
  std::array<Node, 2> v_{};
  std::size_t n_ = 0;
};

inline constexpr std::uint32_t kDepthInf = 0xFFFFFFFFu;

/// The advancement images {((a+b)/2, ±sqrt(ab))}; empty iff ab is a nonsquare.
NodeSet2 children(const FieldCtx& f, Node n);

/// The preimages: root pairs of x^2 - 2ax + b^2, each other's reversals;
/// empty iff a^2 - b^2 is not a nonzero square.
NodeSet2 parents(const FieldCtx& f, Node n);

/// Length of the longest advancement chain from n, or kDepthInf when n is
/// indefinitely advanceable (some descendant lies on a cycle). cap = 0 means
/// the default 2q safety bound.
std::uint32_t adv_depth(const FieldCtx& f, Node n, std::uint32_t cap = 0);
std::uint32_t back_depth(const FieldCtx& f, Node n, std::uint32_t cap = 0);

/// True when q's congruence class admits a closed-form membership test
/// (q = 3 mod 4 or q = 5 mod 8); otherwise the criteria route through search.
bool has_closed_criterion(const FieldCtx& f);

/// Indefinite advanceability: ab square (q = 3 mod 4), 4ab(a+b)^2 a fourth
/// power (q = 5 mod 8), graph search for q = 1 mod 8.
bool is_adv_infinite_criterion(const FieldCtx& f, Node n);

/// Indefinite backtrackability: a^2 - b^2 square (q = 3 mod 4),
/// a^2(a^2-b^2) a fourth power (q = 5 mod 8), graph search for q = 1 mod 8.
bool is_back_infinite_criterion(const FieldCtx& f, Node n);

/// The unique child that is itself indefinitely advanceable (q != 1 mod 8).
Node unique_advance(const FieldCtx& f, Node n);

/// The unique parent that is itself indefinitely backtrackable (q != 1 mod 8).
Node unique_backtrack(const FieldCtx& f, Node n);

/// Exhaustive classification of every nontrivial node of a small field:
/// per-node advancement and backtracking depths by set refinement
/// (S^adv_{n+1} = nodes with a child in S^adv_n, iterated to the fixpoint).
class NodeClassification {
 public:
  static NodeClassification compute(const FieldCtx& f);

  std::uint32_t adv_depth(Node n) const { return adv_[node_code(*ctx_, n)]; }
  std::uint32_t back_depth(Node n) const { return back_[node_code(*ctx_, n)]; }
  bool adv_infinite(Node n) const { return adv_depth(n) == kDepthInf; }
  bool back_infinite(Node n) const { return back_depth(n) == kDepthInf; }
  bool cyclic(Node n) const { return adv_infinite(n) && back_infinite(n); }

  /// |S^adv_n| (pass kDepthInf for |S^adv_inf|), and the backtracking analogue.
  std::uint64_t count_adv(std::uint32_t n) const;
  std::uint64_t count_back(std::uint32_t n) const;
  std::uint64_t count_cyclic() const { return cyclic_count_; }

  std::vector<Node> adv_infinite_nodes() const;
  std::vector<Node> back_infinite_nodes() const;

  /// Smallest n with S^adv_inf intersect S^back_n = S^cyc, and the dual.
  std::uint32_t max_tentacle_length() const { return tentacle_max_; }
  std::uint32_t max_colon_length() const { return colon_max_; }

  const FieldCtx& ctx() const { return *ctx_; }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> adv_;   // indexed by node code; kDepthInf = indefinitely
  std::vector<std::uint32_t> back_;
  std::uint64_t cyclic_count_ = 0;
  std::uint32_t tentacle_max_ = 0;
  std::uint32_t colon_max_ = 0;
};

}  // namespace agm
