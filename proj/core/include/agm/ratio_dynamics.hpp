#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "agm/field.hpp"
#include "agm/node_dynamics.hpp"

namespace agm {

/// Membership in T_K = K \ {0, 1, -1}.
bool is_nontrivial_k(const FieldCtx& f, Elem k);
void require_nontrivial_k(const FieldCtx& f, Elem k);

/// Zero, one, or two k-values, ascending.
class ElemSet2 {
 public:
  void push(Elem k) { v_[n_++] = k; }
  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Elem operator[](std::size_t i) const { return v_[i]; }
  const Elem* begin() const { return v_.data(); }
  const Elem* end() const { return v_.data() + n_; }
  bool contains(Elem k) const { return (n_ > 0 && v_[0] == k) || (n_ > 1 && v_[1] == k); }

 private:
  std::array<Elem, 2> v_{};
  std::size_t n_ = 0;
};

/// The ratio b/a of a nontrivial node; always lands in T_K.
Elem k_of(const FieldCtx& f, Node n);

/// Successors of k1 under (1+k1)^2 k2^2 = 4 k1: square roots of 4k1/(1+k1)^2.
ElemSet2 k_children(const FieldCtx& f, Elem k1);

/// Predecessors of k2: roots k1 of k2^2 k1^2 + (2k2^2 - 4) k1 + k2^2 = 0 in T_K.
ElemSet2 k_parents(const FieldCtx& f, Elem k2);

/// The involution (1-k)/(1+k); switches advancement and backtracking.
Elem sigma(const FieldCtx& f, Elem k);

/// T^adv_inf: closed form for q != 1 mod 8, graph search otherwise. Ascending.
std::vector<Elem> t_adv_infinity(const FieldCtx& f);
std::vector<Elem> t_back_infinity(const FieldCtx& f);

/// Exhaustively checks that sigma maps every G_K edge (k1,k2) to the edge
/// (sigma(k2), sigma(k1)) and that the edge counts match.
bool verify_sigma_reversal(const FieldCtx& f);

struct BirationalReport {
  std::uint64_t curve_points = 0;    // affine points of y^2 = 2x(1+x^2)
  std::uint64_t quartic_points = 0;  // affine points of mu^4 = 1 - k^2
  std::uint64_t excluded = 0;        // points where a map denominator vanishes
  bool forward_roundtrip_ok = true;  // curve -> quartic -> curve
  bool inverse_roundtrip_ok = true;  // quartic -> curve -> quartic
  bool diagram_ok = true;            // Mobius chain-correspondence identity
  bool ok() const { return forward_roundtrip_ok && inverse_roundtrip_ok && diagram_ok; }
};

/// Round-trips both birational maps between y^2 = 2x(1+x^2) and mu^4 = 1-k^2
/// over every affine point, reporting excluded loci instead of skipping them.
BirationalReport birational_roundtrip(const FieldCtx& f);

/// Exhaustive classification of T_K by set refinement on the k-graph G_K.
class KClassification {
 public:
  static KClassification compute(const FieldCtx& f);

  std::uint32_t adv_depth(Elem k) const { return adv_[k]; }
  std::uint32_t back_depth(Elem k) const { return back_[k]; }
  bool adv_infinite(Elem k) const { return adv_[k] == kDepthInf; }
  bool back_infinite(Elem k) const { return back_[k] == kDepthInf; }
  bool cyclic(Elem k) const { return adv_infinite(k) && back_infinite(k); }

  std::uint64_t count_adv(std::uint32_t n) const;
  std::uint64_t count_back(std::uint32_t n) const;

  std::vector<Elem> adv_infinite_values() const;
  std::vector<Elem> back_infinite_values() const;

  /// Successors of k inside T^adv_inf / predecessors inside T^back_inf.
  ElemSet2 restricted_successors(Elem k) const;
  ElemSet2 restricted_predecessors(Elem k) const;

  const FieldCtx& ctx() const { return *ctx_; }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> adv_;
  std::vector<std::uint32_t> back_;
};

}  // namespace agm
