#include "agm/node_dynamics.hpp"

#include <unordered_map>

#include "agm/errors.hpp"

namespace agm {

std::string to_string(const FieldCtx& f, Node n) {
  return "(" + f.to_string(n.a) + "," + f.to_string(n.b) + ")";
}

bool is_nontrivial(const FieldCtx& f, Node n) {
  return n.a != 0 && n.b != 0 && f.add(n.a, n.b) != 0 && n.a != n.b;
}

void require_nontrivial(const FieldCtx& f, Node n) {
  if (!is_nontrivial(f, n)) throw TrivialNodeError(to_string(f, n));
}

NodeSet2 children(const FieldCtx& f, Node n) {
  require_nontrivial(f, n);
  NodeSet2 out;
  Elem ab = f.mul(n.a, n.b);
  SqrtRoots roots = f.sqrt_all(ab);
  if (roots.empty()) return out;
  Elem g = f.div(f.add(n.a, n.b), f.from_int(2));
  for (Elem d : roots) out.push(Node{g, d});
  return out;
}

NodeSet2 parents(const FieldCtx& f, Node n) {
  require_nontrivial(f, n);
  NodeSet2 out;
  Elem disc = f.sub(f.mul(n.a, n.a), f.mul(n.b, n.b));
  // disc = a^2 - b^2 is nonzero for nontrivial nodes
  SqrtRoots roots = f.sqrt_all(disc);
  if (roots.empty()) return out;
  Elem r0 = f.add(n.a, roots[0]);
  Elem r1 = f.add(n.a, roots[1]);
  Node p0{r0, r1}, p1{r1, r0};
  if (node_code(f, p1) < node_code(f, p0)) std::swap(p0, p1);
  out.push(p0);
  out.push(p1);
  return out;
}

namespace {

enum class Mark : std::uint8_t { Unseen, InProgress, Done };

struct DepthSearch {
  const FieldCtx& f;
  bool forward;
  std::unordered_map<std::uint64_t, std::uint32_t> memo;  // kDepthInf included
  std::unordered_map<std::uint64_t, Mark> mark;

  std::uint32_t run(Node n) {
    std::uint64_t code = node_code(f, n);
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
    Mark& m = mark[code];
    if (m == Mark::InProgress) return kDepthInf;  // reached a cycle
    m = Mark::InProgress;
    NodeSet2 next = forward ? children(f, n) : parents(f, n);
    std::uint32_t best = 0;
    for (Node c : next) {
      std::uint32_t d = run(c);
      if (d == kDepthInf) {
        best = kDepthInf;
        break;
      }
      if (d + 1 > best) best = d + 1;
    }
    mark[code] = Mark::Done;
    memo[code] = best;
    return best;
  }
};

std::uint32_t depth_impl(const FieldCtx& f, Node n, std::uint32_t cap, bool forward) {
  require_nontrivial(f, n);
  if (cap == 0) cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(2 * f.q(), kDepthInf - 1));
  DepthSearch s{f, forward, {}, {}};
  std::uint32_t d = s.run(n);
  return d > cap ? kDepthInf : d;
}

}  // namespace

std::uint32_t adv_depth(const FieldCtx& f, Node n, std::uint32_t cap) {
  return depth_impl(f, n, cap, true);
}

std::uint32_t back_depth(const FieldCtx& f, Node n, std::uint32_t cap) {
  return depth_impl(f, n, cap, false);
}

bool has_closed_criterion(const FieldCtx& f) { return f.q_mod8() != 1; }

bool is_adv_infinite_criterion(const FieldCtx& f, Node n) {
  require_nontrivial(f, n);
  if (f.q_mod8() % 4 == 3) return f.is_square(f.mul(n.a, n.b));
  Elem s = f.add(n.a, n.b);
  Elem v = f.mul(f.mul(f.from_int(4), f.mul(n.a, n.b)), f.mul(s, s));
  if (f.q_mod8() == 5) return f.residue_class(v) == ResidueClass::FourthPower;
  return adv_depth(f, n) == kDepthInf;  // q = 1 mod 8: no closed form
}

bool is_back_infinite_criterion(const FieldCtx& f, Node n) {
  require_nontrivial(f, n);
  Elem a2 = f.mul(n.a, n.a);
  Elem diff = f.sub(a2, f.mul(n.b, n.b));
  if (f.q_mod8() % 4 == 3) return f.is_square(diff);
  if (f.q_mod8() == 5)
    return f.residue_class(f.mul(a2, diff)) == ResidueClass::FourthPower;
  return back_depth(f, n) == kDepthInf;
}

Node unique_advance(const FieldCtx& f, Node n) {
  if (f.q_mod8() == 1) throw UnsupportedCongruenceError(f.q(), "unique_advance");
  if (!is_adv_infinite_criterion(f, n)) throw NotInfinitelyAdvanceableError(to_string(f, n));
  NodeSet2 cs = children(f, n);
  NodeSet2 passing;
  for (Node c : cs)
    if (is_adv_infinite_criterion(f, c)) passing.push(c);
  if (passing.size() == 2) throw AmbiguousAdvanceError(to_string(f, n));
  if (passing.empty())
    throw StructureViolationError("no indefinitely advanceable child at " + to_string(f, n));
  return passing[0];
}

Node unique_backtrack(const FieldCtx& f, Node n) {
  if (f.q_mod8() == 1) throw UnsupportedCongruenceError(f.q(), "unique_backtrack");
  if (!is_back_infinite_criterion(f, n)) throw NotInfinitelyBacktrackableError(to_string(f, n));
  NodeSet2 ps = parents(f, n);
  NodeSet2 passing;
  for (Node p : ps)
    if (is_back_infinite_criterion(f, p)) passing.push(p);
  if (passing.size() == 2) throw AmbiguousBacktrackError(to_string(f, n));
  if (passing.empty())
    throw StructureViolationError("no indefinitely backtrackable parent at " + to_string(f, n));
  return passing[0];
}

namespace {

// One direction of the refinement; fills depth[] and returns nothing.
// step(node) enumerates the neighbors whose membership keeps the node alive.
template <typename Step>
void refine(const FieldCtx& f, std::vector<std::uint32_t>& depth, Step step) {
  const std::uint64_t q = f.q();
  depth.assign(q * q, kDepthInf);
  std::vector<std::uint64_t> alive;
  std::vector<std::uint8_t> in(q * q, 0);
  for (Elem a = 1; a < q; ++a)
    for (Elem b = 1; b < q; ++b) {
      Node n{a, b};
      if (is_nontrivial(f, n)) {
        std::uint64_t c = node_code(f, n);
        alive.push_back(c);
        in[c] = 1;
      }
    }
  std::uint32_t n = 0;
  while (true) {
    std::vector<std::uint64_t> next;
    next.reserve(alive.size());
    for (std::uint64_t code : alive) {
      bool keep = false;
      for (Node m : step(node_from_code(f, code)))
        if (in[node_code(f, m)]) {
          keep = true;
          break;
        }
      if (keep)
        next.push_back(code);
      else
        depth[code] = n;
    }
    if (next.size() == alive.size()) break;  // fixpoint: survivors are indefinite
    for (std::uint64_t code : alive) in[code] = 0;
    for (std::uint64_t code : next) in[code] = 1;
    alive.swap(next);
    ++n;
  }
}

}  // namespace

NodeClassification NodeClassification::compute(const FieldCtx& f) {
  if (f.q() > max_node_enum_q()) throw FieldTooLargeError(f.q(), max_node_enum_q());
  NodeClassification c;
  c.ctx_ = &f;
  refine(f, c.adv_, [&f](Node n) { return children(f, n); });
  refine(f, c.back_, [&f](Node n) { return parents(f, n); });

  std::uint32_t tent = 0, colon = 0;
  for (std::uint64_t code = 0; code < c.adv_.size(); ++code) {
    Node n = node_from_code(f, code);
    if (!is_nontrivial(f, n)) continue;
    bool ai = c.adv_[code] == kDepthInf;
    bool bi = c.back_[code] == kDepthInf;
    if (ai && bi) ++c.cyclic_count_;
    if (ai && !bi) tent = std::max(tent, c.back_[code] + 1);
    if (bi && !ai) colon = std::max(colon, c.adv_[code] + 1);
  }
  c.tentacle_max_ = tent;
  c.colon_max_ = colon;
  return c;
}

std::uint64_t NodeClassification::count_adv(std::uint32_t n) const {
  std::uint64_t cnt = 0;
  for (std::uint64_t code = 0; code < adv_.size(); ++code) {
    Node nd = node_from_code(*ctx_, code);
    if (!is_nontrivial(*ctx_, nd)) continue;
    std::uint32_t d = adv_[code];
    if (d == kDepthInf || (n != kDepthInf && d >= n)) ++cnt;
  }
  return cnt;
}

std::uint64_t NodeClassification::count_back(std::uint32_t n) const {
  std::uint64_t cnt = 0;
  for (std::uint64_t code = 0; code < back_.size(); ++code) {
    Node nd = node_from_code(*ctx_, code);
    if (!is_nontrivial(*ctx_, nd)) continue;
    std::uint32_t d = back_[code];
    if (d == kDepthInf || (n != kDepthInf && d >= n)) ++cnt;
  }
  return cnt;
}

std::vector<Node> NodeClassification::adv_infinite_nodes() const {
  std::vector<Node> out;
  for (std::uint64_t code = 0; code < adv_.size(); ++code) {
    Node n = node_from_code(*ctx_, code);
    if (adv_[code] == kDepthInf && is_nontrivial(*ctx_, n)) out.push_back(n);
  }
  return out;
}

std::vector<Node> NodeClassification::back_infinite_nodes() const {
  std::vector<Node> out;
  for (std::uint64_t code = 0; code < back_.size(); ++code) {
    Node n = node_from_code(*ctx_, code);
    if (back_[code] == kDepthInf && is_nontrivial(*ctx_, n)) out.push_back(n);
  }
  return out;
}

}  // namespace agm
