#include "agm/ratio_dynamics.hpp"

#include <algorithm>

#include "agm/errors.hpp"

namespace agm {

bool is_nontrivial_k(const FieldCtx& f, Elem k) {
  return k != 0 && k != 1 && k != f.minus_one();
}

void require_nontrivial_k(const FieldCtx& f, Elem k) {
  if (!is_nontrivial_k(f, k)) throw TrivialKError(f.to_string(k));
}

Elem k_of(const FieldCtx& f, Node n) {
  require_nontrivial(f, n);
  return f.div(n.b, n.a);
}

ElemSet2 k_children(const FieldCtx& f, Elem k1) {
  require_nontrivial_k(f, k1);
  ElemSet2 out;
  Elem s = f.add(1, k1);  // nonzero on T_K
  Elem v = f.div(f.mul(f.from_int(4), k1), f.mul(s, s));
  for (Elem r : f.sqrt_all(v))
    if (is_nontrivial_k(f, r)) out.push(r);
  return out;
}

ElemSet2 k_parents(const FieldCtx& f, Elem k2) {
  require_nontrivial_k(f, k2);
  ElemSet2 out;
  // k2^2 k1^2 + (2 k2^2 - 4) k1 + k2^2 = 0; discriminant 16(1 - k2^2)
  Elem a = f.mul(k2, k2);
  Elem b = f.sub(f.mul(f.from_int(2), a), f.from_int(4));
  Elem disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, a)));
  SqrtRoots roots = f.sqrt_all(disc);
  if (roots.empty()) return out;
  Elem inv2a = f.inv(f.mul(f.from_int(2), a));
  Elem last = 0;
  for (Elem s : roots) {
    Elem k1 = f.mul(f.sub(s, b), inv2a);
    if (is_nontrivial_k(f, k1) && (out.empty() || k1 != last)) {
      out.push(k1);
      last = k1;
    }
  }
  if (out.size() == 2 && out[0] > out[1]) {
    ElemSet2 sorted;
    sorted.push(out[1]);
    sorted.push(out[0]);
    return sorted;
  }
  return out;
}

Elem sigma(const FieldCtx& f, Elem k) {
  require_nontrivial_k(f, k);
  return f.div(f.sub(1, k), f.add(1, k));
}

namespace {

std::vector<Elem> criterion_values(const FieldCtx& f, bool forward) {
  std::vector<Elem> out;
  for (Elem k = 2; k < f.q(); ++k) {
    if (!is_nontrivial_k(f, k)) continue;
    bool member;
    if (f.q_mod8() % 4 == 3) {
      // ab square <=> k square; a^2-b^2 square <=> 1-k^2 square
      Elem v = forward ? k : f.sub(1, f.mul(k, k));
      member = f.is_square(v);
    } else {
      Elem s = f.add(1, k);
      Elem v = forward ? f.mul(f.mul(f.from_int(4), k), f.mul(s, s))
                       : f.sub(1, f.mul(k, k));
      member = f.residue_class(v) == ResidueClass::FourthPower;
    }
    if (member) out.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<Elem> t_adv_infinity(const FieldCtx& f) {
  if (f.q_mod8() != 1) return criterion_values(f, true);
  return KClassification::compute(f).adv_infinite_values();
}

std::vector<Elem> t_back_infinity(const FieldCtx& f) {
  if (f.q_mod8() != 1) return criterion_values(f, false);
  return KClassification::compute(f).back_infinite_values();
}

bool verify_sigma_reversal(const FieldCtx& f) {
  std::uint64_t edges = 0, mapped = 0;
  for (Elem k1 = 2; k1 < f.q(); ++k1) {
    if (!is_nontrivial_k(f, k1)) continue;
    for (Elem k2 : k_children(f, k1)) {
      ++edges;
      if (k_children(f, sigma(f, k2)).contains(sigma(f, k1))) ++mapped;
    }
  }
  return edges == mapped;
}

BirationalReport birational_roundtrip(const FieldCtx& f) {
  BirationalReport rep;
  const Elem two = f.from_int(2);

  // Forward: every affine (x, y) with y^2 = 2x(1+x^2).
  for (Elem x = 0; x < f.q(); ++x) {
    Elem x2 = f.mul(x, x);
    Elem rhs = f.mul(f.mul(two, x), f.add(1, x2));
    for (Elem y : f.sqrt_all(rhs)) {
      ++rep.curve_points;
      Elem den = f.add(1, x2);
      if (den == 0) {
        ++rep.excluded;
        continue;
      }
      Elem k = f.div(f.sub(1, x2), den);
      Elem mu = f.div(y, den);
      // image must lie on mu^4 = 1 - k^2
      Elem mu2 = f.mul(mu, mu);
      if (f.mul(mu2, mu2) != f.sub(1, f.mul(k, k))) {
        rep.forward_roundtrip_ok = false;
        continue;
      }
      Elem kden = f.add(1, k);  // = 2/(1+x^2), never zero here
      if (kden == 0) {
        ++rep.excluded;
        continue;
      }
      Elem xr = f.div(f.mul(mu, mu), kden);
      Elem yr = f.div(f.mul(two, mu), kden);
      if (xr != x || yr != y) rep.forward_roundtrip_ok = false;

      // Chain-correspondence identity on points where both sides are defined:
      // (1 - 2x/(1+x^2)) / (1 + 2x/(1+x^2)) = (1 - mu^2) / (1 + mu^2).
      Elem num = f.add(den, f.mul(two, x));  // (1+x)^2 / scaled
      if (num == 0 || f.add(1, mu2) == 0) {
        ++rep.excluded;
        continue;
      }
      Elem lhs = f.div(f.sub(den, f.mul(two, x)), num);
      Elem rhs2 = f.div(f.sub(1, mu2), f.add(1, mu2));
      if (lhs != rhs2) rep.diagram_ok = false;
    }
  }

  // Inverse: every affine (k, mu) with mu^4 = 1 - k^2.
  for (Elem k = 0; k < f.q(); ++k) {
    Elem target = f.sub(1, f.mul(k, k));
    for (Elem mu2 : f.sqrt_all(target)) {
      for (Elem mu : f.sqrt_all(mu2)) {
        ++rep.quartic_points;
        Elem den = f.add(1, k);
        if (den == 0) {
          ++rep.excluded;
          continue;
        }
        Elem x = f.div(f.mul(mu, mu), den);
        Elem y = f.div(f.mul(two, mu), den);
        Elem x2 = f.mul(x, x);
        if (f.mul(y, y) != f.mul(f.mul(two, x), f.add(1, x2))) {
          rep.inverse_roundtrip_ok = false;
          continue;
        }
        Elem xden = f.add(1, x2);
        if (xden == 0) {
          ++rep.excluded;
          continue;
        }
        if (f.div(f.sub(1, x2), xden) != k || f.div(y, xden) != mu)
          rep.inverse_roundtrip_ok = false;
      }
    }
  }
  return rep;
}

namespace {

template <typename Step>
void refine_k(const FieldCtx& f, std::vector<std::uint32_t>& depth, Step step) {
  const std::uint64_t q = f.q();
  depth.assign(q, kDepthInf);
  std::vector<Elem> alive;
  std::vector<std::uint8_t> in(q, 0);
  for (Elem k = 2; k < q; ++k)
    if (is_nontrivial_k(f, k)) {
      alive.push_back(k);
      in[k] = 1;
    }
  std::uint32_t n = 0;
  while (true) {
    std::vector<Elem> next;
    next.reserve(alive.size());
    for (Elem k : alive) {
      bool keep = false;
      for (Elem m : step(k))
        if (in[m]) {
          keep = true;
          break;
        }
      if (keep)
        next.push_back(k);
      else
        depth[k] = n;
    }
    if (next.size() == alive.size()) break;
    for (Elem k : alive) in[k] = 0;
    for (Elem k : next) in[k] = 1;
    alive.swap(next);
    ++n;
  }
}

}  // namespace

KClassification KClassification::compute(const FieldCtx& f) {
  if (f.q() > max_enum_q()) throw FieldTooLargeError(f.q(), max_enum_q());
  KClassification c;
  c.ctx_ = &f;
  refine_k(f, c.adv_, [&f](Elem k) { return k_children(f, k); });
  refine_k(f, c.back_, [&f](Elem k) { return k_parents(f, k); });
  return c;
}

std::uint64_t KClassification::count_adv(std::uint32_t n) const {
  std::uint64_t cnt = 0;
  for (Elem k = 0; k < adv_.size(); ++k) {
    if (!is_nontrivial_k(*ctx_, k)) continue;
    std::uint32_t d = adv_[k];
    if (d == kDepthInf || (n != kDepthInf && d >= n)) ++cnt;
  }
  return cnt;
}

std::uint64_t KClassification::count_back(std::uint32_t n) const {
  std::uint64_t cnt = 0;
  for (Elem k = 0; k < back_.size(); ++k) {
    if (!is_nontrivial_k(*ctx_, k)) continue;
    std::uint32_t d = back_[k];
    if (d == kDepthInf || (n != kDepthInf && d >= n)) ++cnt;
  }
  return cnt;
}

std::vector<Elem> KClassification::adv_infinite_values() const {
  std::vector<Elem> out;
  for (Elem k = 0; k < adv_.size(); ++k)
    if (adv_[k] == kDepthInf && is_nontrivial_k(*ctx_, k)) out.push_back(k);
  return out;
}

std::vector<Elem> KClassification::back_infinite_values() const {
  std::vector<Elem> out;
  for (Elem k = 0; k < back_.size(); ++k)
    if (back_[k] == kDepthInf && is_nontrivial_k(*ctx_, k)) out.push_back(k);
  return out;
}

ElemSet2 KClassification::restricted_successors(Elem k) const {
  ElemSet2 out;
  if (!adv_infinite(k)) return out;
  for (Elem m : k_children(*ctx_, k))
    if (adv_infinite(m)) out.push(m);
  return out;
}

ElemSet2 KClassification::restricted_predecessors(Elem k) const {
  ElemSet2 out;
  if (!back_infinite(k)) return out;
  for (Elem m : k_parents(*ctx_, k))
    if (back_infinite(m)) out.push(m);
  return out;
}

}  // namespace agm
