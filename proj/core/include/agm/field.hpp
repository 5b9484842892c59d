#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace agm {

/// Canonical encoding of a field element: for t = 1 the residue in [0, p);
/// for t > 1 the base-p value of the coefficient vector (low digit = constant term).
using Elem = std::uint32_t;

enum class ResidueClass : std::uint8_t { Zero, FourthPower, SquareNotFourth, NonSquare };

const char* to_string(ResidueClass c);

struct FieldSpec {
  std::uint32_t p = 0;  // odd characteristic
  std::uint32_t t = 1;  // extension degree
  std::uint64_t q = 0;  // p^t
  std::uint32_t q_mod8 = 0;
};

/// The set {y : y^2 = x}: empty, {0}, or two distinct roots (smaller encoding first).
class SqrtRoots {
 public:
  SqrtRoots() = default;
  explicit SqrtRoots(Elem r) : n_(1) { v_[0] = r; }
  SqrtRoots(Elem r0, Elem r1) : n_(2) {
    if (r1 < r0) std::swap(r0, r1);
    v_[0] = r0;
    v_[1] = r1;
  }
  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Elem operator[](std::size_t i) const { return v_[i]; }
  const Elem* begin() const { return v_.data(); }
  const Elem* end() const { return v_.data() + n_; }
  bool contains(Elem x) const { return (n_ > 0 && v_[0] == x) || (n_ > 1 && v_[1] == x); }

 private:
  std::array<Elem, 2> v_{};
  std::size_t n_ = 0;
};

/// Enumeration guard: default 2^20, overridden by the AGM_MAX_Q environment variable.
std::uint64_t max_enum_q();

/// Guard for O(q^2) whole-node-set enumerations; default 4096, AGM_MAX_Q overrides.
std::uint64_t max_node_enum_q();

/// Exact arithmetic in F_{p^t}, p odd, plus square/fourth-power residue
/// classification and square-root extraction. Immutable after construction.
class FieldCtx {
 public:
  static FieldCtx make(std::uint32_t p, std::uint32_t t = 1);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t q() const { return spec_.q; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t t() const { return spec_.t; }
  std::uint32_t q_mod8() const { return spec_.q_mod8; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem minus_one() const { return neg(1); }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;  // throws ZeroDivisionError on zero
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;

  ResidueClass residue_class(Elem x) const;
  bool is_square(Elem x) const;  // nonzero square
  SqrtRoots sqrt_all(Elem x) const;

  bool is_minus_one_square() const { return q_mod8() == 1 || q_mod8() == 5; }
  bool is_minus_one_fourth_power() const { return q_mod8() == 1; }

  Elem generator() const { return generator_; }
  bool has_tables() const { return !exp_.empty(); }

  /// Irreducible modulus for t > 1 (coefficients low to high, monic); empty for t = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::string to_string(Elem x) const;

 private:
  FieldCtx() = default;

  Elem mul_generic(Elem x, Elem y) const;
  Elem pow_generic(Elem x, std::uint64_t e) const;
  SqrtRoots sqrt_tonelli(Elem x) const;
  void build_tables();

  FieldSpec spec_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;            // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
};

bool is_prime(std::uint64_t n);

}  // namespace agm
