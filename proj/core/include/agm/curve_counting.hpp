#pragma once

#include <cstdint>

#include "agm/field.hpp"

namespace agm {

/// Both routes to the trace of Frobenius of E: y^2 = x^3 - x over F_q,
/// plus the population counts predicted from it.
struct TraceRecord {
  std::uint64_t q = 0;
  std::int64_t a_q_cm = 0;
  std::int64_t a_q_brute = 0;
  std::uint64_t point_count = 0;     // #E(F_q) including the point at infinity
  std::uint64_t predicted_t_adv = 0; // |T^adv_inf| (0 when no formula applies)
  std::uint64_t predicted_s_adv = 0; // |S^adv_inf|
};

/// Exact Gaussian-integer pair; the CM computation never touches floats.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

GaussInt gauss_mul(GaussInt x, GaussInt y);
GaussInt gauss_pow(GaussInt x, std::uint32_t e);

/// The unique (n, m), both >= 0, with p = 4m^2 + (2n+1)^2 for p = 1 mod 4.
/// Asserts uniqueness over the full search range; throws NoDecompositionError
/// if none exists (a bug signal — Fermat guarantees one).
void two_square_decompose(std::uint32_t p, std::uint32_t& n, std::uint32_t& m);

/// a_{p^t} for y^2 = x^3 - x. For p = 3 mod 4 the curve is supersingular:
/// pi = sqrt(-p), so the trace is 0 for odd t and 2(-p)^{t/2} for even t.
/// For p = 1 mod 4: pi = (-1)^{n+m}(2n+1) + 2mi with p = 4m^2 + (2n+1)^2,
/// and the trace is pi^t + conj(pi)^t by exact integer powering.
std::int64_t cm_trace(std::uint32_t p, std::uint32_t t);

/// #E(F_q) of y^2 = x^3 - x, point at infinity included; direct enumeration.
std::uint64_t brute_point_count(const FieldCtx& f);

/// Affine point count of y^2 = rhs(x) for the named auxiliary curves.
std::uint64_t affine_count_2x_1px2(const FieldCtx& f);  // y^2 = 2x(1 + x^2)
std::uint64_t affine_count_x3_minus_x(const FieldCtx& f);
std::uint64_t affine_count_x3_plus_4x(const FieldCtx& f);

/// True iff the three curves above have equal counts over F_q (q = 1 mod 4),
/// confirming they are F_q-isomorphic forms.
bool curve_isomorphism_check(const FieldCtx& f);

/// Predicted (|T^adv_inf|, |S^adv_inf|): ((q-3)/2-scaled) formula for
/// q = 3 mod 4, the CM-based one for q = 5 mod 8. Throws
/// UnsupportedCongruenceError for q = 1 mod 8.
void predicted_population(std::uint32_t p, std::uint32_t t, std::uint64_t& t_adv,
                          std::uint64_t& s_adv);

TraceRecord trace_record(std::uint32_t p, std::uint32_t t);

}  // namespace agm
