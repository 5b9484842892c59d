#include "agm/curve_counting.hpp"

#include <cmath>
#include <cstdlib>

#include "agm/errors.hpp"

namespace agm {

GaussInt gauss_mul(GaussInt x, GaussInt y) {
  return GaussInt{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussInt gauss_pow(GaussInt x, std::uint32_t e) {
  GaussInt r{1, 0};
  while (e) {
    if (e & 1) r = gauss_mul(r, x);
    x = gauss_mul(x, x);
    e >>= 1;
  }
  return r;
}

void two_square_decompose(std::uint32_t p, std::uint32_t& n, std::uint32_t& m) {
  // Ascending m search; Cornacchia would be the upgrade path for large p.
  bool found = false;
  for (std::uint64_t mm = 0; 4 * mm * mm < p; ++mm) {
    std::uint64_t rest = p - 4 * mm * mm;
    auto odd = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    for (std::uint64_t c = odd > 1 ? odd - 1 : 0; c <= odd + 1; ++c)
      if (c % 2 == 1 && c * c == rest) {
        if (found) throw NoDecompositionError(p);  // uniqueness violated: bug signal
        n = static_cast<std::uint32_t>((c - 1) / 2);
        m = static_cast<std::uint32_t>(mm);
        found = true;
      }
  }
  if (!found) throw NoDecompositionError(p);
}

std::int64_t cm_trace(std::uint32_t p, std::uint32_t t) {
  if (p == 2 || !is_prime(p)) throw NotPrimeError(p);
  if (p % 4 == 3) {
    if (t % 2 == 1) return 0;
    // pi = sqrt(-p): pi^t + conj^t = 2(-p)^{t/2}
    std::int64_t v = 2;
    for (std::uint32_t i = 0; i < t / 2; ++i) v *= -static_cast<std::int64_t>(p);
    return v;
  }
  std::uint32_t n = 0, m = 0;
  two_square_decompose(p, n, m);
  std::int64_t sign = (n + m) % 2 == 0 ? 1 : -1;
  GaussInt pi{sign * static_cast<std::int64_t>(2 * n + 1), 2 * static_cast<std::int64_t>(m)};
  return 2 * gauss_pow(pi, t).re;
}

namespace {

std::uint64_t affine_count(const FieldCtx& f, Elem (*rhs)(const FieldCtx&, Elem)) {
  if (f.q() > max_enum_q()) throw FieldTooLargeError(f.q(), max_enum_q());
  std::uint64_t n = 0;
  for (Elem x = 0; x < f.q(); ++x) n += f.sqrt_all(rhs(f, x)).size();
  return n;
}

Elem rhs_x3_minus_x(const FieldCtx& f, Elem x) {
  return f.sub(f.mul(f.mul(x, x), x), x);
}
Elem rhs_2x_1px2(const FieldCtx& f, Elem x) {
  return f.mul(f.mul(f.from_int(2), x), f.add(1, f.mul(x, x)));
}
Elem rhs_x3_plus_4x(const FieldCtx& f, Elem x) {
  return f.add(f.mul(f.mul(x, x), x), f.mul(f.from_int(4), x));
}

}  // namespace

std::uint64_t brute_point_count(const FieldCtx& f) {
  return affine_count(f, rhs_x3_minus_x) + 1;
}

std::uint64_t affine_count_2x_1px2(const FieldCtx& f) { return affine_count(f, rhs_2x_1px2); }
std::uint64_t affine_count_x3_minus_x(const FieldCtx& f) {
  return affine_count(f, rhs_x3_minus_x);
}
std::uint64_t affine_count_x3_plus_4x(const FieldCtx& f) {
  return affine_count(f, rhs_x3_plus_4x);
}

bool curve_isomorphism_check(const FieldCtx& f) {
  std::uint64_t n1 = affine_count_2x_1px2(f);
  std::uint64_t n2 = affine_count_x3_minus_x(f);
  std::uint64_t n3 = affine_count_x3_plus_4x(f);
  return n1 == n2 && n2 == n3;
}

void predicted_population(std::uint32_t p, std::uint32_t t, std::uint64_t& t_adv,
                          std::uint64_t& s_adv) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) q *= p;
  if (q % 4 == 3) {
    t_adv = (q - 3) / 2;
    s_adv = (q - 1) * (q - 3) / 2;
    return;
  }
  if (q % 8 != 5) throw UnsupportedCongruenceError(q, "predicted_population");
  std::int64_t a = cm_trace(p, t);
  auto tt = static_cast<std::uint64_t>((static_cast<std::int64_t>(q) - a - 7) / 4);
  t_adv = tt;
  s_adv = (q - 1) * tt;
}

TraceRecord trace_record(std::uint32_t p, std::uint32_t t) {
  FieldCtx f = FieldCtx::make(p, t);
  TraceRecord r;
  r.q = f.q();
  r.a_q_cm = cm_trace(p, t);
  r.point_count = brute_point_count(f);
  r.a_q_brute = static_cast<std::int64_t>(f.q()) + 1 - static_cast<std::int64_t>(r.point_count);
  if (f.q_mod8() != 1) predicted_population(p, t, r.predicted_t_adv, r.predicted_s_adv);
  return r;
}

}  // namespace agm
