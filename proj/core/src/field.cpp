#include "agm/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "agm/errors.hpp"

namespace agm {
namespace {

constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t{1} << 20;
constexpr std::uint64_t kDefaultNodeEnumGuard = 4096;
constexpr std::uint32_t kMaxDegree = 32;

std::uint64_t env_guard(std::uint64_t fallback) {
  if (const char* s = std::getenv("AGM_MAX_Q")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

// Digits of x base p, low first.
void decode(std::uint32_t p, std::uint32_t t, Elem x, std::uint32_t* d) {
  for (std::uint32_t i = 0; i < t; ++i) {
    d[i] = x % p;
    x /= p;
  }
}

Elem encode(std::uint32_t p, std::uint32_t t, const std::uint32_t* d) {
  std::uint64_t v = 0;
  for (std::uint32_t i = t; i-- > 0;) v = v * p + d[i];
  return static_cast<Elem>(v);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- polynomial arithmetic over F_p, used only for irreducibility search ---

using Poly = std::vector<std::uint32_t>;  // coefficients low -> high

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};  // zero polynomial
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  // mod is monic of degree m
  std::size_t m = mod.size() - 1;
  for (std::size_t i = prod.size(); i-- > m;) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t v = prod[i - m + j] + (p - mod[j]) * c % p;
      prod[i - m + j] = static_cast<std::uint32_t>(v % p);
    }
  }
  prod.resize(m);
  trim(prod);
  return prod;
}

Poly poly_pow_x(std::uint64_t e, const Poly& mod, std::uint32_t p) {
  // x^e mod (mod)
  Poly base{0, 1};
  Poly result{1};
  while (e) {
    if (e & 1) result = poly_mul_mod(result, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t mod_inv_u32(std::uint32_t a, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t qq = r / newr;
    std::swap(t -= qq * newt, newt);
    std::swap(r -= qq * newr, newr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint32_t lead_inv = mod_inv_u32(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
      if (c != 0) {
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          std::uint64_t v = a[off + i] + (p - static_cast<std::uint32_t>(c * b[i] % p));
          a[off + i] = static_cast<std::uint32_t>(v % p);
        }
      }
      trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    trim(b);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t t = static_cast<std::uint32_t>(f.size() - 1);
  // x^(p^t) == x mod f, and gcd(x^(p^(t/r)) - x, f) = 1 for prime r | t
  Poly xp = poly_pow_x(ipow(p, t), f, p);
  Poly x{0, 1};
  if (xp != x) return false;
  for (std::uint64_t r : prime_factors(t)) {
    Poly g = poly_pow_x(ipow(p, static_cast<std::uint32_t>(t / r)), f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

const char* to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::Zero: return "ZERO";
    case ResidueClass::FourthPower: return "FOURTH_POWER";
    case ResidueClass::SquareNotFourth: return "SQUARE_NOT_FOURTH";
    case ResidueClass::NonSquare: return "NONSQUARE";
  }
  return "?";
}

std::uint64_t max_enum_q() { return env_guard(kDefaultEnumGuard); }

std::uint64_t max_node_enum_q() { return env_guard(kDefaultNodeEnumGuard); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t t) {
  if (p == 2) throw CharTwoError();
  if (!is_prime(p)) throw NotPrimeError(p);
  if (t < 1 || t > kMaxDegree) throw OverflowError(p, t);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    if (q > (std::uint64_t{1} << 31) / p) throw OverflowError(p, t);
    q *= p;
  }

  FieldCtx f;
  f.spec_ = FieldSpec{p, t, q, static_cast<std::uint32_t>(q % 8)};

  if (t > 1) {
    // Lexicographically smallest monic irreducible of degree t: smallest N in
    // [p^t, 2 p^t) whose base-p digits form an irreducible polynomial.
    std::uint64_t lo = q;  // p^t has leading digit 1 exactly on [p^t, 2 p^t)
    bool found = false;
    for (std::uint64_t n = lo; n < 2 * lo; ++n) {
      Poly cand(t + 1);
      std::uint64_t v = n;
      for (std::uint32_t i = 0; i <= t; ++i) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (is_irreducible(cand, p)) {
        f.modulus_.assign(cand.begin(), cand.end());
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

  // Unit-group generator: smallest canonical encoding that has full order.
  auto factors = prime_factors(q - 1);
  for (Elem g = 2; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (f.pow_generic(g, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f.generator_ = g;
      break;
    }
  }

  if (q <= max_enum_q()) f.build_tables();
  return f;
}

void FieldCtx::build_tables() {
  const std::uint64_t q = spec_.q;
  exp_.resize(q - 1);
  log_.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_generic(x, generator_);
  }
}

Elem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % spec_.p;
  if (r < 0) r += spec_.p;
  return static_cast<Elem>(r);
}

Elem FieldCtx::add(Elem x, Elem y) const {
  if (spec_.t == 1) {
    std::uint64_t s = std::uint64_t{x} + y;
    if (s >= spec_.q) s -= spec_.q;
    return static_cast<Elem>(s);
  }
  std::uint32_t dx[kMaxDegree], dy[kMaxDegree];
  decode(spec_.p, spec_.t, x, dx);
  decode(spec_.p, spec_.t, y, dy);
  for (std::uint32_t i = 0; i < spec_.t; ++i) {
    dx[i] += dy[i];
    if (dx[i] >= spec_.p) dx[i] -= spec_.p;
  }
  return encode(spec_.p, spec_.t, dx);
}

Elem FieldCtx::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem FieldCtx::neg(Elem x) const {
  if (spec_.t == 1) return x == 0 ? 0 : static_cast<Elem>(spec_.q - x);
  std::uint32_t d[kMaxDegree];
  decode(spec_.p, spec_.t, x, d);
  for (std::uint32_t i = 0; i < spec_.t; ++i)
    if (d[i] != 0) d[i] = spec_.p - d[i];
  return encode(spec_.p, spec_.t, d);
}

Elem FieldCtx::mul_generic(Elem x, Elem y) const {
  if (spec_.t == 1)
    return static_cast<Elem>(std::uint64_t{x} * y % spec_.q);
  if (x == 0 || y == 0) return 0;
  std::uint32_t dx[kMaxDegree], dy[kMaxDegree];
  std::uint64_t prod[2 * kMaxDegree] = {0};
  const std::uint32_t p = spec_.p, t = spec_.t;
  decode(p, t, x, dx);
  decode(p, t, y, dy);
  for (std::uint32_t i = 0; i < t; ++i) {
    if (dx[i] == 0) continue;
    for (std::uint32_t j = 0; j < t; ++j) prod[i + j] += std::uint64_t{dx[i]} * dy[j];
  }
  for (std::uint32_t i = 2 * t - 1; i-- > t;) {
    std::uint64_t c = prod[i] % p;
    prod[i] = 0;
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < t; ++j)
      prod[i - t + j] += c * (p - modulus_[j]);
  }
  std::uint32_t out[kMaxDegree];
  for (std::uint32_t i = 0; i < t; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
  return encode(p, t, out);
}

Elem FieldCtx::mul(Elem x, Elem y) const {
  if (!exp_.empty()) {
    if (x == 0 || y == 0) return 0;
    std::uint64_t e = std::uint64_t{log_[x]} + log_[y];
    if (e >= spec_.q - 1) e -= spec_.q - 1;
    return exp_[e];
  }
  return mul_generic(x, y);
}

Elem FieldCtx::pow_generic(Elem x, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_generic(r, x);
    x = mul_generic(x, x);
    e >>= 1;
  }
  return r;
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const {
  if (!exp_.empty()) {
    if (x == 0) return e == 0 ? 1 : 0;
    std::uint64_t ord = spec_.q - 1;
    return exp_[static_cast<std::uint64_t>(log_[x]) % ord * (e % ord) % ord];
  }
  return pow_generic(x, e);
}

Elem FieldCtx::inv(Elem x) const {
  if (x == 0) throw ZeroDivisionError();
  if (!exp_.empty()) {
    std::uint64_t e = log_[x];
    return e == 0 ? 1 : exp_[spec_.q - 1 - e];
  }
  return pow_generic(x, spec_.q - 2);
}

ResidueClass FieldCtx::residue_class(Elem x) const {
  if (x == 0) return ResidueClass::Zero;
  const std::uint64_t ord = spec_.q - 1;
  const std::uint64_t g4 = std::gcd<std::uint64_t>(4, ord);
  if (!exp_.empty()) {
    std::uint64_t e = log_[x];
    if (e % g4 == 0) return ResidueClass::FourthPower;
    if (e % 2 == 0) return ResidueClass::SquareNotFourth;
    return ResidueClass::NonSquare;
  }
  if (pow_generic(x, ord / 2) != 1) return ResidueClass::NonSquare;
  if (pow_generic(x, ord / g4) == 1) return ResidueClass::FourthPower;
  return ResidueClass::SquareNotFourth;
}

bool FieldCtx::is_square(Elem x) const {
  ResidueClass c = residue_class(x);
  return c == ResidueClass::FourthPower || c == ResidueClass::SquareNotFourth;
}

SqrtRoots FieldCtx::sqrt_all(Elem x) const {
  if (x == 0) return SqrtRoots(0);
  if (!exp_.empty()) {
    std::uint64_t e = log_[x];
    if (e & 1) return {};
    Elem r = exp_[e / 2];
    return SqrtRoots(r, neg(r));
  }
  return sqrt_tonelli(x);
}

SqrtRoots FieldCtx::sqrt_tonelli(Elem x) const {
  if (!is_square(x)) return {};
  // Tonelli-Shanks in the cyclic unit group; generator_ is a nonsquare.
  std::uint64_t qm1 = spec_.q - 1;
  std::uint32_t s = 0;
  std::uint64_t m = qm1;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  Elem z = pow(generator_, m);
  Elem c = z;
  Elem r = pow(x, (m + 1) / 2);
  Elem u = pow(x, m);
  std::uint32_t e = s;
  while (u != 1) {
    std::uint32_t i = 0;
    Elem v = u;
    while (v != 1) {
      v = mul(v, v);
      ++i;
    }
    Elem b = c;
    for (std::uint32_t j = 0; j + i + 1 < e; ++j) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    u = mul(u, c);
    e = i;
  }
  return SqrtRoots(r, neg(r));
}

std::string FieldCtx::to_string(Elem x) const { return std::to_string(x); }

}  // namespace agm
