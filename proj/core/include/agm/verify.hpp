#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agm/field.hpp"

namespace agm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

/// Runs every structural check applicable to the field's congruence class:
/// population formulas, stabilization, single-valuedness, quarter laws,
/// jellyfish/colon shapes, reversal isomorphism, sigma reversal, dual-route
/// trace, and the proof-step curve identities. Expensive whole-node checks
/// are skipped (not failed) above the enumeration guards.
std::vector<CheckResult> verify_field(const FieldCtx& f);

/// One row of the `count` table; cycles is the sorted cycle-length multiset.
struct CountRow {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::uint32_t q_mod8 = 0;
  std::int64_t a_cm = 0;
  std::int64_t a_brute = 0;
  std::uint64_t t_adv = 0;   // |T^adv_inf|, enumerated
  std::uint64_t s_adv = 0;   // |S^adv_inf| = (q-1) |T^adv_inf|
  std::uint64_t s_cyc = 0;   // 0 when unknown (q = 1 mod 8 above the node guard)
  std::vector<std::size_t> cycles;  // empty when no decomposition applies
  std::uint32_t tentacle_max = 0;   // only filled when computable
  std::uint32_t colon_max = 0;
  bool structure_known = false;     // cycles/s_cyc/tentacle fields are meaningful
};

CountRow count_row(const FieldCtx& f);

/// One row of the `scan` report.
struct ScanRow {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::uint32_t q_mod8 = 0;
  std::uint32_t tentacle_max = 0;
  std::uint32_t colon_max = 0;
  bool lengths_equal = false;       // tentacle_max == colon_max (predicted always)
  bool adv_single_valued = false;   // every restricted-adv vertex has out-degree 1
  bool back_single_valued = false;  // every restricted-back vertex has in-degree 1
};

ScanRow scan_row(const FieldCtx& f);

enum class CongruenceFilter { All, Mod3Of4, Mod5Of8, Mod1Of8 };

bool parse_congruence(const std::string& s, CongruenceFilter& out);
bool matches(CongruenceFilter c, std::uint64_t q);

/// Odd prime powers q = p^t in [lo, hi] passing the filter, ascending, as (p, t).
std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint64_t lo,
                                                                      std::uint64_t hi,
                                                                      CongruenceFilter c);

}  // namespace agm
