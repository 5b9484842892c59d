#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace agm {

struct NotPrimeError : std::invalid_argument {
  explicit NotPrimeError(std::uint64_t p)
      : std::invalid_argument("not an odd prime: " + std::to_string(p)) {}
};

struct CharTwoError : std::invalid_argument {
  CharTwoError() : std::invalid_argument("characteristic two is not supported") {}
};

struct OverflowError : std::invalid_argument {
  OverflowError(std::uint64_t p, std::uint32_t t)
      : std::invalid_argument("p^t exceeds the supported width (p=" + std::to_string(p) +
                              ", t=" + std::to_string(t) + ")") {}
};

struct FieldTooLargeError : std::runtime_error {
  FieldTooLargeError(std::uint64_t q, std::uint64_t limit)
      : std::runtime_error("q=" + std::to_string(q) + " exceeds the enumeration guard " +
                           std::to_string(limit) + " (set AGM_MAX_Q to override)") {}
};

struct ZeroDivisionError : std::domain_error {
  ZeroDivisionError() : std::domain_error("division by zero field element") {}
};

struct TrivialNodeError : std::invalid_argument {
  explicit TrivialNodeError(const std::string& node)
      : std::invalid_argument("trivial node: " + node) {}
};

struct TrivialKError : std::invalid_argument {
  explicit TrivialKError(const std::string& k)
      : std::invalid_argument("k-value outside T_K: " + k) {}
};

struct NotInfinitelyAdvanceableError : std::invalid_argument {
  explicit NotInfinitelyAdvanceableError(const std::string& node)
      : std::invalid_argument("node is not indefinitely advanceable: " + node) {}
};

struct NotInfinitelyBacktrackableError : std::invalid_argument {
  explicit NotInfinitelyBacktrackableError(const std::string& node)
      : std::invalid_argument("node is not indefinitely backtrackable: " + node) {}
};

// The next two must never fire for q != 1 mod 8; firing means the
// single-valuedness guarantee has been violated somewhere upstream.
struct AmbiguousAdvanceError : std::logic_error {
  explicit AmbiguousAdvanceError(const std::string& node)
      : std::logic_error("both children pass the advance criterion at " + node) {}
};

struct AmbiguousBacktrackError : std::logic_error {
  explicit AmbiguousBacktrackError(const std::string& node)
      : std::logic_error("both parents pass the backtrack criterion at " + node) {}
};

struct StructureViolationError : std::logic_error {
  explicit StructureViolationError(const std::string& what)
      : std::logic_error("jellyfish structure violation: " + what) {}
};

struct UnsupportedFormatError : std::invalid_argument {
  explicit UnsupportedFormatError(const std::string& fmt)
      : std::invalid_argument("unsupported output format: " + fmt) {}
};

struct UnsupportedCongruenceError : std::invalid_argument {
  explicit UnsupportedCongruenceError(std::uint64_t q, const std::string& what)
      : std::invalid_argument("q=" + std::to_string(q) + " (" + std::to_string(q % 8) +
                              " mod 8) is outside the applicable congruence class for " + what) {}
};

struct NoDecompositionError : std::logic_error {
  explicit NoDecompositionError(std::uint64_t p)
      : std::logic_error("no two-square decomposition found for p=" + std::to_string(p) +
                         " (must never happen for p = 1 mod 4)") {}
};

}  // namespace agm
