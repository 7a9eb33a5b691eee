#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace rootradii {

// Raised when a computation needs more precision than its ceiling allows.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precision ceilings. ROOTRADII_PREC_CAP, when set to a positive integer,
// replaces every ceiling at once.
inline std::optional<long> precision_cap_override() {
  static const std::optional<long> cap = []() -> std::optional<long> {
    const char* s = std::getenv("ROOTRADII_PREC_CAP");
    if (s == nullptr || *s == '\0') return std::nullopt;
    try {
      long v = std::stol(s);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }();
  return cap;
}

inline long precision_cap(long fallback) { return precision_cap_override().value_or(fallback); }

inline constexpr long kPelletPrecisionCap = 13568;
inline constexpr long kRadiiPrecisionCap = 65536;
inline constexpr long kSignPrecisionCap = 4096;

}  // namespace rootradii
