#pragma once

#include <stdexcept>
#include <string>

namespace pa {

inline constexpr int kDefaultMaxN = 6;

/// Upper bound on n for operations whose output grows like (2n)!/n!.
struct EnumerationLimits {
  int max_n = kDefaultMaxN;

  /// Default cap, overridden by the PA_MAX_N environment variable when set.
  static EnumerationLimits from_environment();
};

class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(int n, int cap)
      : std::runtime_error("n=" + std::to_string(n) + " exceeds the resource cap " +
                           std::to_string(cap) + " (raise it with --max-n or PA_MAX_N)"),
        n_(n),
        cap_(cap) {}

  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

/// Throws std::invalid_argument for n < 1 and ResourceCapExceeded above the cap.
void check_enumeration(int n, const EnumerationLimits& limits);

/// Throws std::invalid_argument unless 1 <= n <= kMaxN.
void check_dimension(int n);

}  // namespace pa
