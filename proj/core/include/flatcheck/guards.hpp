#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace flatcheck {

/// Resource caps applied to every Groebner computation.
struct Guards {
  using Clock = std::chrono::steady_clock;

  std::size_t max_pairs = 2'000'000;
  std::uint64_t max_degree = 400;
  std::size_t max_recombination_subsets = 200'000;
  std::optional<Clock::time_point> deadline;

  static Guards with_timeout(std::chrono::duration<double> timeout);

  /// Throws GuardExceeded("timeout") once the deadline has passed.
  void check_time() const;
};

/// Guards used by operations that do not take them explicitly. Each thread
/// has its own; GuardScope installs a value for the lifetime of the scope.
const Guards& current_guards();

class GuardScope {
 public:
  explicit GuardScope(Guards guards);
  ~GuardScope();
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  Guards previous_;
};

}  // namespace flatcheck
