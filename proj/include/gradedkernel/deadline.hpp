#pragma once

// Cooperative per-command time limit. Long-running kernels call
// deadline_check() in their inner loops.

#include <chrono>
#include <optional>
#include <stdexcept>

namespace gk {

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline thread_local std::optional<std::chrono::steady_clock::time_point> active_deadline;
inline thread_local unsigned deadline_counter = 0;
}  // namespace detail

inline void deadline_check() {
  if (!detail::active_deadline) return;
  if (++detail::deadline_counter % 256) return;
  if (std::chrono::steady_clock::now() > *detail::active_deadline)
    throw TimeoutError("command exceeded its time limit");
}

/// Installs a deadline for the lifetime of the guard; a non-positive
/// duration means no limit.
class DeadlineGuard {
 public:
  explicit DeadlineGuard(double seconds) : previous_(detail::active_deadline) {
    if (seconds > 0)
      detail::active_deadline = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(seconds));
  }
  ~DeadlineGuard() { detail::active_deadline = previous_; }
  DeadlineGuard(const DeadlineGuard&) = delete;
  DeadlineGuard& operator=(const DeadlineGuard&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

}  // namespace gk
