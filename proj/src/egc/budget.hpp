#ifndef EGC_BUDGET_HPP
#define EGC_BUDGET_HPP

// Resource caps for the basis engine. Exceeding a cap always aborts with
// an explicit error; there is no silent partial answer.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace egc {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
  int64_t max_pairs = 10'000'000;
  int64_t wall_ms = 30 * 60 * 1000;

  // Environment override (EGCERT_BUDGET="pairs:seconds", either part may
  // be empty), then CLI flags on top.
  static Budget defaults_from_env();

  static Budget parse(const std::string& spec);
};

class BudgetClock {
public:
  explicit BudgetClock(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now())
  {
  }

  void count_pair()
  {
    if (++pairs_ > budget_.max_pairs)
      throw BudgetExceeded("pair budget exceeded (" + std::to_string(budget_.max_pairs) + ")");
    if ((pairs_ & 0x3ff) == 0) check_wall();
  }

  void check_wall() const
  {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    if (ms > budget_.wall_ms)
      throw BudgetExceeded("wall-clock budget exceeded (" + std::to_string(budget_.wall_ms) +
                           " ms)");
  }

  int64_t pairs() const { return pairs_; }

private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  int64_t pairs_ = 0;
};

} // namespace egc

#endif
