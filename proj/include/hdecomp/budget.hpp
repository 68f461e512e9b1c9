#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "hdecomp/errors.hpp"

namespace hdecomp {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::optional<double> max_seconds;

  static SearchBudget nodes(std::uint64_t n) { return SearchBudget{n, std::nullopt}; }
};

/// Counts node expansions against a SearchBudget. The wall clock is sampled
/// every 4096 ticks.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    if (budget.max_nodes == 0) throw InvalidArgument("budget max_nodes must be positive");
    if (budget.max_seconds && *budget.max_seconds <= 0) throw InvalidArgument("budget max_seconds must be positive");
  }

  // Returns false once the budget is spent; stays false afterwards.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes) {
      exhausted_ = true;
    } else if (budget_.max_seconds && (nodes_ & 4095U) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      exhausted_ = elapsed.count() > *budget_.max_seconds;
    }
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace hdecomp
