// budget.hpp — a step budget shared by the exhaustive search engines. One
// step is one elementary DP/DFS operation; exceeding the limit aborts the
// search with BudgetExceeded so callers can report bracketing bounds.
#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace zslab {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search budget exhausted") {}
};

class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit = 1'000'000'000) : limit_(limit) {}

    void tick(std::uint64_t steps = 1) {
        if (used_.fetch_add(steps, std::memory_order_relaxed) + steps > limit_) throw BudgetExceeded{};
    }
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

}  // namespace zslab
