#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace gasplab {

// Caps shared by solvers and oracles. A cap that is hit raises BudgetExceeded (or Timeout).
struct Limits {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t max_branches = UINT64_MAX; // subproblems a solver may open
    std::uint64_t max_nodes = 200'000'000;   // search nodes an oracle may visit

    static auto with_timeout(double seconds) -> Limits;
};

// Defaults, with GASPLAB_BUDGET (a positive integer) replacing both counts when set.
auto default_limits() -> Limits;

class BranchCounter {
public:
    explicit BranchCounter(const Limits & limits) : limits_(limits) {}

    // Counts one branch; checks the clock every 256 branches.
    auto tick() -> void;
    auto count() const -> std::uint64_t { return count_; }

private:
    const Limits & limits_;
    std::uint64_t count_ = 0;
};

} // namespace gasplab
