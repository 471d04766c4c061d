#include "gasplab/budget.hpp"
#include "gasplab/errors.hpp"

#include <cstdlib>
#include <string>

namespace gasplab {

auto Limits::with_timeout(double seconds) -> Limits
{
    auto l = default_limits();
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return l;
}

auto default_limits() -> Limits
{
    Limits l;
    if (const char * env = std::getenv("GASPLAB_BUDGET")) {
        char * end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw InputError("GASPLAB_BUDGET must be a positive integer, got '" + std::string(env) + "'");
        l.max_branches = v;
        l.max_nodes = v;
    }
    return l;
}

auto BranchCounter::tick() -> void
{
    if (++count_ > limits_.max_branches)
        throw BudgetExceeded("branch budget of " + std::to_string(limits_.max_branches) + " exhausted");
    if (limits_.deadline && (count_ & 255) == 0 && std::chrono::steady_clock::now() > *limits_.deadline)
        throw Timeout("time limit reached");
}

} // namespace gasplab
