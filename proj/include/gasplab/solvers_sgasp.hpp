#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gasplab/budget.hpp"
#include "gasplab/model.hpp"

namespace gasplab {

struct SolveStats {
    std::uint64_t branches = 0;
    double wall_ms = 0;
};

struct SolveResult {
    bool exists = false;
    std::optional<TypeCountAssignment> witness;
    SolveStats stats;
    std::string algorithm;
};

// An acyclic bipartite graph on types × activities.
struct PatternGraph {
    std::vector<BipartiteEdge> edges;
};

// Calls `visit` for every acyclic edge set in which each required type and activity has
// an edge, in a fixed order (edges indexed type-major, "absent" explored before "present").
// Stops early when `visit` returns false.
auto enumerate_acyclic_patterns(int types, int activities, const std::vector<bool> & required_types,
                                const std::vector<bool> & required_activities,
                                const std::function<bool(const PatternGraph &)> & visit) -> void;

// IR assignment of an approval instance in which the types in `perfect` place every agent,
// the others leave at least one at home, and every activity in `nonempty` is used.
// Exactly the types in `perfect` end up perfectly assigned.
auto find_ir_assignment(const TypedInstance & inst, const std::vector<bool> & perfect,
                        const std::vector<bool> & nonempty) -> std::optional<TypeCountAssignment>;

auto solve_fpt_ta(const TypedInstance & inst, const Limits & limits = default_limits()) -> SolveResult;
auto solve_xp_t(const TypedInstance & inst, const Limits & limits = default_limits()) -> SolveResult;

struct FptNOptions {
    int max_agents = 10;
    bool memoize_signatures = false; // skip partitions whose type signature was already tried
};

auto solve_fpt_n(const TypedInstance & inst, const FptNOptions & options = {},
                 const Limits & limits = default_limits()) -> SolveResult;

} // namespace gasplab
