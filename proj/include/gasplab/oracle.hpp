#pragma once

#include <cstdint>
#include <vector>

#include "gasplab/budget.hpp"
#include "gasplab/model.hpp"

namespace gasplab {

struct OracleResult {
    bool exists = false;
    std::vector<TypeCountAssignment> stable; // first one only, unless all were requested
    std::uint64_t visited = 0;
};

struct OracleOptions {
    bool collect_all = false;
    std::uint64_t max_nodes = default_limits().max_nodes;
};

// Tries every type-count matrix, activity by activity, dropping a partial matrix as soon as a
// finished activity is not individually rational. Raises BudgetExceeded past max_nodes.
auto oracle_sgasp(const TypedInstance & inst, const OracleOptions & options = {}) -> OracleResult;
auto oracle_gasp(const TypedInstance & inst, const OracleOptions & options = {}) -> OracleResult;

struct NetworkOracleResult {
    bool exists = false;
    std::vector<AgentAssignment> stable;
    std::uint64_t visited = 0;
};

// Tries all (|A|+1)^|N| agent assignments; refuses up front when that exceeds max_nodes.
auto oracle_ggasp(const NetworkInstance & inst, const OracleOptions & options = {}) -> NetworkOracleResult;

} // namespace gasplab
