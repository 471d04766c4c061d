#pragma once

#include <vector>

#include "gasplab/budget.hpp"
#include "gasplab/model.hpp"
#include "gasplab/solvers_sgasp.hpp"

namespace gasplab {

// Worst alternative each type is guessed to experience. (a_∅,1) means the type keeps
// somebody at home; anything else means it is perfectly assigned.
using MinimalGuess = std::vector<Alternative>;

// Approval instance whose perfect-and-IR assignments are the stable assignments of the
// ranked instance realising the guess.
struct DerivedSGasp {
    TypedInstance instance;             // activities: the originals, then the overflow activity
    std::vector<bool> must_be_nonempty;
    std::vector<int> origin;            // derived type -> original type
    std::vector<bool> pinned;           // derived type is the single agent holding the guess
    int overflow_activity = 0;
};

inline constexpr std::string_view kOverflowId = "@phi";

// Throws InvalidGuess when a guessed alternative is worse than (a_∅,1) or out of range.
auto gtosg_reduce(const TypedInstance & gasp, const MinimalGuess & guess) -> DerivedSGasp;

// Folds an assignment of the derived instance back onto the original types.
auto lift_assignment(const TypedInstance & gasp, const DerivedSGasp & derived, const TypeCountAssignment & y)
    -> TypeCountAssignment;

// Candidates for one type: (a_∅,1) and every (a,i) at least as good as it. Best first; ties
// broken by activity (a_∅ first), then size.
auto guess_candidates(const TypedInstance & gasp, int type) -> std::vector<Alternative>;

struct XpGaspOptions {
    int max_types = 4;
};

auto solve_xp_gasp(const TypedInstance & gasp, const XpGaspOptions & options = {},
                   const Limits & limits = default_limits()) -> SolveResult;

} // namespace gasplab
