#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gasplab/errors.hpp"

namespace gasplab {

// Activity index used for the void activity a_∅.
inline constexpr int kVoid = -1;
inline constexpr std::string_view kVoidId = "@empty";

struct Alternative {
    int activity = kVoid;
    int size = 1;

    friend auto operator<=>(const Alternative &, const Alternative &) = default;
};

enum class PreferenceKind { Approval, Ranked };

// Approval sets P_t(a), one sorted set of sizes per activity.
class SizeSetPrefs {
public:
    SizeSetPrefs() = default;
    explicit SizeSetPrefs(std::vector<std::vector<int>> sizes_by_activity);

    auto activity_count() const -> int { return int(sizes_.size()); }
    auto approves(int activity, int size) const -> bool;
    auto sizes(int activity) const -> const std::vector<int> & { return sizes_.at(activity); }
    auto all() const -> const std::vector<std::vector<int>> & { return sizes_; }

    friend auto operator==(const SizeSetPrefs & a, const SizeSetPrefs & b) -> bool { return a.sizes_ == b.sizes_; }

private:
    std::vector<std::vector<int>> sizes_;
};

// Weak order over alternatives: larger rank is better. Alternatives that are not
// listed are tied with each other and below everything listed.
class RankMap {
public:
    using Rank = std::int64_t;
    static constexpr Rank unlisted = std::numeric_limits<Rank>::min();

    RankMap() = default;
    explicit RankMap(std::map<Alternative, Rank> ranks);

    auto rank(Alternative alt) const -> Rank;
    auto void_rank() const -> Rank { return rank({kVoid, 1}); }
    auto entries() const -> const std::map<Alternative, Rank> & { return ranks_; }

    friend auto operator==(const RankMap &, const RankMap &) -> bool = default;

private:
    std::map<Alternative, Rank> ranks_;
};

struct AgentType {
    std::string id;
    int count = 0;
    std::variant<SizeSetPrefs, RankMap> prefs;

    auto kind() const -> PreferenceKind
    {
        return std::holds_alternative<SizeSetPrefs>(prefs) ? PreferenceKind::Approval : PreferenceKind::Ranked;
    }
    auto approvals() const -> const SizeSetPrefs & { return std::get<SizeSetPrefs>(prefs); }
    auto ranks() const -> const RankMap & { return std::get<RankMap>(prefs); }

    friend auto operator==(const AgentType &, const AgentType &) -> bool = default;
};

class TypedInstance {
public:
    using Score = std::int64_t;

    TypedInstance() : TypedInstance(PreferenceKind::Approval, {}, {}) {}
    TypedInstance(PreferenceKind kind, std::vector<std::string> activities, std::vector<AgentType> types);

    auto kind() const -> PreferenceKind { return kind_; }
    auto activities() const -> const std::vector<std::string> & { return activities_; }
    auto types() const -> const std::vector<AgentType> & { return types_; }
    auto type(int t) const -> const AgentType & { return types_.at(t); }
    auto activity_count() const -> int { return int(activities_.size()); }
    auto type_count() const -> int { return int(types_.size()); }
    auto agent_count() const -> int { return agents_; }
    auto count(int t) const -> int { return types_[t].count; }

    // Utility of an alternative for type t, comparable across alternatives of the same type.
    // Approval instances score approved 1, (a_∅,1) 0, anything else -1.
    auto score(int t, Alternative alt) const -> Score
    {
        if (alt.activity == kVoid)
            return void_score_[t];
        if (alt.size < 1 || alt.size > agents_ + 1)
            return RankMap::unlisted;
        return scores_[t][std::size_t(alt.activity) * stride() + std::size_t(alt.size)];
    }
    auto void_score(int t) const -> Score { return void_score_[t]; }

    // Only meaningful for approval instances.
    auto approves(int t, int activity, int size) const -> bool
    {
        return score(t, {activity, size}) > void_score_[t];
    }

    auto find_activity(std::string_view id) const -> std::optional<int>;
    auto find_type(std::string_view id) const -> std::optional<int>;

    friend auto operator==(const TypedInstance & a, const TypedInstance & b) -> bool
    {
        return a.kind_ == b.kind_ && a.activities_ == b.activities_ && a.types_ == b.types_;
    }

private:
    auto stride() const -> std::size_t { return std::size_t(agents_) + 2; }

    PreferenceKind kind_;
    std::vector<std::string> activities_;
    std::vector<AgentType> types_;
    int agents_ = 0;
    std::vector<std::vector<Score>> scores_;
    std::vector<Score> void_score_;
};

// Rewrites approval preferences as the equivalent rank maps (approved > (a_∅,1)).
auto lift_to_ranked(const TypedInstance & inst) -> TypedInstance;

class TypeCountAssignment {
public:
    TypeCountAssignment() = default;
    TypeCountAssignment(int types, int activities) :
        types_(types), activities_(activities), counts_(std::size_t(types) * std::size_t(activities), 0)
    {
    }
    static auto from_rows(const std::vector<std::vector<int>> & rows, int activities) -> TypeCountAssignment;

    auto types() const -> int { return types_; }
    auto activities() const -> int { return activities_; }
    auto at(int t, int a) const -> int { return counts_[index(t, a)]; }
    auto at(int t, int a) -> int & { return counts_[index(t, a)]; }
    auto assigned(int t) const -> int;
    auto size(int a) const -> int;
    auto sizes() const -> std::vector<int>;
    auto rows() const -> std::vector<std::vector<int>>;

    friend auto operator==(const TypeCountAssignment &, const TypeCountAssignment &) -> bool = default;

private:
    auto index(int t, int a) const -> std::size_t { return std::size_t(t) * std::size_t(activities_) + std::size_t(a); }

    int types_ = 0;
    int activities_ = 0;
    std::vector<int> counts_;
};

// Throws InvalidAssignment on a dimension mismatch, negative entry or row overflow.
auto validate_assignment(const TypedInstance & inst, const TypeCountAssignment & x) -> void;

// Types with every agent assigned to a real activity.
auto perfectly_assigned(const TypedInstance & inst, const TypeCountAssignment & x) -> std::vector<bool>;

enum class ViolationKind { NotIndividuallyRational, Deviation, Disconnected };

struct Violation {
    ViolationKind kind = ViolationKind::Deviation;
    int type = -1;
    int agent = -1;        // set for network instances
    int from = kVoid;      // where the agent currently is
    int to = kVoid;        // deviation target
    int from_size = 0;
    int to_size = 0;       // size after joining `to`

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

struct StabilityReport {
    std::vector<Violation> violations;
    auto stable() const -> bool { return violations.empty(); }
};

auto describe(const TypedInstance & inst, const Violation & v) -> std::string;

auto verify_sgasp(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport;
auto verify_gasp(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport;

// Same verdict as verify_gasp, checked only against each type's minimal occupied alternative.
auto verify_gasp_minimal(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport;

struct GammaResult {
    TypedInstance instance;
    std::vector<bool> must_be_nonempty;
};

// Strips P_t(a) of every size s that some type outside `perfect` would punish by joining
// (s+1 approved), and marks activities some type outside `perfect` approves at size 1.
auto gamma_preprocess(const TypedInstance & inst, const std::vector<bool> & perfect) -> GammaResult;
auto gamma_preprocess(const TypedInstance & inst, const std::vector<std::string> & perfect_ids) -> GammaResult;

struct Agent {
    std::string id;
    int type = 0;

    friend auto operator==(const Agent &, const Agent &) -> bool = default;
};

class NetworkInstance {
public:
    NetworkInstance() = default;
    NetworkInstance(TypedInstance base, std::vector<Agent> agents, std::vector<std::pair<int, int>> links);

    auto base() const -> const TypedInstance & { return base_; }
    auto agents() const -> const std::vector<Agent> & { return agents_; }
    auto agent_count() const -> int { return int(agents_.size()); }
    auto links() const -> const std::vector<std::pair<int, int>> & { return links_; }
    auto neighbours(int agent) const -> const std::vector<int> & { return adjacency_.at(agent); }
    auto find_agent(std::string_view id) const -> std::optional<int>;

    friend auto operator==(const NetworkInstance & a, const NetworkInstance & b) -> bool
    {
        return a.base_ == b.base_ && a.agents_ == b.agents_ && a.links_ == b.links_;
    }

private:
    TypedInstance base_;
    std::vector<Agent> agents_;
    std::vector<std::pair<int, int>> links_;
    std::vector<std::vector<int>> adjacency_;
};

// Activity per agent, kVoid for a_∅.
using AgentAssignment = std::vector<int>;

auto verify_ggasp(const NetworkInstance & inst, const AgentAssignment & pi) -> StabilityReport;
auto describe(const NetworkInstance & inst, const Violation & v) -> std::string;

// Agents t1_1..t1_c1, t2_1.. in type order, every pair linked.
auto complete_network(const TypedInstance & inst) -> NetworkInstance;
// Fills each type's activities with its agents in agent order.
auto expand_assignment(const NetworkInstance & net, const TypeCountAssignment & x) -> AgentAssignment;
auto collapse_assignment(const NetworkInstance & net, const AgentAssignment & pi) -> TypeCountAssignment;

using BipartiteEdge = std::pair<int, int>; // (type, activity)

auto incidence_graph(const TypeCountAssignment & x) -> std::vector<BipartiteEdge>;
auto is_forest(int types, int activities, std::span<const BipartiteEdge> edges) -> bool;

// Shifts agents around the first cycle of the incidence graph until one of its edges
// vanishes. Row sums, activity sizes and support are kept. Throws StructureError when acyclic.
auto compress_once(const TypeCountAssignment & x) -> TypeCountAssignment;

} // namespace gasplab
