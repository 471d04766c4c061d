#include "gasplab/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace gasplab {

SizeSetPrefs::SizeSetPrefs(std::vector<std::vector<int>> sizes_by_activity) : sizes_(std::move(sizes_by_activity))
{
    for (auto & s : sizes_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

auto SizeSetPrefs::approves(int activity, int size) const -> bool
{
    if (activity < 0 || activity >= activity_count())
        return false;
    auto & s = sizes_[activity];
    return std::binary_search(s.begin(), s.end(), size);
}

RankMap::RankMap(std::map<Alternative, Rank> ranks) : ranks_(std::move(ranks))
{
    for (auto & [alt, r] : ranks_) {
        if (alt.activity == kVoid && alt.size != 1)
            throw InputError("the void activity only has the alternative (" + std::string(kVoidId) + ", 1)");
        if (r == unlisted)
            throw InputError("rank value is reserved");
    }
    if (! ranks_.contains(Alternative{kVoid, 1}))
        throw InputError("rank map must rank (" + std::string(kVoidId) + ", 1)");
}

auto RankMap::rank(Alternative alt) const -> Rank
{
    if (alt.activity == kVoid)
        alt.size = 1;
    auto it = ranks_.find(alt);
    return it == ranks_.end() ? unlisted : it->second;
}

TypedInstance::TypedInstance(PreferenceKind kind, std::vector<std::string> activities, std::vector<AgentType> types) :
    kind_(kind), activities_(std::move(activities)), types_(std::move(types))
{
    std::set<std::string_view> seen;
    for (auto & a : activities_) {
        if (a.empty() || a == kVoidId)
            throw InputError("invalid activity id '" + a + "'");
        if (! seen.insert(a).second)
            throw InputError("duplicate activity id '" + a + "'");
    }
    seen.clear();
    for (auto & t : types_) {
        if (t.id.empty() || ! seen.insert(t.id).second)
            throw InputError("duplicate or empty type id '" + t.id + "'");
        if (t.count < 1)
            throw InputError("type '" + t.id + "' must have at least one agent");
        if (t.kind() != kind_)
            throw InputError("type '" + t.id + "' has the wrong preference kind");
        agents_ += t.count;
    }

    int A = activity_count();
    scores_.assign(types_.size(), std::vector<Score>(std::size_t(A) * stride(), RankMap::unlisted));
    void_score_.assign(types_.size(), 0);
    for (std::size_t t = 0; t < types_.size(); ++t) {
        auto & row = scores_[t];
        if (kind_ == PreferenceKind::Approval) {
            auto & p = types_[t].approvals();
            if (p.activity_count() != A)
                throw InputError("type '" + types_[t].id + "' has approvals for the wrong number of activities");
            void_score_[t] = 0;
            std::fill(row.begin(), row.end(), -1);
            for (int a = 0; a < A; ++a)
                for (int s : p.sizes(a)) {
                    if (s < 1 || s > agents_)
                        throw InputError("type '" + types_[t].id + "' approves size " + std::to_string(s) + " of '" +
                                         activities_[a] + "', outside [1, " + std::to_string(agents_) + "]");
                    row[std::size_t(a) * stride() + std::size_t(s)] = 1;
                }
        }
        else {
            auto & r = types_[t].ranks();
            void_score_[t] = r.void_rank();
            for (auto & [alt, rank] : r.entries()) {
                if (alt.activity == kVoid)
                    continue;
                if (alt.activity < 0 || alt.activity >= A)
                    throw InputError("type '" + types_[t].id + "' ranks an unknown activity");
                if (alt.size < 1 || alt.size > agents_)
                    throw InputError("type '" + types_[t].id + "' ranks size " + std::to_string(alt.size) + " of '" +
                                     activities_[alt.activity] + "', outside [1, " + std::to_string(agents_) + "]");
                row[std::size_t(alt.activity) * stride() + std::size_t(alt.size)] = rank;
            }
        }
    }
}

auto TypedInstance::find_activity(std::string_view id) const -> std::optional<int>
{
    for (int a = 0; a < activity_count(); ++a)
        if (activities_[a] == id)
            return a;
    return std::nullopt;
}

auto TypedInstance::find_type(std::string_view id) const -> std::optional<int>
{
    for (int t = 0; t < type_count(); ++t)
        if (types_[t].id == id)
            return t;
    return std::nullopt;
}

auto lift_to_ranked(const TypedInstance & inst) -> TypedInstance
{
    if (inst.kind() == PreferenceKind::Ranked)
        return inst;
    std::vector<AgentType> types;
    for (auto & t : inst.types()) {
        std::map<Alternative, RankMap::Rank> ranks{{Alternative{kVoid, 1}, 0}};
        for (int a = 0; a < inst.activity_count(); ++a)
            for (int s : t.approvals().sizes(a))
                ranks[Alternative{a, s}] = 1;
        types.push_back(AgentType{t.id, t.count, RankMap{std::move(ranks)}});
    }
    return TypedInstance{PreferenceKind::Ranked, inst.activities(), std::move(types)};
}

auto TypeCountAssignment::from_rows(const std::vector<std::vector<int>> & rows, int activities) -> TypeCountAssignment
{
    TypeCountAssignment x(int(rows.size()), activities);
    for (int t = 0; t < int(rows.size()); ++t) {
        if (int(rows[t].size()) != activities)
            throw InvalidAssignment("assignment row has the wrong number of activities");
        for (int a = 0; a < activities; ++a)
            x.at(t, a) = rows[t][a];
    }
    return x;
}

auto TypeCountAssignment::assigned(int t) const -> int
{
    int total = 0;
    for (int a = 0; a < activities_; ++a)
        total += at(t, a);
    return total;
}

auto TypeCountAssignment::size(int a) const -> int
{
    int total = 0;
    for (int t = 0; t < types_; ++t)
        total += at(t, a);
    return total;
}

auto TypeCountAssignment::sizes() const -> std::vector<int>
{
    std::vector<int> s(activities_);
    for (int a = 0; a < activities_; ++a)
        s[a] = size(a);
    return s;
}

auto TypeCountAssignment::rows() const -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> r(types_, std::vector<int>(activities_));
    for (int t = 0; t < types_; ++t)
        for (int a = 0; a < activities_; ++a)
            r[t][a] = at(t, a);
    return r;
}

auto validate_assignment(const TypedInstance & inst, const TypeCountAssignment & x) -> void
{
    if (x.types() != inst.type_count() || x.activities() != inst.activity_count())
        throw InvalidAssignment("assignment is " + std::to_string(x.types()) + "x" + std::to_string(x.activities()) +
                                ", instance has " + std::to_string(inst.type_count()) + " types and " +
                                std::to_string(inst.activity_count()) + " activities");
    for (int t = 0; t < x.types(); ++t) {
        for (int a = 0; a < x.activities(); ++a)
            if (x.at(t, a) < 0)
                throw InvalidAssignment("negative count for type '" + inst.type(t).id + "'");
        if (x.assigned(t) > inst.count(t))
            throw InvalidAssignment("type '" + inst.type(t).id + "' has " + std::to_string(inst.count(t)) +
                                    " agents but " + std::to_string(x.assigned(t)) + " are assigned");
    }
}

auto perfectly_assigned(const TypedInstance & inst, const TypeCountAssignment & x) -> std::vector<bool>
{
    std::vector<bool> perfect(inst.type_count());
    for (int t = 0; t < inst.type_count(); ++t)
        perfect[t] = x.assigned(t) == inst.count(t);
    return perfect;
}

namespace {
    auto activity_name(const std::vector<std::string> & activities, int a) -> std::string
    {
        return a == kVoid ? std::string(kVoidId) : activities.at(a);
    }

    auto describe_with(const std::vector<std::string> & activities, const std::string & who, const Violation & v)
        -> std::string
    {
        std::ostringstream out;
        switch (v.kind) {
        case ViolationKind::NotIndividuallyRational:
            out << who << " prefers " << kVoidId << " to (" << activity_name(activities, v.from) << ", " << v.from_size
                << ")";
            break;
        case ViolationKind::Deviation:
            out << who << " at (" << activity_name(activities, v.from) << ", " << v.from_size << ") envies ("
                << activity_name(activities, v.to) << ", " << v.to_size << ")";
            break;
        case ViolationKind::Disconnected:
            out << "activity " << activity_name(activities, v.from) << " is not connected in the network";
            break;
        }
        return out.str();
    }
}

auto describe(const TypedInstance & inst, const Violation & v) -> std::string
{
    std::string who = v.type >= 0 ? "type " + inst.type(v.type).id : "someone";
    return describe_with(inst.activities(), who, v);
}

auto describe(const NetworkInstance & inst, const Violation & v) -> std::string
{
    std::string who = v.agent >= 0 ? "agent " + inst.agents()[v.agent].id : "someone";
    return describe_with(inst.base().activities(), who, v);
}

auto verify_sgasp(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport
{
    if (inst.kind() != PreferenceKind::Approval)
        throw InputError("verify_sgasp needs approval preferences");
    validate_assignment(inst, x);
    StabilityReport report;
    auto sizes = x.sizes();
    for (int t = 0; t < inst.type_count(); ++t) {
        for (int a = 0; a < inst.activity_count(); ++a)
            if (x.at(t, a) > 0 && ! inst.approves(t, a, sizes[a]))
                report.violations.push_back({ViolationKind::NotIndividuallyRational, t, -1, a, kVoid, sizes[a], 1});
        if (x.assigned(t) < inst.count(t))
            for (int a = 0; a < inst.activity_count(); ++a)
                if (inst.approves(t, a, sizes[a] + 1))
                    report.violations.push_back({ViolationKind::Deviation, t, -1, kVoid, a, 1, sizes[a] + 1});
    }
    return report;
}

namespace {
    // Occupied positions of type t: (activity, size) pairs, the void one last.
    auto positions(const TypedInstance & inst, const TypeCountAssignment & x, const std::vector<int> & sizes, int t)
        -> std::vector<Alternative>
    {
        std::vector<Alternative> result;
        for (int a = 0; a < inst.activity_count(); ++a)
            if (x.at(t, a) > 0)
                result.push_back({a, sizes[a]});
        if (x.assigned(t) < inst.count(t))
            result.push_back({kVoid, 1});
        return result;
    }

    auto joined(const std::vector<int> & sizes, int a) -> Alternative
    {
        return a == kVoid ? Alternative{kVoid, 1} : Alternative{a, sizes[a] + 1};
    }
}

auto verify_gasp(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport
{
    validate_assignment(inst, x);
    StabilityReport report;
    auto sizes = x.sizes();
    for (int t = 0; t < inst.type_count(); ++t) {
        for (auto here : positions(inst, x, sizes, t)) {
            auto mine = inst.score(t, here);
            if (here.activity != kVoid && mine < inst.void_score(t))
                report.violations.push_back(
                    {ViolationKind::NotIndividuallyRational, t, -1, here.activity, kVoid, here.size, 1});
            for (int a = 0; a < inst.activity_count(); ++a)
                if (a != here.activity && inst.score(t, joined(sizes, a)) > mine)
                    report.violations.push_back(
                        {ViolationKind::Deviation, t, -1, here.activity, a, here.size, sizes[a] + 1});
        }
    }
    return report;
}

auto verify_gasp_minimal(const TypedInstance & inst, const TypeCountAssignment & x) -> StabilityReport
{
    validate_assignment(inst, x);
    StabilityReport report;
    auto sizes = x.sizes();
    for (int t = 0; t < inst.type_count(); ++t) {
        auto occupied = positions(inst, x, sizes, t);
        auto least = *std::min_element(occupied.begin(), occupied.end(), [&](Alternative p, Alternative q) {
            return inst.score(t, p) < inst.score(t, q);
        });
        auto least_score = inst.score(t, least);

        // Nobody of type t envies a seat elsewhere if the worst-off one does not.
        for (int a = kVoid; a < inst.activity_count(); ++a) {
            if (a == least.activity)
                continue;
            if (inst.score(t, joined(sizes, a)) > least_score) {
                if (a == kVoid)
                    report.violations.push_back(
                        {ViolationKind::NotIndividuallyRational, t, -1, least.activity, kVoid, least.size, 1});
                else
                    report.violations.push_back(
                        {ViolationKind::Deviation, t, -1, least.activity, a, least.size, sizes[a] + 1});
            }
        }

        // The minimal activity itself is only a target for the others.
        auto into_least = inst.score(t, joined(sizes, least.activity));
        for (auto here : occupied)
            if (here != least && into_least > inst.score(t, here))
                report.violations.push_back({ViolationKind::Deviation, t, -1, here.activity, least.activity, here.size,
                                             least.activity == kVoid ? 1 : sizes[least.activity] + 1});
    }
    return report;
}

auto gamma_preprocess(const TypedInstance & inst, const std::vector<bool> & perfect) -> GammaResult
{
    if (inst.kind() != PreferenceKind::Approval)
        throw InputError("gamma_preprocess needs approval preferences");
    if (int(perfect.size()) != inst.type_count())
        throw InputError("perfect-type mask has the wrong length");

    int A = inst.activity_count();
    GammaResult result;
    result.must_be_nonempty.assign(A, false);
    std::vector<AgentType> types;
    for (int t = 0; t < inst.type_count(); ++t) {
        std::vector<std::vector<int>> kept(A);
        for (int a = 0; a < A; ++a)
            for (int s : inst.type(t).approvals().sizes(a)) {
                bool punished = false;
                for (int u = 0; u < inst.type_count() && ! punished; ++u)
                    punished = ! perfect[u] && inst.approves(u, a, s + 1);
                if (! punished)
                    kept[a].push_back(s);
            }
        types.push_back(AgentType{inst.type(t).id, inst.count(t), SizeSetPrefs{std::move(kept)}});
    }
    for (int a = 0; a < A; ++a)
        for (int u = 0; u < inst.type_count(); ++u)
            if (! perfect[u] && inst.approves(u, a, 1))
                result.must_be_nonempty[a] = true;
    result.instance = TypedInstance{PreferenceKind::Approval, inst.activities(), std::move(types)};
    return result;
}

auto gamma_preprocess(const TypedInstance & inst, const std::vector<std::string> & perfect_ids) -> GammaResult
{
    std::vector<bool> mask(inst.type_count(), false);
    for (auto & id : perfect_ids) {
        auto t = inst.find_type(id);
        if (! t)
            throw InputError("unknown type id '" + id + "'");
        mask[*t] = true;
    }
    return gamma_preprocess(inst, mask);
}

NetworkInstance::NetworkInstance(TypedInstance base, std::vector<Agent> agents, std::vector<std::pair<int, int>> links) :
    base_(std::move(base)), agents_(std::move(agents)), links_(std::move(links))
{
    std::vector<int> per_type(base_.type_count(), 0);
    std::set<std::string_view> ids;
    for (auto & ag : agents_) {
        if (ag.type < 0 || ag.type >= base_.type_count())
            throw InputError("agent '" + ag.id + "' has an unknown type");
        if (ag.id.empty() || ! ids.insert(ag.id).second)
            throw InputError("duplicate or empty agent id '" + ag.id + "'");
        ++per_type[ag.type];
    }
    for (int t = 0; t < base_.type_count(); ++t)
        if (per_type[t] != base_.count(t))
            throw InputError("type '" + base_.type(t).id + "' declares " + std::to_string(base_.count(t)) +
                             " agents but " + std::to_string(per_type[t]) + " are listed");
    adjacency_.assign(agents_.size(), {});
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> unique;
    for (auto [u, v] : links_) {
        if (u < 0 || v < 0 || u >= agent_count() || v >= agent_count())
            throw InputError("link refers to an unknown agent");
        if (u == v)
            throw InputError("self-loop on agent '" + agents_[u].id + "'");
        if (! seen.insert(std::minmax(u, v)).second)
            continue;
        unique.emplace_back(u, v);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    links_ = std::move(unique);
    for (auto & n : adjacency_)
        std::sort(n.begin(), n.end());
}

auto NetworkInstance::find_agent(std::string_view id) const -> std::optional<int>
{
    for (int i = 0; i < agent_count(); ++i)
        if (agents_[i].id == id)
            return i;
    return std::nullopt;
}

auto verify_ggasp(const NetworkInstance & net, const AgentAssignment & pi) -> StabilityReport
{
    auto & inst = net.base();
    int A = inst.activity_count();
    if (int(pi.size()) != net.agent_count())
        throw InvalidAssignment("assignment covers " + std::to_string(pi.size()) + " agents, instance has " +
                                std::to_string(net.agent_count()));
    std::vector<int> sizes(A, 0);
    for (int v : pi) {
        if (v != kVoid && (v < 0 || v >= A))
            throw InvalidAssignment("assignment uses an unknown activity");
        if (v != kVoid)
            ++sizes[v];
    }

    StabilityReport report;
    std::vector<std::vector<int>> members(A);
    for (int i = 0; i < net.agent_count(); ++i)
        if (pi[i] != kVoid)
            members[pi[i]].push_back(i);
    for (int a = 0; a < A; ++a) {
        if (members[a].empty())
            continue;
        std::vector<bool> reached(net.agent_count(), false);
        std::vector<int> stack{members[a][0]};
        reached[members[a][0]] = true;
        int count = 0;
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++count;
            for (int w : net.neighbours(u))
                if (! reached[w] && pi[w] == a) {
                    reached[w] = true;
                    stack.push_back(w);
                }
        }
        if (count != sizes[a])
            report.violations.push_back({ViolationKind::Disconnected, -1, -1, a, kVoid, sizes[a], 0});
    }

    for (int i = 0; i < net.agent_count(); ++i) {
        int t = net.agents()[i].type;
        int c = pi[i];
        Alternative here = c == kVoid ? Alternative{kVoid, 1} : Alternative{c, sizes[c]};
        auto mine = inst.score(t, here);
        if (c != kVoid && mine < inst.void_score(t))
            report.violations.push_back({ViolationKind::NotIndividuallyRational, t, i, c, kVoid, here.size, 1});
        std::vector<bool> adjacent(A, false);
        for (int w : net.neighbours(i))
            if (pi[w] != kVoid)
                adjacent[pi[w]] = true;
        for (int a = 0; a < A; ++a) {
            if (a == c || (sizes[a] > 0 && ! adjacent[a]))
                continue;
            if (inst.score(t, {a, sizes[a] + 1}) > mine)
                report.violations.push_back({ViolationKind::Deviation, t, i, c, a, here.size, sizes[a] + 1});
        }
    }
    return report;
}

auto complete_network(const TypedInstance & inst) -> NetworkInstance
{
    std::vector<Agent> agents;
    for (int t = 0; t < inst.type_count(); ++t)
        for (int j = 1; j <= inst.count(t); ++j)
            agents.push_back(Agent{inst.type(t).id + "_" + std::to_string(j), t});
    std::vector<std::pair<int, int>> links;
    for (int u = 0; u < int(agents.size()); ++u)
        for (int v = u + 1; v < int(agents.size()); ++v)
            links.emplace_back(u, v);
    return NetworkInstance{inst, std::move(agents), std::move(links)};
}

auto expand_assignment(const NetworkInstance & net, const TypeCountAssignment & x) -> AgentAssignment
{
    validate_assignment(net.base(), x);
    AgentAssignment pi(net.agent_count(), kVoid);
    std::vector<std::vector<int>> by_type(net.base().type_count());
    for (int i = 0; i < net.agent_count(); ++i)
        by_type[net.agents()[i].type].push_back(i);
    for (int t = 0; t < x.types(); ++t) {
        std::size_t next = 0;
        for (int a = 0; a < x.activities(); ++a)
            for (int j = 0; j < x.at(t, a); ++j)
                pi[by_type[t][next++]] = a;
    }
    return pi;
}

auto collapse_assignment(const NetworkInstance & net, const AgentAssignment & pi) -> TypeCountAssignment
{
    if (int(pi.size()) != net.agent_count())
        throw InvalidAssignment("assignment covers the wrong number of agents");
    TypeCountAssignment x(net.base().type_count(), net.base().activity_count());
    for (int i = 0; i < net.agent_count(); ++i)
        if (pi[i] != kVoid)
            ++x.at(net.agents()[i].type, pi[i]);
    return x;
}

auto incidence_graph(const TypeCountAssignment & x) -> std::vector<BipartiteEdge>
{
    std::vector<BipartiteEdge> edges;
    for (int t = 0; t < x.types(); ++t)
        for (int a = 0; a < x.activities(); ++a)
            if (x.at(t, a) > 0)
                edges.emplace_back(t, a);
    return edges;
}

auto is_forest(int types, int activities, std::span<const BipartiteEdge> edges) -> bool
{
    std::vector<int> parent(std::size_t(types + activities));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [t, a] : edges) {
        int r1 = find(t), r2 = find(types + a);
        if (r1 == r2)
            return false;
        parent[r1] = r2;
    }
    return true;
}

namespace {
    // Alternating cycle t1,a1,...,tl,al: edges (t_i,a_i), (t_{i+1},a_i) and (t_1,a_l).
    auto find_cycle(const TypeCountAssignment & x) -> std::optional<std::vector<int>>
    {
        int T = x.types(), A = x.activities(), V = T + A;
        std::vector<std::vector<int>> adj(V);
        for (auto [t, a] : incidence_graph(x)) {
            adj[t].push_back(T + a);
            adj[T + a].push_back(t);
        }
        std::vector<int> parent(V, -2), depth(V, 0);
        for (int root = 0; root < V; ++root) {
            if (parent[root] != -2)
                continue;
            parent[root] = -1;
            // iterative DFS keeping a neighbour cursor per vertex
            std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
            while (! stack.empty()) {
                auto & [v, cursor] = stack.back();
                if (cursor == adj[v].size()) {
                    stack.pop_back();
                    continue;
                }
                int w = adj[v][cursor++];
                if (w == parent[v])
                    continue;
                if (parent[w] == -2) {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    stack.emplace_back(w, 0);
                    continue;
                }
                if (depth[w] >= depth[v])
                    continue;
                // back edge v -> ancestor w; the tree path w..v closes the cycle
                std::vector<int> path;
                for (int u = v; u != w; u = parent[u])
                    path.push_back(u);
                path.push_back(w);
                std::reverse(path.begin(), path.end());
                // rotate so that the cycle starts at a type vertex
                if (path[0] >= T)
                    std::rotate(path.begin(), path.begin() + 1, path.end());
                return path;
            }
        }
        return std::nullopt;
    }
}

auto compress_once(const TypeCountAssignment & x) -> TypeCountAssignment
{
    auto cycle = find_cycle(x);
    if (! cycle)
        throw StructureError("incidence graph is acyclic");
    int T = x.types();
    auto & c = *cycle;
    int l = int(c.size()) / 2;
    std::vector<int> ts(l), as(l);
    for (int i = 0; i < l; ++i) {
        ts[i] = c[2 * i];
        as[i] = c[2 * i + 1] - T;
    }
    int m = x.at(ts[0], as[0]);
    for (int i = 1; i < l; ++i)
        m = std::min(m, x.at(ts[i], as[i]));

    auto y = x;
    y.at(ts[0], as[0]) -= m;
    y.at(ts[0], as[l - 1]) += m;
    for (int i = 1; i < l; ++i) {
        y.at(ts[i], as[i]) -= m;
        y.at(ts[i], as[i - 1]) += m;
    }
    return y;
}

} // namespace gasplab
