#pragma once

// Slow, obviously-correct references used to cross-check the library. Nothing here calls the
// library's scoring, verifiers or solvers; only the data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gasplab/generators.hpp"
#include "gasplab/model.hpp"

namespace ref {

using gasplab::AgentType;
using gasplab::Alternative;
using gasplab::kVoid;
using gasplab::NetworkInstance;
using gasplab::PreferenceKind;
using gasplab::RankMap;
using gasplab::SizeSetPrefs;
using gasplab::TypeCountAssignment;
using gasplab::TypedInstance;

// Builders -------------------------------------------------------------------------------

inline auto approval(std::string id, int count, const std::vector<std::vector<int>> & sizes) -> AgentType
{
    return AgentType{std::move(id), count, SizeSetPrefs{sizes}};
}

// Ranked type from (activity, size, rank) triples; activity kVoid is a_∅.
inline auto ranked(std::string id, int count, const std::vector<std::tuple<int, int, std::int64_t>> & entries)
    -> AgentType
{
    std::map<Alternative, RankMap::Rank> m;
    for (auto [a, s, r] : entries)
        m[{a, s}] = r;
    return AgentType{std::move(id), count, RankMap{m}};
}

inline auto activities(int n) -> std::vector<std::string>
{
    std::vector<std::string> ids;
    for (int a = 0; a < n; ++a)
        ids.push_back("a" + std::to_string(a + 1));
    return ids;
}

inline auto sgasp(int acts, std::vector<AgentType> types) -> TypedInstance
{
    return TypedInstance{PreferenceKind::Approval, activities(acts), std::move(types)};
}

inline auto gasp(int acts, std::vector<AgentType> types) -> TypedInstance
{
    return TypedInstance{PreferenceKind::Ranked, activities(acts), std::move(types)};
}

// Preferences straight from the type record -----------------------------------------------

// Approval: approved 1, a_∅ 0, anything else -1. Ranked: the listed rank.
inline auto utility(const AgentType & t, Alternative x) -> std::int64_t
{
    if (t.kind() == PreferenceKind::Approval) {
        if (x.activity == kVoid)
            return 0;
        auto & sizes = t.approvals().sizes(x.activity);
        for (int s : sizes)
            if (s == x.size)
                return 1;
        return -1;
    }
    auto & e = t.ranks().entries();
    auto it = e.find(x);
    return it == e.end() ? RankMap::unlisted : it->second;
}

// One agent per entry: (type, activity).
inline auto agents_of(const TypedInstance & inst, const TypeCountAssignment & x) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> agents;
    for (int t = 0; t < inst.type_count(); ++t) {
        int placed = 0;
        for (int a = 0; a < inst.activity_count(); ++a)
            for (int c = 0; c < x.at(t, a); ++c, ++placed)
                agents.emplace_back(t, a);
        for (; placed < inst.count(t); ++placed)
            agents.emplace_back(t, kVoid);
    }
    return agents;
}

// Stability checked agent by agent against every possible move, a_∅ included.
inline auto stable(const TypedInstance & inst, const TypeCountAssignment & x) -> bool
{
    auto agents = agents_of(inst, x);
    std::vector<int> size(inst.activity_count(), 0);
    for (auto [t, a] : agents)
        if (a != kVoid)
            ++size[a];
    for (auto [t, a] : agents) {
        auto & type = inst.type(t);
        Alternative here = a == kVoid ? Alternative{kVoid, 1} : Alternative{a, size[a]};
        auto now = utility(type, here);
        if (a != kVoid && now < utility(type, {kVoid, 1}))
            return false;
        for (int b = 0; b < inst.activity_count(); ++b)
            if (b != a && utility(type, {b, size[b] + 1}) > now)
                return false;
    }
    return true;
}

// Every type-count matrix, one type row at a time.
inline auto for_each_assignment(const TypedInstance & inst, const std::function<void(const TypeCountAssignment &)> & f)
    -> void
{
    int T = inst.type_count(), A = inst.activity_count();
    TypeCountAssignment x(T, A);
    std::function<void(int, int, int)> rec = [&](int t, int a, int left) {
        if (t == T) {
            f(x);
            return;
        }
        if (a == A) {
            rec(t + 1, 0, t + 1 < T ? inst.count(t + 1) : 0);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            x.at(t, a) = c;
            rec(t, a + 1, left - c);
        }
        x.at(t, a) = 0;
    };
    rec(0, 0, T > 0 ? inst.count(0) : 0);
}

inline auto exists(const TypedInstance & inst) -> bool
{
    bool found = false;
    for_each_assignment(inst, [&](const TypeCountAssignment & x) { found = found || stable(inst, x); });
    return found;
}

// Network stability: IR, link-aware deviations (empty targets exempt), and connected coalitions.
inline auto stable(const NetworkInstance & net, const std::vector<int> & pi) -> bool
{
    auto & base = net.base();
    int N = net.agent_count();
    std::vector<std::vector<int>> adj(N);
    for (auto [u, v] : net.links()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> size(base.activity_count(), 0);
    for (int a : pi)
        if (a != kVoid)
            ++size[a];
    for (int i = 0; i < N; ++i) {
        auto & type = base.type(net.agents()[i].type);
        Alternative here = pi[i] == kVoid ? Alternative{kVoid, 1} : Alternative{pi[i], size[pi[i]]};
        auto now = utility(type, here);
        if (pi[i] != kVoid && now < utility(type, {kVoid, 1}))
            return false;
        for (int b = 0; b < base.activity_count(); ++b) {
            if (b == pi[i] || utility(type, {b, size[b] + 1}) <= now)
                continue;
            bool linked = size[b] == 0;
            for (int j : adj[i])
                linked = linked || pi[j] == b;
            if (linked)
                return false;
        }
    }
    for (int b = 0; b < base.activity_count(); ++b) {
        std::vector<int> members;
        for (int i = 0; i < N; ++i)
            if (pi[i] == b)
                members.push_back(i);
        if (members.empty())
            continue;
        std::vector<char> seen(N, 0);
        std::queue<int> q;
        q.push(members[0]);
        seen[members[0]] = 1;
        std::size_t reached = 0;
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            ++reached;
            for (int v : adj[u])
                if (! seen[v] && pi[v] == b) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        if (reached != members.size())
            return false;
    }
    return true;
}

// Subset sums ------------------------------------------------------------------------------

// {r - s_1 - ... - s_l} over all choices with every running value non-negative.
inline auto pss(const std::vector<int> & targets, const std::vector<std::vector<int>> & sources) -> std::set<int>
{
    std::set<int> out;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
        if (left < 0)
            return;
        if (i == sources.size()) {
            out.insert(left);
            return;
        }
        for (int s : sources[i])
            go(i + 1, left - s);
    };
    for (int r : targets)
        go(0, r);
    return out;
}

// Edge values are bounded by the largest label; edges are fixed in order and a vertex is
// checked once its last edge is set.
inline auto tss(const std::vector<std::vector<int>> & labels, const std::vector<std::pair<int, int>> & edges) -> bool
{
    int V = int(labels.size()), top = 0;
    for (auto & l : labels)
        for (int x : l)
            top = std::max(top, x);
    std::vector<int> last(V, -1), sum(V, 0);
    for (int e = 0; e < int(edges.size()); ++e) {
        last[edges[e].first] = e;
        last[edges[e].second] = e;
    }
    auto fits = [&](int v) {
        for (int x : labels[v])
            if (x == sum[v])
                return true;
        return false;
    };
    for (int v = 0; v < V; ++v)
        if (last[v] < 0 && ! fits(v))
            return false;
    std::function<bool(int)> go = [&](int e) -> bool {
        if (e == int(edges.size()))
            return true;
        auto [u, v] = edges[e];
        for (int x = 0; x <= top; ++x) {
            sum[u] += x;
            sum[v] += x;
            bool ok = sum[u] <= top && sum[v] <= top && (last[u] != e || fits(u)) && (last[v] != e || fits(v));
            if (ok && go(e + 1))
                return true;
            sum[u] -= x;
            sum[v] -= x;
        }
        return false;
    };
    return go(0);
}

// Every capped sum with one vector per set.
inline auto mpss(const std::vector<std::vector<std::vector<int>>> & sets, const std::vector<int> & caps)
    -> std::set<std::vector<int>>
{
    std::set<std::vector<int>> out;
    std::vector<int> sum(caps.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == sets.size()) {
            for (std::size_t k = 0; k < caps.size(); ++k)
                if (sum[k] > caps[k])
                    return;
            out.insert(sum);
            return;
        }
        for (auto & v : sets[i]) {
            for (std::size_t k = 0; k < caps.size(); ++k)
                sum[k] += v[k];
            go(i + 1);
            for (std::size_t k = 0; k < caps.size(); ++k)
                sum[k] -= v[k];
        }
    };
    go(0);
    return out;
}

// Partitioned clique by trying every vertex choice.
inline auto has_clique(const gasplab::PartitionedClique & pc) -> bool
{
    std::set<std::tuple<int, int, int, int>> e;
    for (auto & x : pc.edges) {
        e.insert({x.i, x.u, x.j, x.v});
        e.insert({x.j, x.v, x.i, x.u});
    }
    std::vector<int> pick(pc.k, 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == pc.k)
            return true;
        for (int v = 0; v < pc.n; ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = e.contains({j, pick[j], i, v});
            pick[i] = v;
            if (ok && go(i + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

} // namespace ref
