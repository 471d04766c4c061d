#include "gasplab/solvers_sgasp.hpp"
#include "gasplab/subsetsum.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace gasplab {

namespace {
    using Clock = std::chrono::steady_clock;

    auto elapsed_ms(Clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    auto require_approval(const TypedInstance & inst) -> void
    {
        if (inst.kind() != PreferenceKind::Approval)
            throw InputError("this solver needs approval preferences");
    }

    auto confirm(const TypedInstance & inst, const TypeCountAssignment & x, const char * who) -> void
    {
        auto report = verify_sgasp(inst, x);
        if (! report.stable())
            throw InternalError(std::string(who) + " produced an unstable assignment: " +
                                describe(inst, report.violations.front()));
    }

    auto mask_of(unsigned long long bits, int n) -> std::vector<bool>
    {
        std::vector<bool> m(n);
        for (int i = 0; i < n; ++i)
            m[i] = (bits >> i) & 1;
        return m;
    }

    auto subsets_of(int types) -> unsigned long long
    {
        if (types >= 63)
            throw BudgetExceeded("too many types to enumerate subsets");
        return 1ULL << types;
    }
}

auto enumerate_acyclic_patterns(int types, int activities, const std::vector<bool> & required_types,
                                const std::vector<bool> & required_activities,
                                const std::function<bool(const PatternGraph &)> & visit) -> void
{
    if (int(required_types.size()) != types || int(required_activities.size()) != activities)
        throw InputError("required masks have the wrong length");
    int E = types * activities;
    std::vector<int> parent(std::size_t(types + activities));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> type_degree(types, 0), activity_degree(activities, 0);
    PatternGraph graph;
    bool stopped = false;

    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v];
        return v;
    };

    auto go = [&](auto & self, int e) -> void {
        if (stopped)
            return;
        if (e == E) {
            if (! visit(graph))
                stopped = true;
            return;
        }
        int t = e / activities, a = e % activities;

        // leave the edge out, unless that strands a required vertex
        bool type_done = a == activities - 1, activity_done = t == types - 1;
        if (! (type_done && required_types[t] && type_degree[t] == 0) &&
            ! (activity_done && required_activities[a] && activity_degree[a] == 0))
            self(self, e + 1);

        int r1 = find(t), r2 = find(types + a);
        if (r1 == r2 || stopped)
            return;
        parent[r1] = r2;
        ++type_degree[t];
        ++activity_degree[a];
        graph.edges.emplace_back(t, a);
        self(self, e + 1);
        graph.edges.pop_back();
        --type_degree[t];
        --activity_degree[a];
        parent[r1] = r1;
    };
    go(go, 0);
}

auto find_ir_assignment(const TypedInstance & inst, const std::vector<bool> & perfect,
                        const std::vector<bool> & nonempty) -> std::optional<TypeCountAssignment>
{
    require_approval(inst);
    int T = inst.type_count(), A = inst.activity_count();
    if (int(perfect.size()) != T || int(nonempty.size()) != A)
        throw InputError("masks have the wrong length");

    VectorFamily family;
    family.dimension = T;
    for (int t = 0; t < T; ++t)
        family.caps.push_back(inst.count(t));
    int total = inst.agent_count();

    for (int a = 0; a < A; ++a) {
        std::vector<IntVector> set;
        if (! nonempty[a])
            set.push_back(IntVector(T, 0));
        std::set<int> sizes;
        for (int t = 0; t < T; ++t)
            for (int s : inst.type(t).approvals().sizes(a))
                sizes.insert(s);
        for (int p : sizes) {
            if (p > total)
                break;
            std::vector<int> who;
            for (int t = 0; t < T; ++t)
                if (inst.approves(t, a, p))
                    who.push_back(t);
            // every split of p over the approving types
            IntVector v(T, 0);
            auto split = [&](auto & self, std::size_t i, int left) -> void {
                if (i == who.size()) {
                    if (left == 0)
                        set.push_back(v);
                    return;
                }
                int t = who[i];
                for (int c = 0; c <= std::min(left, inst.count(t)); ++c) {
                    v[t] = c;
                    self(self, i + 1, left - c);
                }
                v[t] = 0;
            };
            split(split, 0, p);
        }
        if (set.empty())
            return std::nullopt;
        family.sets.push_back(std::move(set));
    }

    MpssSolver solver{family};
    if (solver.has_empty_set())
        return std::nullopt;

    // targets: full rows for perfect types, anything short of full for the rest
    IntVector target(T, 0);
    std::optional<IntVector> hit;
    auto search = [&](auto & self, int t) -> bool {
        if (t == T) {
            if (solver.contains(target)) {
                hit = target;
                return true;
            }
            return false;
        }
        if (perfect[t]) {
            target[t] = inst.count(t);
            return self(self, t + 1);
        }
        for (int c = 0; c < inst.count(t); ++c) {
            target[t] = c;
            if (self(self, t + 1))
                return true;
        }
        return false;
    };
    if (! search(search, 0))
        return std::nullopt;

    auto choice = solver.witness(*hit);
    TypeCountAssignment x(T, A);
    for (int a = 0; a < A; ++a)
        for (int t = 0; t < T; ++t)
            x.at(t, a) = family.sets[a][choice[a]][t];
    return x;
}

auto solve_fpt_ta(const TypedInstance & inst, const Limits & limits) -> SolveResult
{
    require_approval(inst);
    auto start = Clock::now();
    SolveResult result;
    result.algorithm = "fpt-ta";
    BranchCounter branches{limits};
    int T = inst.type_count(), A = inst.activity_count();

    for (unsigned long long q = 0; q < subsets_of(T) && ! result.exists; ++q) {
        auto perfect = mask_of(q, T);
        auto g = gamma_preprocess(inst, perfect);
        auto & reduced = g.instance;

        enumerate_acyclic_patterns(T, A, perfect, g.must_be_nonempty, [&](const PatternGraph & pattern) {
            branches.tick();
            LabeledTree tree;
            tree.labels.resize(std::size_t(T + A));
            for (int t = 0; t < T; ++t) {
                if (perfect[t])
                    tree.labels[t] = {inst.count(t)};
                else {
                    tree.labels[t].resize(inst.count(t));
                    std::iota(tree.labels[t].begin(), tree.labels[t].end(), 0);
                }
            }
            std::vector<std::vector<int>> around(A);
            for (auto [t, a] : pattern.edges) {
                around[a].push_back(t);
                tree.edges.emplace_back(t, T + a);
            }
            for (int a = 0; a < A; ++a) {
                auto & label = tree.labels[T + a];
                if (around[a].empty()) {
                    label = {0};
                    continue;
                }
                label = reduced.type(around[a][0]).approvals().sizes(a);
                for (std::size_t i = 1; i < around[a].size() && ! label.empty(); ++i) {
                    auto & other = reduced.type(around[a][i]).approvals().sizes(a);
                    IntSet both;
                    std::set_intersection(label.begin(), label.end(), other.begin(), other.end(),
                                          std::back_inserter(both));
                    label = std::move(both);
                }
                if (label.empty())
                    return true;
            }

            auto tss = solve_tss(tree);
            if (! tss.feasible)
                return true;
            TypeCountAssignment x(T, A);
            for (std::size_t e = 0; e < pattern.edges.size(); ++e)
                x.at(pattern.edges[e].first, pattern.edges[e].second) = tss.edge_values[e];
            confirm(inst, x, "fpt-ta");
            result.exists = true;
            result.witness = std::move(x);
            return false;
        });
    }
    result.stats.branches = branches.count();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

auto solve_xp_t(const TypedInstance & inst, const Limits & limits) -> SolveResult
{
    require_approval(inst);
    auto start = Clock::now();
    SolveResult result;
    result.algorithm = "xp-t";
    BranchCounter branches{limits};
    int T = inst.type_count();

    for (unsigned long long q = 0; q < subsets_of(T); ++q) {
        branches.tick();
        auto perfect = mask_of(q, T);
        auto g = gamma_preprocess(inst, perfect);
        if (auto x = find_ir_assignment(g.instance, perfect, g.must_be_nonempty)) {
            confirm(inst, *x, "xp-t");
            result.exists = true;
            result.witness = std::move(x);
            break;
        }
    }
    result.stats.branches = branches.count();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

namespace {
    // Feasible circulation with lower bounds: each block matched to one activity it accepts,
    // and every activity in `needed` used. Returns the activity of each block.
    auto match_blocks(const std::vector<std::vector<int>> & accepts, const std::vector<bool> & needed, int activities)
        -> std::optional<std::vector<int>>
    {
        int B = int(accepts.size());
        int src = 0, snk = 1, super_src = 2, super_snk = 3, first_block = 4, first_act = 4 + B;
        int V = first_act + activities;
        std::vector<std::vector<int>> cap(V, std::vector<int>(V, 0));
        int demand = 0;
        for (int b = 0; b < B; ++b) {
            cap[super_src][first_block + b] += 1; // lower bound 1 on src -> block
            cap[src][super_snk] += 1;
            ++demand;
            for (int a : accepts[b])
                cap[first_block + b][first_act + a] = 1;
        }
        for (int a = 0; a < activities; ++a) {
            if (needed[a]) {
                cap[super_src][snk] += 1;
                cap[first_act + a][super_snk] += 1;
                ++demand;
            }
            else
                cap[first_act + a][snk] = 1;
        }
        cap[snk][src] = B + activities + 1;

        int flow = 0;
        std::vector<int> prev(V);
        while (true) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[super_src] = super_src;
            std::vector<int> queue{super_src};
            for (std::size_t h = 0; h < queue.size() && prev[super_snk] == -1; ++h) {
                int u = queue[h];
                for (int w = 0; w < V; ++w)
                    if (prev[w] == -1 && cap[u][w] > 0) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
            }
            if (prev[super_snk] == -1)
                break;
            for (int v = super_snk; v != super_src; v = prev[v]) {
                --cap[prev[v]][v];
                ++cap[v][prev[v]];
            }
            ++flow;
        }
        if (flow != demand)
            return std::nullopt;

        std::vector<int> chosen(B, -1);
        for (int b = 0; b < B; ++b)
            for (int a : accepts[b])
                if (cap[first_block + b][first_act + a] == 0)
                    chosen[b] = a;
        return chosen;
    }
}

auto solve_fpt_n(const TypedInstance & inst, const FptNOptions & options, const Limits & limits) -> SolveResult
{
    require_approval(inst);
    auto start = Clock::now();
    int n = inst.agent_count(), T = inst.type_count(), A = inst.activity_count();
    if (n > options.max_agents)
        throw BudgetExceeded("fpt-n is capped at " + std::to_string(options.max_agents) + " agents, instance has " +
                             std::to_string(n));

    SolveResult result;
    result.algorithm = "fpt-n";
    BranchCounter branches{limits};

    std::vector<int> type_of;
    for (int t = 0; t < T; ++t)
        for (int j = 0; j < inst.count(t); ++j)
            type_of.push_back(t);

    std::set<std::vector<int>> tried;

    for (unsigned long long home = 0; home < (1ULL << n) && ! result.exists; ++home) {
        std::vector<bool> has_home(T, false);
        std::vector<int> home_count(T, 0);
        std::vector<int> rest;
        for (int i = 0; i < n; ++i) {
            if ((home >> i) & 1) {
                has_home[type_of[i]] = true;
                ++home_count[type_of[i]];
            }
            else
                rest.push_back(i);
        }
        // a coalition may not sit at a size some home agent would join
        auto fine = [&](int t, int a, int s) {
            if (! inst.approves(t, a, s))
                return false;
            for (int u = 0; u < T; ++u)
                if (has_home[u] && inst.approves(u, a, s + 1))
                    return false;
            return true;
        };
        std::vector<bool> needed(A, false);
        for (int a = 0; a < A; ++a)
            for (int u = 0; u < T; ++u)
                if (has_home[u] && inst.approves(u, a, 1))
                    needed[a] = true;
        int needed_count = int(std::count(needed.begin(), needed.end(), true));

        std::vector<int> block_of(rest.size(), 0);
        auto evaluate = [&](int blocks) -> bool {
            branches.tick();
            if (blocks > A || blocks < needed_count)
                return false;
            std::vector<std::vector<int>> members(blocks);
            for (std::size_t i = 0; i < rest.size(); ++i)
                members[block_of[i]].push_back(type_of[rest[i]]);

            if (options.memoize_signatures) {
                std::vector<std::vector<int>> sigs;
                for (auto & m : members) {
                    std::vector<int> sig(T, 0);
                    for (int t : m)
                        ++sig[t];
                    sigs.push_back(std::move(sig));
                }
                std::sort(sigs.begin(), sigs.end());
                std::vector<int> key = home_count;
                for (auto & s : sigs) {
                    key.push_back(-1);
                    key.insert(key.end(), s.begin(), s.end());
                }
                if (! tried.insert(std::move(key)).second)
                    return false;
            }

            std::vector<std::vector<int>> accepts(blocks);
            for (int b = 0; b < blocks; ++b) {
                int s = int(members[b].size());
                for (int a = 0; a < A; ++a) {
                    bool ok = true;
                    for (int t : members[b])
                        if (! fine(t, a, s)) {
                            ok = false;
                            break;
                        }
                    if (ok)
                        accepts[b].push_back(a);
                }
                if (accepts[b].empty())
                    return false;
            }
            auto matched = match_blocks(accepts, needed, A);
            if (! matched)
                return false;
            TypeCountAssignment x(T, A);
            for (int b = 0; b < blocks; ++b)
                for (int t : members[b])
                    ++x.at(t, (*matched)[b]);
            confirm(inst, x, "fpt-n");
            result.exists = true;
            result.witness = std::move(x);
            return true;
        };

        // restricted growth strings over the agents not at home
        auto partitions = [&](auto & self, std::size_t i, int blocks) -> bool {
            if (i == rest.size())
                return evaluate(blocks);
            for (int b = 0; b <= blocks; ++b) {
                block_of[i] = b;
                if (self(self, i + 1, std::max(blocks, b + 1)))
                    return true;
            }
            return false;
        };
        partitions(partitions, 0, 0);
    }
    result.stats.branches = branches.count();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

} // namespace gasplab
