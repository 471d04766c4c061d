#include "gasplab/subsetsum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace gasplab {

namespace {
    auto normalise(IntSet s) -> IntSet
    {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (! s.empty() && s.front() < 0)
            throw InputError("subset-sum values must be non-negative");
        return s;
    }
}

PssSolver::PssSolver(PssInstance inst) : inst_(std::move(inst))
{
    inst_.targets = normalise(std::move(inst_.targets));
    for (auto & s : inst_.sources)
        s = normalise(std::move(s));

    width_ = inst_.targets.empty() ? 0 : inst_.targets.back() + 1;
    std::size_t l = inst_.sources.size();
    table_.assign(l + 1, std::vector<char>(std::size_t(width_), 0));
    for (int r : inst_.targets)
        table_[0][r] = 1;
    for (std::size_t i = 1; i <= l; ++i) {
        auto & prev = table_[i - 1];
        auto & cur = table_[i];
        auto & s = inst_.sources[i - 1];
        for (int n = 0; n < width_; ++n) {
            if (! prev[n])
                continue;
            for (int v : s) {
                if (v > n)
                    break;
                cur[n - v] = 1;
            }
        }
    }
    for (int n = 0; n < width_; ++n)
        if (table_[l][n])
            solutions_.push_back(n);
}

auto PssSolver::contains(int n) const -> bool
{
    return n >= 0 && n < width_ && table_.back()[n];
}

auto PssSolver::witness(int n) const -> std::vector<int>
{
    if (! contains(n))
        throw InputError("value " + std::to_string(n) + " is not a partitioned subset sum");
    std::size_t l = inst_.sources.size();
    std::vector<int> choice(l + 1);
    for (std::size_t i = l; i >= 1; --i) {
        bool found = false;
        for (int v : inst_.sources[i - 1])
            if (n + v < width_ && table_[i - 1][n + v]) {
                choice[i] = v;
                n += v;
                found = true;
                break;
            }
        if (! found)
            throw InternalError("subset-sum table is inconsistent");
    }
    choice[0] = n;
    return choice;
}

auto solve_pss(const PssInstance & inst) -> IntSet
{
    return PssSolver{inst}.solutions();
}

namespace {
    struct RootedForest {
        std::vector<int> order;                          // parents before children
        std::vector<int> parent;                         // -1 for roots
        std::vector<int> parent_edge;                    // edge index to the parent
        std::vector<std::vector<std::pair<int, int>>> children; // (child, edge)
    };

    auto root_forest(const LabeledTree & tree) -> RootedForest
    {
        int V = int(tree.labels.size());
        std::vector<std::vector<std::pair<int, int>>> adj(V);
        for (int e = 0; e < int(tree.edges.size()); ++e) {
            auto [u, v] = tree.edges[e];
            if (u < 0 || v < 0 || u >= V || v >= V)
                throw InputError("tree edge refers to an unknown vertex");
            if (u == v)
                throw StructureError("tree edge is a self-loop");
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
        RootedForest f;
        f.parent.assign(V, -2);
        f.parent_edge.assign(V, -1);
        f.children.assign(V, {});
        for (int root = 0; root < V; ++root) {
            if (f.parent[root] != -2)
                continue;
            f.parent[root] = -1;
            std::size_t head = f.order.size();
            f.order.push_back(root);
            while (head < f.order.size()) {
                int v = f.order[head++];
                for (auto [w, e] : adj[v]) {
                    if (e == f.parent_edge[v])
                        continue;
                    if (f.parent[w] != -2)
                        throw StructureError("tree edges contain a cycle");
                    f.parent[w] = v;
                    f.parent_edge[w] = e;
                    f.children[v].emplace_back(w, e);
                    f.order.push_back(w);
                }
            }
        }
        return f;
    }
}

auto solve_tss(const LabeledTree & tree) -> TssResult
{
    auto f = root_forest(tree);
    int V = int(tree.labels.size());
    std::vector<std::optional<PssSolver>> solvers(V);
    std::vector<IntSet> reach(V);
    for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
        int v = *it;
        PssInstance p{tree.labels[v], {}};
        for (auto [c, e] : f.children[v])
            p.sources.push_back(reach[c]);
        solvers[v].emplace(std::move(p));
        reach[v] = solvers[v]->solutions();
    }

    TssResult result;
    for (int v = 0; v < V; ++v)
        if (f.parent[v] == -1 && ! solvers[v]->contains(0))
            return result;

    result.feasible = true;
    result.edge_values.assign(tree.edges.size(), 0);
    std::vector<int> demand(V, 0);
    for (int v : f.order) {
        auto choice = solvers[v]->witness(demand[v]);
        for (std::size_t i = 0; i < f.children[v].size(); ++i) {
            auto [c, e] = f.children[v][i];
            result.edge_values[e] = choice[i + 1];
            demand[c] = choice[i + 1];
        }
    }
    return result;
}

auto check_tss(const LabeledTree & tree, const std::vector<int> & edge_values) -> bool
{
    if (edge_values.size() != tree.edges.size())
        return false;
    std::vector<long long> sum(tree.labels.size(), 0);
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
        if (edge_values[e] < 0)
            return false;
        sum[tree.edges[e].first] += edge_values[e];
        sum[tree.edges[e].second] += edge_values[e];
    }
    for (std::size_t v = 0; v < tree.labels.size(); ++v)
        if (! std::binary_search(tree.labels[v].begin(), tree.labels[v].end(), int(sum[v])))
            return false;
    return true;
}

MpssSolver::MpssSolver(VectorFamily family) : family_(std::move(family))
{
    int d = family_.dimension;
    if (d < 0 || int(family_.caps.size()) != d)
        throw InputError("caps must have one entry per dimension");
    radix_.assign(std::size_t(d), 1);
    for (int i = 0; i < d; ++i) {
        if (family_.caps[i] < 0)
            throw InputError("caps must be non-negative");
        radix_[i] = cells_;
        if (cells_ > (std::size_t(1) << 32) / std::size_t(family_.caps[i] + 1))
            throw BudgetExceeded("vector subset-sum table too large");
        cells_ *= std::size_t(family_.caps[i] + 1);
    }

    order_.resize(family_.sets.size());
    for (std::size_t s = 0; s < family_.sets.size(); ++s) {
        auto & set = family_.sets[s];
        if (set.empty())
            empty_set_ = true;
        for (auto & v : set) {
            if (int(v.size()) != d)
                throw InputError("vector has the wrong dimension");
            for (int x : v)
                if (x < 0)
                    throw InputError("vectors must be non-negative");
        }
        std::vector<int> idx(set.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return set[a] < set[b]; });
        idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return set[a] == set[b]; }), idx.end());
        order_[s] = std::move(idx);
    }

    levels_.assign(family_.sets.size() + 1, {});
    levels_[0].assign(cells_, 0);
    levels_[0][0] = 1;
    for (std::size_t s = 0; s < family_.sets.size(); ++s) {
        auto & prev = levels_[s];
        auto & cur = levels_[s + 1];
        cur.assign(cells_, 0);
        std::vector<std::pair<IntVector, std::size_t>> steps;
        for (int i : order_[s]) {
            auto & v = family_.sets[s][i];
            bool fits = true;
            std::size_t offset = 0;
            for (int k = 0; k < d; ++k) {
                fits = fits && v[k] <= family_.caps[k];
                offset += std::size_t(v[k]) * radix_[k];
            }
            if (fits)
                steps.emplace_back(v, offset);
        }
        IntVector at(d, 0);
        for (std::size_t code = 0; code < cells_; ++code) {
            if (prev[code])
                for (auto & [v, offset] : steps) {
                    bool fits = true;
                    for (int k = 0; k < d && fits; ++k)
                        fits = at[k] + v[k] <= family_.caps[k];
                    if (fits)
                        cur[code + offset] = 1;
                }
            for (int k = 0; k < d; ++k) {
                if (++at[k] <= family_.caps[k])
                    break;
                at[k] = 0;
            }
        }
    }
}

auto MpssSolver::encode(const IntVector & v) const -> std::optional<std::size_t>
{
    if (int(v.size()) != family_.dimension)
        return std::nullopt;
    std::size_t code = 0;
    for (int k = 0; k < family_.dimension; ++k) {
        if (v[k] < 0 || v[k] > family_.caps[k])
            return std::nullopt;
        code += std::size_t(v[k]) * radix_[k];
    }
    return code;
}

auto MpssSolver::decode(std::size_t code) const -> IntVector
{
    IntVector v(family_.dimension);
    for (int k = 0; k < family_.dimension; ++k) {
        v[k] = int(code % std::size_t(family_.caps[k] + 1));
        code /= std::size_t(family_.caps[k] + 1);
    }
    return v;
}

auto MpssSolver::solutions() const -> std::vector<IntVector>
{
    std::vector<IntVector> result;
    for (std::size_t code = 0; code < cells_; ++code)
        if (levels_.back()[code])
            result.push_back(decode(code));
    std::sort(result.begin(), result.end());
    return result;
}

auto MpssSolver::contains(const IntVector & v) const -> bool
{
    auto code = encode(v);
    return code && levels_.back()[*code];
}

auto MpssSolver::witness(const IntVector & v) const -> std::vector<int>
{
    if (! contains(v))
        throw InputError("vector is not a subset sum of the family");
    int d = family_.dimension;
    std::vector<int> choice(family_.sets.size());
    IntVector rest = v;
    for (std::size_t s = family_.sets.size(); s-- > 0;) {
        bool found = false;
        for (int i : order_[s]) {
            auto & p = family_.sets[s][i];
            IntVector before(d);
            bool ok = true;
            for (int k = 0; k < d && ok; ++k) {
                before[k] = rest[k] - p[k];
                ok = before[k] >= 0;
            }
            if (ok && levels_[s][*encode(before)]) {
                choice[s] = i;
                rest = std::move(before);
                found = true;
                break;
            }
        }
        if (! found)
            throw InternalError("vector subset-sum table is inconsistent");
    }
    return choice;
}

auto brute_pss(const PssInstance & inst) -> IntSet
{
    std::set<int> out;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int n) {
        if (i == inst.sources.size()) {
            out.insert(n);
            return;
        }
        for (int s : inst.sources[i])
            if (s <= n)
                go(i + 1, n - s);
    };
    for (int r : inst.targets)
        go(0, r);
    return {out.begin(), out.end()};
}

auto brute_tss(const LabeledTree & tree, std::uint64_t budget) -> TssResult
{
    int top = 0;
    for (auto & l : tree.labels)
        if (! l.empty())
            top = std::max(top, l.back());
    std::size_t E = tree.edges.size();
    TssResult result;
    result.edge_values.assign(E, 0);
    std::uint64_t visited = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t e) -> bool {
        if (++visited > budget)
            throw BudgetExceeded("brute_tss budget exhausted");
        if (e == E)
            return check_tss(tree, result.edge_values);
        for (int v = 0; v <= top; ++v) {
            result.edge_values[e] = v;
            if (go(e + 1))
                return true;
        }
        return false;
    };
    result.feasible = go(0);
    if (! result.feasible)
        result.edge_values.clear();
    return result;
}

auto brute_mpss(const VectorFamily & family, std::uint64_t budget) -> std::vector<IntVector>
{
    std::set<IntVector> out;
    int d = family.dimension;
    IntVector sum(d, 0);
    std::uint64_t visited = 0;
    std::function<void(std::size_t)> go = [&](std::size_t s) {
        if (++visited > budget)
            throw BudgetExceeded("brute_mpss budget exhausted");
        if (s == family.sets.size()) {
            for (int k = 0; k < d; ++k)
                if (sum[k] > family.caps[k])
                    return;
            out.insert(sum);
            return;
        }
        for (auto & v : family.sets[s]) {
            for (int k = 0; k < d; ++k)
                sum[k] += v[k];
            go(s + 1);
            for (int k = 0; k < d; ++k)
                sum[k] -= v[k];
        }
    };
    go(0);
    return {out.begin(), out.end()};
}

auto brute_mpss_find(const std::vector<std::vector<WideVector>> & sets, const WideVector & target,
                     std::uint64_t budget) -> std::optional<std::vector<int>>
{
    std::size_t d = target.size(), L = sets.size();
    for (auto & set : sets)
        for (auto & v : set) {
            if (v.size() != d)
                throw InputError("vector has the wrong dimension");
            for (auto x : v)
                if (x < 0)
                    throw InputError("vectors must be non-negative");
        }

    // most each suffix of sets can still add, per component
    std::vector<WideVector> room(L + 1, WideVector(d, 0));
    for (std::size_t s = L; s-- > 0;)
        for (std::size_t k = 0; k < d; ++k) {
            std::int64_t best = 0;
            for (auto & v : sets[s])
                best = std::max(best, v[k]);
            room[s][k] = room[s + 1][k] + best;
        }

    WideVector sum(d, 0);
    std::vector<int> choice(L);
    std::uint64_t visited = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t s) -> bool {
        if (++visited > budget)
            throw BudgetExceeded("brute_mpss_find budget exhausted");
        for (std::size_t k = 0; k < d; ++k)
            if (sum[k] > target[k] || sum[k] + room[s][k] < target[k])
                return false;
        if (s == L)
            return true;
        for (std::size_t i = 0; i < sets[s].size(); ++i) {
            auto & v = sets[s][i];
            for (std::size_t k = 0; k < d; ++k)
                sum[k] += v[k];
            choice[s] = int(i);
            bool hit = go(s + 1);
            for (std::size_t k = 0; k < d; ++k)
                sum[k] -= v[k];
            if (hit)
                return true;
        }
        return false;
    };
    if (go(0))
        return choice;
    return std::nullopt;
}

} // namespace gasplab
