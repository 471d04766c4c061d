#include "gasplab/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace gasplab {

using nlohmann::json;

auto sidon(int length) -> std::vector<std::int64_t>
{
    if (length < 1)
        throw InputError("Sidon sequence length must be at least 1");
    std::vector<std::int64_t> seq;
    std::set<std::int64_t> sums;
    for (std::int64_t candidate = 1; int(seq.size()) < length; ++candidate) {
        std::vector<std::int64_t> fresh{2 * candidate};
        for (auto x : seq)
            fresh.push_back(x + candidate);
        if (std::any_of(fresh.begin(), fresh.end(), [&](auto s) { return sums.contains(s); }))
            continue;
        sums.insert(fresh.begin(), fresh.end());
        seq.push_back(candidate);
    }
    return seq;
}

auto PartitionedClique::between(int i, int j) const -> std::vector<PcEdge>
{
    std::vector<PcEdge> result;
    for (auto & e : edges)
        if (e.i == i && e.j == j)
            result.push_back(e);
    return result;
}

auto PartitionedClique::validate() const -> void
{
    if (k < 1 || n < 1)
        throw InputError("partitioned clique needs k >= 1 parts of size n >= 1");
    std::set<std::tuple<int, int, int, int>> seen;
    for (auto & e : edges) {
        if (e.i < 0 || e.j >= k || e.i >= e.j)
            throw InputError("edge must join two different parts, listed lower part first");
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InputError("edge endpoint outside its part");
        if (! seen.emplace(e.i, e.u, e.j, e.v).second)
            throw InputError("duplicate edge");
    }
}

auto PartitionedClique::uniform_pair_count() const -> int
{
    validate();
    std::map<std::pair<int, int>, int> count;
    for (auto & e : edges)
        ++count[{e.i, e.j}];
    int m = -1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int c = count[{i, j}];
            if (m == -1)
                m = c;
            else if (c != m)
                throw InputError("parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share " +
                                 std::to_string(c) + " edges, expected " + std::to_string(m));
        }
    return std::max(m, 0);
}

auto find_partitioned_clique(const PartitionedClique & pc) -> std::optional<Clique>
{
    pc.validate();
    std::set<std::tuple<int, int, int, int>> edge;
    for (auto & e : pc.edges)
        edge.emplace(e.i, e.u, e.j, e.v);
    Clique pick(pc.k);
    auto go = [&](auto & self, int i) -> bool {
        if (i == pc.k)
            return true;
        for (int u = 0; u < pc.n; ++u) {
            bool ok = true;
            for (int h = 0; h < i && ok; ++h)
                ok = edge.contains({h, pick[h], i, u});
            if (! ok)
                continue;
            pick[i] = u;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    if (go(go, 0))
        return pick;
    return std::nullopt;
}

auto random_partitioned_clique(int k, int n, int m, bool plant, std::uint64_t seed) -> PartitionedClique
{
    if (k < 1 || n < 1 || m < 0 || m > n * n || (plant && m < 1 && k > 1))
        throw InputError("need k >= 1, n >= 1 and 0 <= m <= n^2 (m >= 1 to plant a clique)");
    std::mt19937_64 rng(seed);
    PartitionedClique pc{k, n, {}};
    Clique planted(k);
    for (auto & v : planted)
        v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<std::pair<int, int>> all;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (! (plant && u == planted[i] && v == planted[j]))
                        all.emplace_back(u, v);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<std::pair<int, int>> chosen;
            if (plant)
                chosen.emplace_back(planted[i], planted[j]);
            for (auto & p : all) {
                if (int(chosen.size()) == m)
                    break;
                chosen.push_back(p);
            }
            std::sort(chosen.begin(), chosen.end());
            for (auto [u, v] : chosen)
                pc.edges.push_back(PcEdge{i, u, j, v});
        }
    return pc;
}

auto SmpssInstance::simple() const -> bool
{
    for (auto & set : sets) {
        std::set<std::int64_t> values;
        for (auto & v : set) {
            if (int(v.size()) != dimension)
                return false;
            int nonzero = 0;
            for (auto x : v)
                if (x != 0) {
                    ++nonzero;
                    if (! values.insert(x).second)
                        return false;
                }
            if (nonzero != 1)
                return false;
        }
    }
    return true;
}

namespace {
    auto choose2(int k) -> int { return k * (k - 1) / 2; }

    auto power(std::int64_t b, int e) -> std::int64_t
    {
        std::int64_t r = 1;
        while (e-- > 0)
            r *= b;
        return r;
    }

    // Layout of the clique-to-subset-sum vectors; all indices 0-based.
    struct SmpssLayout {
        int k, n;

        auto vertex(int i, int j) const -> int { return i * (k - 1) + (j < i ? j : j - 1); }
        auto edge(int i, int j) const -> int
        {
            if (i > j)
                std::swap(i, j);
            int before = 0;
            for (int r = 0; r < i; ++r)
                before += k - 1 - r;
            return k * (k - 1) + before + (j - i - 1);
        }
        // the jj-th (0-based) smallest part other than i
        auto other(int i, int jj) const -> int { return jj < i ? jj : jj + 1; }
        auto dimension() const -> int { return k * (k - 1) + choose2(k); }
    };

    auto part_name(int i) -> std::string { return std::to_string(i + 1); }
}

auto pc_to_smpss(const PartitionedClique & pc) -> GeneratedSmpss
{
    int m = pc.uniform_pair_count();
    int k = pc.k;
    if (k < 3)
        throw InputError("the subset-sum construction needs k >= 3");
    std::int64_t n = pc.n;
    SmpssLayout L{k, pc.n};
    int d = L.dimension();
    auto S = sidon(k * pc.n);
    auto sid = [&](int i, int l) { return S[std::size_t(i) * std::size_t(pc.n) + std::size_t(l)]; };
    auto n2 = n * n, n4 = power(n, 4), n6 = power(n, 6), n8 = power(n, 8);

    GeneratedSmpss g;
    auto & s = g.instance;
    s.dimension = d;
    s.target.assign(d, 0);
    g.component_names.resize(d);

    std::int64_t sum_l = 0, sum_l_ln2 = 0;
    for (std::int64_t l = 1; l <= n; ++l) {
        sum_l += l;
        sum_l_ln2 += l + l * n2;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            int c = L.vertex(i, j);
            g.component_names[c] = "cV" + part_name(i) + "(" + part_name(j) + ")";
            if (j == L.other(i, 0))
                s.target[c] = n6 + n4;
            else if (j == L.other(i, k - 2))
                s.target[c] = (n - 1) * n8 + n6 + sum_l;
            else
                s.target[c] = (n - 1) * n8 + n6 + n4 + sum_l_ln2;
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int c = L.edge(i, j);
            g.component_names[c] = "cE(" + part_name(i) + "," + part_name(j) + ")";
            std::int64_t total = 0;
            for (int l = 0; l < pc.n; ++l)
                total += sid(i, l) + sid(j, l);
            s.target[c] = total;
        }

    auto unit = [&](int c, std::int64_t value) {
        WideVector v(d, 0);
        v[c] = value;
        return v;
    };

    // vertex sets: pass the chosen vertex along c_V^i(indJ(i,1)), ..., c_V^i(indJ(i,k-1))
    for (int i = 0; i < k; ++i)
        for (int jp = 1; jp <= k - 2; ++jp) {
            int j = L.other(i, jp - 1), next = L.other(i, jp);
            for (std::int64_t l = 1; l <= n; ++l) {
                auto plus = jp == 1 ? n4 - l : n4 + l * n2;
                auto minus = jp == k - 2 ? n8 + l : n8 + l + l * n2;
                s.sets.push_back({unit(L.vertex(i, j), plus), unit(L.vertex(i, next), minus)});
                g.set_names.push_back("PV" + part_name(i) + "(" + part_name(j) + "," + std::to_string(l) + ")");
            }
        }
    // vertex incidence sets
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            for (int l = 0; l < pc.n; ++l) {
                s.sets.push_back({unit(L.vertex(i, j), n6 + l + 1), unit(L.edge(i, j), sid(i, l))});
                g.set_names.push_back("PEV" + part_name(i) + "(" + part_name(j) + "," + std::to_string(l + 1) + ")");
            }
        }
    // edge sets
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<WideVector> set;
            for (auto & e : pc.between(i, j))
                set.push_back(unit(L.edge(i, j), sid(i, e.u) + sid(j, e.v)));
            s.sets.push_back(std::move(set));
            g.set_names.push_back("PE(" + part_name(i) + "," + part_name(j) + ")");
        }

    if (d != k * (k - 1) + choose2(k) || int(s.sets.size()) != choose2(k) + pc.n * k * (2 * k - 3) || ! s.simple())
        throw InternalError("subset-sum construction failed its self-check");

    g.metadata = {{"source", "pc_to_smpss"},
                  {"k", k},
                  {"n", pc.n},
                  {"m", m},
                  {"dimension", d},
                  {"sets", s.sets.size()},
                  {"small_k", k <= 3}};
    return g;
}

auto smpss_clique_selection(const PartitionedClique & pc, const Clique & clique) -> std::vector<int>
{
    int k = pc.k;
    if (int(clique.size()) != k)
        throw InputError("clique needs one vertex per part");
    std::vector<int> pick;
    for (int i = 0; i < k; ++i)
        for (int jp = 1; jp <= k - 2; ++jp)
            for (int l = 0; l < pc.n; ++l)
                pick.push_back(l == clique[i] ? 0 : 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            for (int l = 0; l < pc.n; ++l)
                pick.push_back(l == clique[i] ? 0 : 1);
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto es = pc.between(i, j);
            auto it = std::find(es.begin(), es.end(), PcEdge{i, clique[i], j, clique[j]});
            if (it == es.end())
                throw InputError("clique uses a missing edge");
            pick.push_back(int(it - es.begin()));
        }
    return pick;
}

namespace {
    auto scaled(const SmpssInstance & s, bool scale) -> SmpssInstance
    {
        if (! s.simple())
            throw InputError("subset-sum sets must be simple");
        if (int(s.target.size()) != s.dimension)
            throw InputError("target has the wrong dimension");
        auto r = s;
        if (scale) {
            for (auto & x : r.target)
                x *= 3;
            for (auto & set : r.sets)
                for (auto & v : set)
                    for (auto & x : v)
                        x *= 3;
        }
        for (auto & set : r.sets)
            for (auto & v : set)
                for (auto x : v)
                    if (x != 0 && x < 3)
                        throw InputError("non-zero values must be at least 3 after scaling");
        for (auto x : r.target)
            if (x < 0 || x > 1'000'000)
                throw InputError("target entries must lie in [0, 1000000]");
        return r;
    }
}

auto smpss_to_sgasp(const SmpssInstance & input, bool scale) -> GeneratedInstance
{
    auto s = scaled(input, scale);
    int d = s.dimension, l = int(s.sets.size());

    std::vector<std::string> activities;
    for (int a = 0; a < l; ++a)
        activities.push_back("a" + std::to_string(a + 1));
    activities.emplace_back("aP");
    int aP = l;

    std::vector<int> kept, dropped;
    for (int i = 0; i < d; ++i)
        (s.target[i] > 0 ? kept : dropped).push_back(i);
    std::int64_t total = 3;
    for (int i : kept)
        total += s.target[i];

    std::vector<AgentType> types;
    for (int i : kept) {
        std::vector<std::vector<int>> p(std::size_t(l) + 1);
        for (int a = 0; a < l; ++a)
            for (auto & v : s.sets[a])
                if (v[i] != 0 && v[i] <= total)
                    p[a].push_back(int(v[i]));
        p[aP] = {2};
        types.push_back(AgentType{"t" + std::to_string(i + 1), int(s.target[i]), SizeSetPrefs{std::move(p)}});
    }
    {
        std::vector<std::vector<int>> p(std::size_t(l) + 1);
        p[aP] = {1, 3};
        types.push_back(AgentType{"tP", 1, SizeSetPrefs{std::move(p)}});
    }
    for (int size : {1, 2}) {
        std::vector<std::vector<int>> p(std::size_t(l) + 1);
        for (int a = 0; a < l; ++a)
            p[a] = {size};
        types.push_back(AgentType{"tX" + std::to_string(size), 1, SizeSetPrefs{std::move(p)}});
    }

    GeneratedInstance g;
    g.instance = TypedInstance{PreferenceKind::Approval, std::move(activities), std::move(types)};
    std::vector<int> dropped_ids;
    for (int i : dropped)
        dropped_ids.push_back(i + 1);
    g.metadata = {{"source", "smpss_to_sgasp"},
                  {"dimension", d},
                  {"sets", l},
                  {"scaled", scale},
                  {"dropped_zero_target_components", dropped_ids}};
    return g;
}

auto smpss_selection_assignment(const SmpssInstance & input, const GeneratedInstance & generated,
                                const std::vector<int> & selection, bool scale) -> TypeCountAssignment
{
    auto s = scaled(input, scale);
    auto & inst = generated.instance;
    if (int(selection.size()) != int(s.sets.size()))
        throw InputError("selection needs one vector per set");
    TypeCountAssignment x(inst.type_count(), inst.activity_count());
    for (int a = 0; a < int(s.sets.size()); ++a) {
        auto & v = s.sets[a].at(selection[a]);
        for (int i = 0; i < s.dimension; ++i)
            if (v[i] != 0) {
                auto t = inst.find_type("t" + std::to_string(i + 1));
                if (! t)
                    throw InputError("selection uses a component with zero target");
                x.at(*t, a) += int(v[i]);
            }
    }
    x.at(*inst.find_type("tP"), int(s.sets.size())) = 1;
    return x;
}

namespace {
    // Shared naming and numbering for the clique-to-activity constructions.
    struct PcNumbering {
        int k, n, m;
        int edge_offset; // α_{i,j}(r-th edge) = 2r + edge_offset

        auto alpha(int l) const -> int { return 2 * (l + 1) + 1; }
        auto alpha_edge(int r) const -> int { return 2 * (r + 1) + edge_offset; }
        auto pair_activity(int i, int j) const -> int
        {
            if (i > j)
                std::swap(i, j);
            int before = 0;
            for (int r = 0; r < i; ++r)
                before += k - 1 - r;
            return k + before + (j - i - 1);
        }
        auto activities() const -> std::vector<std::string>
        {
            std::vector<std::string> a;
            for (int i = 0; i < k; ++i)
                a.push_back("a" + part_name(i));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    a.push_back("a" + part_name(i) + "_" + part_name(j));
            return a;
        }
    };

    using Ranks = std::map<Alternative, RankMap::Rank>;

    auto put(Ranks & r, Alternative alt, RankMap::Rank rank) -> void
    {
        if (! r.emplace(alt, rank).second)
            throw InternalError("alternative listed twice in a generated preference list");
    }

    // C_I(i, v_l): the seat at a_i, and one more than each incident edge's seat
    auto incidence_class(const PartitionedClique & pc, const PcNumbering & num, int i, int l) -> std::vector<Alternative>
    {
        std::vector<Alternative> c{{i, num.alpha(l)}};
        for (int j = 0; j < pc.k; ++j) {
            if (j == i)
                continue;
            auto es = pc.between(std::min(i, j), std::max(i, j));
            for (int r = 0; r < int(es.size()); ++r) {
                int mine = i < j ? es[r].u : es[r].v;
                if (mine == l)
                    c.push_back({num.pair_activity(i, j), num.alpha_edge(r) + 1});
            }
        }
        return c;
    }

    // forward lists rank the highest vertex best, backward lists the lowest
    auto vertex_list(const PartitionedClique & pc, const PcNumbering & num, int i, bool forward, bool with_two)
        -> RankMap
    {
        Ranks r{{Alternative{kVoid, 1}, 0}};
        RankMap::Rank top = pc.n + 1;
        for (int l = 0; l < pc.n; ++l)
            put(r, {i, num.alpha(l) + 1}, top);
        if (with_two)
            put(r, {i, 2}, top);
        for (int l = 0; l < pc.n; ++l) {
            RankMap::Rank rank = forward ? l + 1 : pc.n - l;
            for (auto alt : incidence_class(pc, num, i, l))
                put(r, alt, rank);
        }
        return RankMap{std::move(r)};
    }

    auto clique_edge_index(const PartitionedClique & pc, const Clique & clique, int i, int j) -> int
    {
        auto es = pc.between(i, j);
        auto it = std::find(es.begin(), es.end(), PcEdge{i, clique[i], j, clique[j]});
        if (it == es.end())
            throw InputError("clique uses a missing edge");
        return int(it - es.begin());
    }

    auto check_clique_shape(const PartitionedClique & pc, const Clique & clique) -> void
    {
        if (int(clique.size()) != pc.k)
            throw InputError("clique needs one vertex per part");
        for (int v : clique)
            if (v < 0 || v >= pc.n)
                throw InputError("clique vertex outside its part");
    }
}

auto pc_to_gasp(const PartitionedClique & pc) -> GeneratedInstance
{
    int m = pc.uniform_pair_count();
    int k = pc.k, n = pc.n;
    if (k < 3)
        throw InputError("the activity construction needs k >= 3");
    PcNumbering num{k, n, m, -1};

    std::vector<AgentType> types;
    {
        Ranks r{{Alternative{kVoid, 1}, 0}};
        for (int i = 0; i < k; ++i) {
            for (int l = 0; l < n; ++l)
                put(r, {i, num.alpha(l)}, 3);
            put(r, {i, 2}, 2);
            put(r, {i, 1}, 1);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int e = 0; e < m; ++e)
                    put(r, {num.pair_activity(i, j), num.alpha_edge(e)}, 3);
        int validity = choose2(k) * (2 * m - 1) + k * (2 * n + 1) + 1;
        types.push_back(AgentType{"val", validity, RankMap{std::move(r)}});
    }
    for (int i = 0; i < k; ++i) {
        types.push_back(AgentType{"fwd" + part_name(i), 1, vertex_list(pc, num, i, true, false)});
        types.push_back(AgentType{"bwd" + part_name(i), 1, vertex_list(pc, num, i, false, false)});
    }

    GeneratedInstance g;
    g.instance = TypedInstance{PreferenceKind::Ranked, num.activities(), std::move(types)};
    if (g.instance.activity_count() != choose2(k) + k || g.instance.type_count() != 2 * k + 1)
        throw InternalError("activity construction failed its self-check");
    g.metadata = {{"source", "pc_to_gasp"},
                  {"k", k},
                  {"n", n},
                  {"m", m},
                  {"validity_agents", g.instance.count(0)},
                  {"agents", g.instance.agent_count()}};
    return g;
}

auto gasp_clique_assignment(const PartitionedClique & pc, const GeneratedInstance & generated, const Clique & clique)
    -> TypeCountAssignment
{
    check_clique_shape(pc, clique);
    auto & inst = generated.instance;
    int k = pc.k;
    PcNumbering num{k, pc.n, pc.uniform_pair_count(), -1};
    TypeCountAssignment x(inst.type_count(), inst.activity_count());
    for (int i = 0; i < k; ++i) {
        x.at(1 + 2 * i, i) = 1;
        x.at(2 + 2 * i, i) = 1;
        x.at(0, i) = num.alpha(clique[i]) - 2;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            x.at(0, num.pair_activity(i, j)) = num.alpha_edge(clique_edge_index(pc, clique, i, j));
    return x;
}

auto pc_to_ggasp(const PartitionedClique & pc) -> GeneratedNetwork
{
    int m = pc.uniform_pair_count();
    int k = pc.k, n = pc.n;
    if (k < 3)
        throw InputError("the network construction needs k >= 3");
    PcNumbering num{k, n, m, 1};

    std::vector<AgentType> types;
    std::vector<Agent> agents;
    std::vector<std::pair<int, int>> links;
    std::vector<int> cover;
    std::vector<int> forward(k), hub(choose2(k));

    for (int i = 0; i < k; ++i) {
        Ranks r{{Alternative{kVoid, 1}, 0}};
        for (int l = 0; l < n; ++l)
            put(r, {i, num.alpha(l)}, 3);
        put(r, {i, 2}, 2);
        put(r, {i, 1}, 1);
        int vt = int(types.size());
        types.push_back(AgentType{"valv" + part_name(i), 2 * n + 3, RankMap{std::move(r)}});
        types.push_back(AgentType{"fwd" + part_name(i), 1, vertex_list(pc, num, i, true, true)});
        types.push_back(AgentType{"bwd" + part_name(i), 1, vertex_list(pc, num, i, false, true)});

        forward[i] = int(agents.size());
        agents.push_back(Agent{"fwd" + part_name(i), vt + 1});
        agents.push_back(Agent{"bwd" + part_name(i), vt + 2});
        cover.push_back(forward[i]);
        cover.push_back(forward[i] + 1);
        links.emplace_back(forward[i], forward[i] + 1);
        for (int u = 0; u < 2 * n + 3; ++u) {
            links.emplace_back(forward[i], int(agents.size()));
            agents.push_back(Agent{"v" + part_name(i) + "_" + std::to_string(u + 1), vt});
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int a = num.pair_activity(i, j);
            Ranks r{{Alternative{kVoid, 1}, 0}};
            for (int e = 0; e < m; ++e)
                put(r, {a, num.alpha_edge(e)}, 3);
            put(r, {a, 2}, 2);
            put(r, {a, 1}, 1);
            int et = int(types.size());
            types.push_back(
                AgentType{"vale" + part_name(i) + "_" + part_name(j), 2 * m + 3, RankMap{std::move(r)}});
            int h = int(agents.size());
            hub[a - k] = h;
            cover.push_back(h);
            for (int u = 0; u < 2 * m + 3; ++u) {
                if (u > 0)
                    links.emplace_back(h, int(agents.size()));
                agents.push_back(Agent{"e" + part_name(i) + "_" + part_name(j) + "_" + std::to_string(u + 1), et});
            }
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (j != i)
                links.emplace_back(forward[i], hub[num.pair_activity(i, j) - k]);

    std::sort(cover.begin(), cover.end());
    GeneratedNetwork g;
    g.instance = NetworkInstance{TypedInstance{PreferenceKind::Ranked, num.activities(), std::move(types)},
                                 std::move(agents), std::move(links)};
    g.cover = std::move(cover);
    auto & base = g.instance.base();
    if (base.activity_count() != choose2(k) + k || base.type_count() != choose2(k) + 3 * k ||
        int(g.cover.size()) > choose2(k) + 2 * k || ! is_vertex_cover(g.instance, g.cover))
        throw InternalError("network construction failed its self-check");
    g.metadata = {{"source", "pc_to_ggasp"},
                  {"k", k},
                  {"n", n},
                  {"m", m},
                  {"agents", g.instance.agent_count()},
                  {"links", g.instance.links().size()},
                  {"vertex_cover", g.cover.size()}};
    return g;
}

auto ggasp_clique_assignment(const PartitionedClique & pc, const GeneratedNetwork & generated, const Clique & clique)
    -> AgentAssignment
{
    check_clique_shape(pc, clique);
    auto & net = generated.instance;
    int k = pc.k, n = pc.n;
    PcNumbering num{k, n, pc.uniform_pair_count(), 1};
    AgentAssignment pi(net.agent_count(), kVoid);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        pi[next] = i;
        pi[next + 1] = i;
        for (int u = 0; u < num.alpha(clique[i]) - 2; ++u)
            pi[next + 2 + u] = i;
        next += 2 + 2 * n + 3;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int a = num.pair_activity(i, j);
            for (int u = 0; u < num.alpha_edge(clique_edge_index(pc, clique, i, j)); ++u)
                pi[next + u] = a;
            next += 2 * num.m + 3;
        }
    return pi;
}

auto is_vertex_cover(const NetworkInstance & net, const std::vector<int> & cover) -> bool
{
    std::vector<bool> in(net.agent_count(), false);
    for (int c : cover) {
        if (c < 0 || c >= net.agent_count())
            return false;
        in[c] = true;
    }
    return std::all_of(net.links().begin(), net.links().end(), [&](auto & l) { return in[l.first] || in[l.second]; });
}

namespace {
    auto coin(std::mt19937_64 & rng, double p) -> bool
    {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }

    auto random_counts(std::mt19937_64 & rng, const RandomParams & p) -> std::vector<int>
    {
        if (p.types < 0 || p.activities < 0 || p.agents < 1 || p.density < 0 || p.density > 1)
            throw InputError("random instance needs types, activities >= 0, agents >= 1, density in [0, 1]");
        std::vector<int> counts(p.types);
        for (auto & c : counts)
            c = std::uniform_int_distribution<int>(1, p.agents)(rng);
        return counts;
    }

    auto random_activities(int A) -> std::vector<std::string>
    {
        std::vector<std::string> a;
        for (int i = 0; i < A; ++i)
            a.push_back("a" + std::to_string(i + 1));
        return a;
    }

    auto random_ranked(std::mt19937_64 & rng, const RandomParams & p) -> TypedInstance
    {
        auto counts = random_counts(rng, p);
        int n = 0;
        for (int c : counts)
            n += c;
        std::vector<AgentType> types;
        for (int t = 0; t < p.types; ++t) {
            std::vector<Alternative> listed{{kVoid, 1}};
            for (int a = 0; a < p.activities; ++a)
                for (int s = 1; s <= n; ++s)
                    if (coin(rng, p.density))
                        listed.push_back({a, s});
            std::shuffle(listed.begin(), listed.end(), rng);
            Ranks r;
            RankMap::Rank rank = RankMap::Rank(listed.size());
            for (std::size_t i = 0; i < listed.size(); ++i) {
                if (i > 0 && ! coin(rng, 0.3))
                    --rank;
                r[listed[i]] = rank;
            }
            types.push_back(AgentType{"t" + std::to_string(t + 1), counts[t], RankMap{std::move(r)}});
        }
        return TypedInstance{PreferenceKind::Ranked, random_activities(p.activities), std::move(types)};
    }
}

auto random_sgasp(const RandomParams & p) -> TypedInstance
{
    std::mt19937_64 rng(p.seed);
    auto counts = random_counts(rng, p);
    int n = 0;
    for (int c : counts)
        n += c;
    std::vector<AgentType> types;
    for (int t = 0; t < p.types; ++t) {
        std::vector<std::vector<int>> approvals(p.activities);
        for (int a = 0; a < p.activities; ++a)
            for (int s = 1; s <= n; ++s)
                if (coin(rng, p.density))
                    approvals[a].push_back(s);
        types.push_back(AgentType{"t" + std::to_string(t + 1), counts[t], SizeSetPrefs{std::move(approvals)}});
    }
    return TypedInstance{PreferenceKind::Approval, random_activities(p.activities), std::move(types)};
}

auto random_gasp(const RandomParams & p) -> TypedInstance
{
    std::mt19937_64 rng(p.seed);
    return random_ranked(rng, p);
}

auto random_ggasp(const RandomParams & p) -> NetworkInstance
{
    std::mt19937_64 rng(p.seed);
    auto base = random_ranked(rng, p);
    double link = p.link_density < 0 ? p.density : p.link_density;
    if (link > 1)
        throw InputError("link density must lie in [0, 1]");
    std::vector<Agent> agents;
    for (int t = 0; t < base.type_count(); ++t)
        for (int j = 1; j <= base.count(t); ++j)
            agents.push_back(Agent{base.type(t).id + "_" + std::to_string(j), t});
    std::vector<std::pair<int, int>> links;
    for (int u = 0; u < int(agents.size()); ++u)
        for (int v = u + 1; v < int(agents.size()); ++v)
            if (coin(rng, link))
                links.emplace_back(u, v);
    return NetworkInstance{std::move(base), std::move(agents), std::move(links)};
}

} // namespace gasplab
