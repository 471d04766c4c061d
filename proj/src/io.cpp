#include "gasplab/io.hpp"

#include <fstream>
#include <map>

namespace gasplab {

using nlohmann::json;

namespace {
    auto field(const json & j, const std::string & key, const std::string & where) -> const json &
    {
        if (! j.is_object() || ! j.contains(key))
            throw InputError(where + ": missing field '" + key + "'");
        return j.at(key);
    }

    template <typename T>
    auto as(const json & j, const std::string & where) -> T
    {
        try {
            return j.get<T>();
        }
        catch (const json::exception &) {
            throw InputError(where + ": unexpected value " + j.dump());
        }
    }

    auto kind_from(const std::string & s) -> InstanceKind
    {
        if (s == "sgasp")
            return InstanceKind::SGasp;
        if (s == "gasp")
            return InstanceKind::Gasp;
        if (s == "ggasp")
            return InstanceKind::GGasp;
        if (s == "smpss")
            return InstanceKind::Smpss;
        if (s == "pclique")
            return InstanceKind::PClique;
        throw InputError("unknown instance kind '" + s + "'");
    }

    auto activity_index(const std::vector<std::string> & activities, const std::string & id, const std::string & where)
        -> int
    {
        if (id == kVoidId)
            return kVoid;
        for (int a = 0; a < int(activities.size()); ++a)
            if (activities[a] == id)
                return a;
        throw InputError(where + ": unknown activity '" + id + "'");
    }

    auto parse_types(const json & j, PreferenceKind kind, const std::vector<std::string> & activities)
        -> std::vector<AgentType>
    {
        std::vector<AgentType> types;
        auto & list = field(j, "types", "instance");
        if (! list.is_array())
            throw InputError("instance: 'types' must be an array");
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            auto & tj = list[idx];
            std::string where = "types[" + std::to_string(idx) + "]";
            AgentType t;
            t.id = as<std::string>(field(tj, "id", where), where + ".id");
            t.count = as<int>(field(tj, "count", where), where + ".count");
            if (kind == PreferenceKind::Approval) {
                std::vector<std::vector<int>> sizes(activities.size());
                auto & ap = field(tj, "approvals", where);
                if (! ap.is_object())
                    throw InputError(where + ".approvals must be an object");
                for (auto & [act, s] : ap.items()) {
                    int a = activity_index(activities, act, where + ".approvals");
                    if (a == kVoid)
                        throw InputError(where + ".approvals: the void activity cannot be approved");
                    sizes[a] = as<std::vector<int>>(s, where + ".approvals." + act);
                }
                t.prefs = SizeSetPrefs{std::move(sizes)};
            }
            else {
                std::map<Alternative, RankMap::Rank> ranks;
                auto & rj = field(tj, "ranks", where);
                if (! rj.is_array())
                    throw InputError(where + ".ranks must be an array");
                for (auto & e : rj) {
                    // [[activity, size], rank]
                    if (! e.is_array() || e.size() != 2 || ! e[0].is_array() || e[0].size() != 2)
                        throw InputError(where + ".ranks: expected [[activity, size], rank], got " + e.dump());
                    auto act = as<std::string>(e[0][0], where + ".ranks.activity");
                    Alternative alt{activity_index(activities, act, where + ".ranks"), as<int>(e[0][1], where + ".ranks.size")};
                    if (! ranks.emplace(alt, as<RankMap::Rank>(e[1], where + ".ranks.rank")).second)
                        throw InputError(where + ".ranks: alternative (" + act + ", " + std::to_string(alt.size) +
                                         ") listed twice");
                }
                t.prefs = RankMap{std::move(ranks)};
            }
            types.push_back(std::move(t));
        }
        return types;
    }

    auto types_to_json(const TypedInstance & inst) -> json
    {
        json list = json::array();
        for (auto & t : inst.types()) {
            json tj{{"id", t.id}, {"count", t.count}};
            if (t.kind() == PreferenceKind::Approval) {
                json ap = json::object();
                for (int a = 0; a < inst.activity_count(); ++a)
                    if (! t.approvals().sizes(a).empty())
                        ap[inst.activities()[a]] = t.approvals().sizes(a);
                tj["approvals"] = ap;
            }
            else {
                json rj = json::array();
                for (auto & [alt, rank] : t.ranks().entries())
                    rj.push_back(json::array(
                        {json::array({alt.activity == kVoid ? std::string(kVoidId) : inst.activities()[alt.activity], alt.size}),
                         rank}));
                tj["ranks"] = rj;
            }
            list.push_back(tj);
        }
        return list;
    }

    auto parse_typed(const json & j, PreferenceKind kind) -> TypedInstance
    {
        auto activities = as<std::vector<std::string>>(field(j, "activities", "instance"), "activities");
        auto types = parse_types(j, kind, activities);
        return TypedInstance{kind, std::move(activities), std::move(types)};
    }
}

auto kind_name(InstanceKind kind) -> std::string
{
    switch (kind) {
    case InstanceKind::SGasp: return "sgasp";
    case InstanceKind::Gasp: return "gasp";
    case InstanceKind::GGasp: return "ggasp";
    case InstanceKind::Smpss: return "smpss";
    case InstanceKind::PClique: return "pclique";
    }
    return "unknown";
}

auto parse_instance(const json & j) -> InstanceFile
{
    if (! j.is_object())
        throw InputError("instance file must hold a JSON object");
    InstanceFile file;
    file.kind = kind_from(as<std::string>(field(j, "kind", "instance"), "kind"));
    if (j.contains("metadata"))
        file.metadata = j.at("metadata");

    switch (file.kind) {
    case InstanceKind::SGasp:
        file.data = parse_typed(j, PreferenceKind::Approval);
        break;
    case InstanceKind::Gasp:
        file.data = parse_typed(j, PreferenceKind::Ranked);
        break;
    case InstanceKind::GGasp: {
        auto pref = j.value("preferences", std::string("ranked"));
        if (pref != "ranked" && pref != "approval")
            throw InputError("preferences must be 'ranked' or 'approval'");
        auto base = parse_typed(j, pref == "ranked" ? PreferenceKind::Ranked : PreferenceKind::Approval);
        std::vector<Agent> agents;
        std::map<std::string, int> index;
        auto & aj = field(j, "agents", "instance");
        for (std::size_t i = 0; i < aj.size(); ++i) {
            std::string where = "agents[" + std::to_string(i) + "]";
            auto id = as<std::string>(field(aj[i], "id", where), where + ".id");
            auto type = as<std::string>(field(aj[i], "type", where), where + ".type");
            auto t = base.find_type(type);
            if (! t)
                throw InputError(where + ": unknown type '" + type + "'");
            index[id] = int(agents.size());
            agents.push_back(Agent{id, *t});
        }
        std::vector<std::pair<int, int>> links;
        for (auto & l : field(j, "links", "instance")) {
            auto ends = as<std::vector<std::string>>(l, "links");
            if (ends.size() != 2)
                throw InputError("links: every link joins exactly two agents");
            for (auto & e : ends)
                if (! index.contains(e))
                    throw InputError("links: unknown agent '" + e + "'");
            links.emplace_back(index[ends[0]], index[ends[1]]);
        }
        file.data = NetworkInstance{std::move(base), std::move(agents), std::move(links)};
        break;
    }
    case InstanceKind::Smpss: {
        SmpssInstance s;
        s.dimension = as<int>(field(j, "d", "instance"), "d");
        s.target = as<WideVector>(field(j, "target", "instance"), "target");
        s.sets = as<std::vector<std::vector<WideVector>>>(field(j, "sets", "instance"), "sets");
        if (int(s.target.size()) != s.dimension)
            throw InputError("target has " + std::to_string(s.target.size()) + " entries, dimension is " +
                             std::to_string(s.dimension));
        if (! s.simple())
            throw InputError("sets are not simple: each vector needs exactly one non-zero entry, distinct per set");
        file.data = std::move(s);
        break;
    }
    case InstanceKind::PClique: {
        PartitionedClique pc;
        pc.k = as<int>(field(j, "k", "instance"), "k");
        auto parts = as<std::vector<std::vector<json>>>(field(j, "parts", "instance"), "parts");
        if (int(parts.size()) != pc.k)
            throw InputError("parts: expected " + std::to_string(pc.k) + " parts, got " + std::to_string(parts.size()));
        std::map<std::string, std::pair<int, int>> where;
        for (int i = 0; i < pc.k; ++i) {
            if (i == 0)
                pc.n = int(parts[0].size());
            else if (int(parts[i].size()) != pc.n)
                throw InputError("parts: all parts must have the same size");
            for (int l = 0; l < pc.n; ++l)
                if (! where.emplace(parts[i][l].dump(), std::pair{i, l}).second)
                    throw InputError("parts: vertex " + parts[i][l].dump() + " listed twice");
        }
        for (auto & e : field(j, "edges", "instance")) {
            if (! e.is_array() || e.size() != 2)
                throw InputError("edges: expected [u, v], got " + e.dump());
            auto u = where.find(e[0].dump()), v = where.find(e[1].dump());
            if (u == where.end() || v == where.end())
                throw InputError("edges: unknown vertex in " + e.dump());
            PcEdge edge{u->second.first, u->second.second, v->second.first, v->second.second};
            if (edge.i > edge.j) {
                std::swap(edge.i, edge.j);
                std::swap(edge.u, edge.v);
            }
            pc.edges.push_back(edge);
        }
        pc.validate();
        file.data = std::move(pc);
        break;
    }
    }
    return file;
}

auto to_json(const InstanceFile & file) -> json
{
    json j{{"format", "gasplab"}, {"version", 1}, {"kind", kind_name(file.kind)}};
    switch (file.kind) {
    case InstanceKind::SGasp:
    case InstanceKind::Gasp:
        j["activities"] = file.typed().activities();
        j["types"] = types_to_json(file.typed());
        break;
    case InstanceKind::GGasp: {
        auto & net = file.network();
        j["preferences"] = net.base().kind() == PreferenceKind::Ranked ? "ranked" : "approval";
        j["activities"] = net.base().activities();
        j["types"] = types_to_json(net.base());
        json agents = json::array();
        for (auto & ag : net.agents())
            agents.push_back({{"id", ag.id}, {"type", net.base().type(ag.type).id}});
        j["agents"] = agents;
        json links = json::array();
        for (auto [u, v] : net.links())
            links.push_back({net.agents()[u].id, net.agents()[v].id});
        j["links"] = links;
        break;
    }
    case InstanceKind::Smpss: {
        auto & s = std::get<SmpssInstance>(file.data);
        j["d"] = s.dimension;
        j["target"] = s.target;
        j["sets"] = s.sets;
        break;
    }
    case InstanceKind::PClique: {
        auto & pc = std::get<PartitionedClique>(file.data);
        // vertex (i, l) is numbered i*n + l + 1
        j["k"] = pc.k;
        json parts = json::array();
        for (int i = 0; i < pc.k; ++i) {
            json part = json::array();
            for (int l = 0; l < pc.n; ++l)
                part.push_back(i * pc.n + l + 1);
            parts.push_back(part);
        }
        j["parts"] = parts;
        json edges = json::array();
        for (auto & e : pc.edges)
            edges.push_back({e.i * pc.n + e.u + 1, e.j * pc.n + e.v + 1});
        j["edges"] = edges;
        break;
    }
    }
    j["metadata"] = file.metadata;
    return j;
}

auto make_file(const TypedInstance & inst, json metadata) -> InstanceFile
{
    return InstanceFile{inst.kind() == PreferenceKind::Approval ? InstanceKind::SGasp : InstanceKind::Gasp, inst,
                        std::move(metadata)};
}

auto make_file(const NetworkInstance & inst, json metadata) -> InstanceFile
{
    return InstanceFile{InstanceKind::GGasp, inst, std::move(metadata)};
}

auto assignment_to_json(const TypedInstance & inst, const TypeCountAssignment & x) -> json
{
    json counts = json::object();
    for (int t = 0; t < x.types(); ++t) {
        json row = json::object();
        for (int a = 0; a < x.activities(); ++a)
            if (x.at(t, a) > 0)
                row[inst.activities()[a]] = x.at(t, a);
        counts[inst.type(t).id] = row;
    }
    return {{"kind", "assignment"}, {"counts", counts}};
}

auto assignment_to_json(const NetworkInstance & net, const AgentAssignment & pi) -> json
{
    json agents = json::object();
    for (int i = 0; i < net.agent_count(); ++i)
        agents[net.agents()[i].id] = pi[i] == kVoid ? std::string(kVoidId) : net.base().activities()[pi[i]];
    return {{"kind", "assignment"}, {"agents", agents}};
}

auto parse_type_assignment(const TypedInstance & inst, const json & j) -> TypeCountAssignment
{
    auto & counts = field(j, "counts", "assignment");
    if (! counts.is_object())
        throw InputError("assignment: 'counts' must be an object");
    TypeCountAssignment x(inst.type_count(), inst.activity_count());
    for (auto & [type, row] : counts.items()) {
        auto t = inst.find_type(type);
        if (! t)
            throw InputError("assignment: unknown type '" + type + "'");
        if (! row.is_object())
            throw InputError("assignment: counts of '" + type + "' must be an object");
        for (auto & [act, c] : row.items()) {
            int a = activity_index(inst.activities(), act, "assignment." + type);
            if (a == kVoid)
                continue;
            x.at(*t, a) = as<int>(c, "assignment." + type + "." + act);
        }
    }
    validate_assignment(inst, x);
    return x;
}

auto parse_agent_assignment(const NetworkInstance & net, const json & j) -> AgentAssignment
{
    auto & agents = field(j, "agents", "assignment");
    if (! agents.is_object())
        throw InputError("assignment: 'agents' must be an object");
    AgentAssignment pi(net.agent_count(), kVoid);
    for (auto & [id, act] : agents.items()) {
        auto i = net.find_agent(id);
        if (! i)
            throw InputError("assignment: unknown agent '" + id + "'");
        pi[*i] = activity_index(net.base().activities(), as<std::string>(act, "assignment." + id), "assignment." + id);
    }
    return pi;
}

auto report_to_json(const TypedInstance & inst, const StabilityReport & report) -> json
{
    json v = json::array();
    for (auto & violation : report.violations)
        v.push_back(describe(inst, violation));
    return {{"stable", report.stable()}, {"violations", v}};
}

auto report_to_json(const NetworkInstance & net, const StabilityReport & report) -> json
{
    json v = json::array();
    for (auto & violation : report.violations)
        v.push_back(describe(net, violation));
    return {{"stable", report.stable()}, {"violations", v}};
}

auto read_json(const std::filesystem::path & path) -> json
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    }
    catch (const json::parse_error & e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

auto write_json(const std::filesystem::path & path, const json & j) -> void
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

} // namespace gasplab
