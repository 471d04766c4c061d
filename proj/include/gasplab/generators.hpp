#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gasplab/model.hpp"
#include "gasplab/subsetsum.hpp"

namespace gasplab {

auto sidon(int length) -> std::vector<std::int64_t>;

struct PcEdge {
    int i = 0, u = 0; // part and index of one endpoint, i < j
    int j = 0, v = 0;

    friend auto operator==(const PcEdge &, const PcEdge &) -> bool = default;
};

// k-partite graph with parts of equal size n; vertex (i, l) is the l-th vertex of part i
// (both 0-based).
struct PartitionedClique {
    int k = 0;
    int n = 0;
    std::vector<PcEdge> edges;

    // Edges between parts i < j, in declaration order.
    auto between(int i, int j) const -> std::vector<PcEdge>;
    // Throws InputError unless every pair of parts has the same number of edges; returns it.
    auto uniform_pair_count() const -> int;
    auto validate() const -> void;

    friend auto operator==(const PartitionedClique &, const PartitionedClique &) -> bool = default;
};

// One vertex index per part.
using Clique = std::vector<int>;

auto find_partitioned_clique(const PartitionedClique & pc) -> std::optional<Clique>;

// m edges between each pair of parts; with `plant`, a clique on random vertices is included.
auto random_partitioned_clique(int k, int n, int m, bool plant, std::uint64_t seed) -> PartitionedClique;

struct SmpssInstance {
    int dimension = 0;
    WideVector target;
    std::vector<std::vector<WideVector>> sets;

    // Each vector has exactly one non-zero component and values are distinct within a set.
    auto simple() const -> bool;

    friend auto operator==(const SmpssInstance &, const SmpssInstance &) -> bool = default;
};

struct Generated {
    nlohmann::json metadata; // source, parameters, flags
};

struct GeneratedSmpss : Generated {
    SmpssInstance instance;
    std::vector<std::string> component_names;
    std::vector<std::string> set_names;
};

auto pc_to_smpss(const PartitionedClique & pc) -> GeneratedSmpss;
// One vector index per set, following the clique.
auto smpss_clique_selection(const PartitionedClique & pc, const Clique & clique) -> std::vector<int>;

struct GeneratedInstance : Generated {
    TypedInstance instance;
};

// With `scale`, values and target are multiplied by 3 first.
auto smpss_to_sgasp(const SmpssInstance & smpss, bool scale = true) -> GeneratedInstance;
// Assignment built from one vector per set (indices into each set).
auto smpss_selection_assignment(const SmpssInstance & smpss, const GeneratedInstance & generated,
                                const std::vector<int> & selection, bool scale = true) -> TypeCountAssignment;

auto pc_to_gasp(const PartitionedClique & pc) -> GeneratedInstance;
auto gasp_clique_assignment(const PartitionedClique & pc, const GeneratedInstance & generated, const Clique & clique)
    -> TypeCountAssignment;

struct GeneratedNetwork : Generated {
    NetworkInstance instance;
    std::vector<int> cover; // designated vertex cover
};

auto pc_to_ggasp(const PartitionedClique & pc) -> GeneratedNetwork;
auto ggasp_clique_assignment(const PartitionedClique & pc, const GeneratedNetwork & generated, const Clique & clique)
    -> AgentAssignment;

auto is_vertex_cover(const NetworkInstance & net, const std::vector<int> & cover) -> bool;

struct RandomParams {
    int types = 2;
    int activities = 2;
    int agents = 2;        // each type gets between 1 and this many agents
    double density = 0.5;  // chance that an alternative is approved / listed
    std::uint64_t seed = 0;
    double link_density = -1; // network instances; negative means `density`
};

auto random_sgasp(const RandomParams & params) -> TypedInstance;
auto random_gasp(const RandomParams & params) -> TypedInstance;
auto random_ggasp(const RandomParams & params) -> NetworkInstance;

} // namespace gasplab
