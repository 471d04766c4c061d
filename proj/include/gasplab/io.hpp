#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "gasplab/generators.hpp"
#include "gasplab/model.hpp"
#include "gasplab/solvers_sgasp.hpp"

namespace gasplab {

enum class InstanceKind { SGasp, Gasp, GGasp, Smpss, PClique };

auto kind_name(InstanceKind kind) -> std::string;

struct InstanceFile {
    InstanceKind kind = InstanceKind::SGasp;
    std::variant<TypedInstance, NetworkInstance, SmpssInstance, PartitionedClique> data;
    nlohmann::json metadata = nlohmann::json::object();

    auto typed() const -> const TypedInstance & { return std::get<TypedInstance>(data); }
    auto network() const -> const NetworkInstance & { return std::get<NetworkInstance>(data); }

    friend auto operator==(const InstanceFile & a, const InstanceFile & b) -> bool
    {
        return a.kind == b.kind && a.data == b.data && a.metadata == b.metadata;
    }
};

// All parse failures surface as InputError naming the offending field.
auto parse_instance(const nlohmann::json & j) -> InstanceFile;
auto to_json(const InstanceFile & file) -> nlohmann::json;

auto make_file(const TypedInstance & inst, nlohmann::json metadata = nlohmann::json::object()) -> InstanceFile;
auto make_file(const NetworkInstance & inst, nlohmann::json metadata = nlohmann::json::object()) -> InstanceFile;

auto assignment_to_json(const TypedInstance & inst, const TypeCountAssignment & x) -> nlohmann::json;
auto assignment_to_json(const NetworkInstance & inst, const AgentAssignment & pi) -> nlohmann::json;
auto parse_type_assignment(const TypedInstance & inst, const nlohmann::json & j) -> TypeCountAssignment;
auto parse_agent_assignment(const NetworkInstance & inst, const nlohmann::json & j) -> AgentAssignment;

auto report_to_json(const TypedInstance & inst, const StabilityReport & report) -> nlohmann::json;
auto report_to_json(const NetworkInstance & inst, const StabilityReport & report) -> nlohmann::json;

auto read_json(const std::filesystem::path & path) -> nlohmann::json;
auto write_json(const std::filesystem::path & path, const nlohmann::json & j) -> void;

} // namespace gasplab
