#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlcg/errors.hpp"

namespace srlcg {

// ---------------------------------------------------------------------------
// Reasoning dimensions, highest to lowest granularity.
// ---------------------------------------------------------------------------

enum class Dimension { Strategic = 0, Tactical = 1, Operational = 2 };

inline constexpr int kDimensionCount = 3;

const char* to_string(Dimension d);
Dimension dimension_from_string(const std::string& name);

enum class TaskCategory { Game, Web, AI_ML, Database, Mobile, Tool };

const char* to_string(TaskCategory c);
TaskCategory category_from_string(const std::string& name);

// ---------------------------------------------------------------------------
// Input task prompt. One record of the task dataset; the single user input
// the whole pipeline runs from.
// ---------------------------------------------------------------------------

struct TaskPrompt {
    std::string id;
    TaskCategory category = TaskCategory::Tool;
    std::string task_definition;
    std::vector<std::string> key_features;
    std::vector<std::string> technical_specifications;

    bool operator==(const TaskPrompt&) const = default;
};

// Throws on violated invariants, otherwise returns the prompt unchanged.
const TaskPrompt& validate_task_prompt(const TaskPrompt& prompt);

// Renders the prompt as the text block fed to the strategic template:
// definition, then "Key Features:", then numbered "Technical Specifications:".
std::string to_prompt_text(const TaskPrompt& prompt);

// ---------------------------------------------------------------------------
// Rationales produced by the strategic and tactical dimensions.
// ---------------------------------------------------------------------------

struct ModuleRationale {
    std::string module_name;
    std::string responsibility;
    int index = 0; // ordinal within the project

    bool operator==(const ModuleRationale&) const = default;
};

struct FunctionRationale {
    std::string function_name;
    std::string responsibility;
    std::string parent_module;

    bool operator==(const FunctionRationale&) const = default;
};

// ---------------------------------------------------------------------------
// Generated code units and the assembled project.
// ---------------------------------------------------------------------------

struct GeneratedFunction {
    FunctionRationale rationale;
    std::string source;
    std::string file_name; // derived from function_name, see derive_file_name
    int revision = 0;      // bumped only by conflict resolution

    bool operator==(const GeneratedFunction&) const = default;
};

struct ModuleNode {
    std::string name;
    std::vector<GeneratedFunction> functions;
    std::optional<std::string> merged_source;

    bool operator==(const ModuleNode&) const = default;
};

struct ProjectTree {
    std::vector<ModuleNode> modules;

    bool operator==(const ProjectTree&) const = default;

    const ModuleNode* find_module(const std::string& name) const;
    std::size_t function_count() const;
};

// function_name with path-unsafe characters replaced by underscore, plus the
// configured source-language extension.
std::string derive_file_name(const std::string& function_name, const std::string& extension);

// Canonical unit id of a function within a project: "<module>/<file_name>".
std::string unit_id(const std::string& module_name, const std::string& file_name);

// ---------------------------------------------------------------------------
// Conflict reports emitted by the backtracker.
// ---------------------------------------------------------------------------

enum class ConflictScope { ModuleLevel, ProjectLevel };

enum class ConflictKind {
    DependencyMismatch,
    LogicalInconsistency,
    ReturnTypeDiscrepancy,
    DuplicateDefinition,
    UnresolvedReference,
};

const char* to_string(ConflictScope s);
ConflictScope conflict_scope_from_string(const std::string& name);
const char* to_string(ConflictKind k);
ConflictKind conflict_kind_from_string(const std::string& name);

struct ConflictReport {
    ConflictScope scope = ConflictScope::ModuleLevel;
    std::vector<std::string> conflict_set;
    std::vector<std::string> affected_set;
    std::vector<ConflictKind> kinds;
    std::string description;

    bool operator==(const ConflictReport&) const = default;
};

// ---------------------------------------------------------------------------
// Self-rectification weight state, one per dimension.
// ---------------------------------------------------------------------------

struct DimensionWeightState {
    Dimension dimension = Dimension::Strategic;
    double w_current = 1.0;
    double w_min = 0.0;
    double impact = 1.0; // feedback impact score of the dimension
    int freq = 0;        // rectifications so far in this run
    double alpha = 0.1;  // base attenuation coefficient
    double beta = 1.2;   // significance adjustment

    bool operator==(const DimensionWeightState&) const = default;
};

struct VerificationResult {
    std::optional<double> score; // absent when the judge reply was unparseable
    bool passed = false;
    std::string raw_response;

    bool operator==(const VerificationResult&) const = default;
};

// ---------------------------------------------------------------------------
// JSON interchange (snake_case field names, round-trip exact).
// ---------------------------------------------------------------------------

void to_json(nlohmann::json& j, const TaskPrompt& v);
void from_json(const nlohmann::json& j, TaskPrompt& v);
void to_json(nlohmann::json& j, const ModuleRationale& v);
void from_json(const nlohmann::json& j, ModuleRationale& v);
void to_json(nlohmann::json& j, const FunctionRationale& v);
void from_json(const nlohmann::json& j, FunctionRationale& v);
void to_json(nlohmann::json& j, const GeneratedFunction& v);
void from_json(const nlohmann::json& j, GeneratedFunction& v);
void to_json(nlohmann::json& j, const ModuleNode& v);
void from_json(const nlohmann::json& j, ModuleNode& v);
void to_json(nlohmann::json& j, const ProjectTree& v);
void from_json(const nlohmann::json& j, ProjectTree& v);
void to_json(nlohmann::json& j, const ConflictReport& v);
void from_json(const nlohmann::json& j, ConflictReport& v);
void to_json(nlohmann::json& j, const DimensionWeightState& v);
void from_json(const nlohmann::json& j, DimensionWeightState& v);
void to_json(nlohmann::json& j, const VerificationResult& v);
void from_json(const nlohmann::json& j, VerificationResult& v);

} // namespace srlcg
