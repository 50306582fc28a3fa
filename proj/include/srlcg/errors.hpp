#pragma once

#include <stdexcept>
#include <string>

namespace srlcg {

// Every failure the pipeline can surface, so callers and tests can match on
// the condition instead of parsing message text.
enum class Errc {
    // core model / dataset
    EmptyTaskDefinition,
    EmptyKeyFeatures,
    DuplicateId,
    InvalidCategory,
    ParseError,
    // provider
    Transport,
    AuthMissing,
    BadStatus,
    EmptyCompletion,
    BadRequest,
    ScriptParse,
    ScriptExhausted,
    // prompt engine
    UnknownTemplate,
    UnboundPlaceholder,
    NoJsonFound,
    SchemaMismatch,
    EmptyList,
    ModuleNotInOutput,
    EmptySource,
    NoScoreFound,
    OutOfRange,
    // self-rectification
    InvalidAttenuation,
    ExhaustedRectification,
    // backtracker
    MissingRevision,
    NonConvergence,
    // assembler / evaluator
    IoError,
    NonEmptyTarget,
    EmptySampleSet,
    AllFilesUnscored,
    // config
    BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace srlcg
