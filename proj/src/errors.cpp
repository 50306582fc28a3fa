#include "srlcg/errors.hpp"

namespace srlcg {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::EmptyTaskDefinition: return "EmptyTaskDefinition";
    case Errc::EmptyKeyFeatures: return "EmptyKeyFeatures";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::InvalidCategory: return "InvalidCategory";
    case Errc::ParseError: return "ParseError";
    case Errc::Transport: return "Transport";
    case Errc::AuthMissing: return "AuthMissing";
    case Errc::BadStatus: return "BadStatus";
    case Errc::EmptyCompletion: return "EmptyCompletion";
    case Errc::BadRequest: return "BadRequest";
    case Errc::ScriptParse: return "ScriptParse";
    case Errc::ScriptExhausted: return "ScriptExhausted";
    case Errc::UnknownTemplate: return "UnknownTemplate";
    case Errc::UnboundPlaceholder: return "UnboundPlaceholder";
    case Errc::NoJsonFound: return "NoJsonFound";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::EmptyList: return "EmptyList";
    case Errc::ModuleNotInOutput: return "ModuleNotInOutput";
    case Errc::EmptySource: return "EmptySource";
    case Errc::NoScoreFound: return "NoScoreFound";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidAttenuation: return "InvalidAttenuation";
    case Errc::ExhaustedRectification: return "ExhaustedRectification";
    case Errc::MissingRevision: return "MissingRevision";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::IoError: return "IoError";
    case Errc::NonEmptyTarget: return "NonEmptyTarget";
    case Errc::EmptySampleSet: return "EmptySampleSet";
    case Errc::AllFilesUnscored: return "AllFilesUnscored";
    case Errc::BadConfig: return "BadConfig";
    }
    return "UnknownError";
}

} // namespace srlcg
