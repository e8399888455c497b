#ifndef DNC_ERRORS_HPP
#define DNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dnc {

enum class ErrorCode {
    EmbeddingInvalid,
    NonPositiveWeight,
    WalkMalformed,
    UnknownObjectId,
    NotNormal,
    DegenerateFamily,
    BadTupleSize,
    InvalidSeparator,
    NooseInvalid,
    ParseError,
    SchemaVersionMismatch,
    MalformedInstance,
    BadProfile,
    DegenerateInput,
    NonSimplePolygon,
    UnsupportedProblem,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmbeddingInvalid: return "EmbeddingInvalid";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::WalkMalformed: return "WalkMalformed";
        case ErrorCode::UnknownObjectId: return "UnknownObjectId";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::DegenerateFamily: return "DegenerateFamily";
        case ErrorCode::BadTupleSize: return "BadTupleSize";
        case ErrorCode::InvalidSeparator: return "InvalidSeparator";
        case ErrorCode::NooseInvalid: return "NooseInvalid";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
        case ErrorCode::MalformedInstance: return "MalformedInstance";
        case ErrorCode::BadProfile: return "BadProfile";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::NonSimplePolygon: return "NonSimplePolygon";
        case ErrorCode::UnsupportedProblem: return "UnsupportedProblem";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dnc

#endif
