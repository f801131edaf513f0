#pragma once

#include <stdexcept>
#include <string>

namespace kgraphlab {

enum class ErrorCode {
    ParseError,
    UnknownCommand,
    EmptyGraph,
    MissingSquare,
    NonBijectiveSquare,
    EndpointMismatch,
    CubeInconsistency,
    NotComposable,
    DegreeOutOfRange,
    RangeMismatch,
    MixedRange,
    VertexMember,
    BudgetExceeded,
    WrongGraphShape,
    NotASubgraph,
    BoundTooSmall,
    NoScalarRelation,
    NotDSCompatible,
    NotHereditary,
    NotSaturated,
    EmptyQuotient,
    InvalidCocycle,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int line = -1)
        : std::runtime_error(format(code, message, line)),
          code_(code),
          detail_(std::move(message)),
          line_(line) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }
    // Source line for file-parsing errors, -1 otherwise.
    int line() const { return line_; }

private:
    static std::string format(ErrorCode code, const std::string& message, int line);

    ErrorCode code_;
    std::string detail_;
    int line_;
};

}  // namespace kgraphlab
