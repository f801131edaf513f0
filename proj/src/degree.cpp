#include "kgraphlab/degree.hpp"

#include <sstream>

#include "kgraphlab/error.hpp"

namespace kgraphlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::MissingSquare: return "MissingSquare";
        case ErrorCode::NonBijectiveSquare: return "NonBijectiveSquare";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::CubeInconsistency: return "CubeInconsistency";
        case ErrorCode::NotComposable: return "NotComposable";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::RangeMismatch: return "RangeMismatch";
        case ErrorCode::MixedRange: return "MixedRange";
        case ErrorCode::VertexMember: return "VertexMember";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::WrongGraphShape: return "WrongGraphShape";
        case ErrorCode::NotASubgraph: return "NotASubgraph";
        case ErrorCode::BoundTooSmall: return "BoundTooSmall";
        case ErrorCode::NoScalarRelation: return "NoScalarRelation";
        case ErrorCode::NotDSCompatible: return "NotDSCompatible";
        case ErrorCode::NotHereditary: return "NotHereditary";
        case ErrorCode::NotSaturated: return "NotSaturated";
        case ErrorCode::EmptyQuotient: return "EmptyQuotient";
        case ErrorCode::InvalidCocycle: return "InvalidCocycle";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

std::string Error::format(ErrorCode code, const std::string& message, int line) {
    std::string s = error_code_name(code);
    s += ": ";
    s += message;
    if (line >= 1) {
        s += " (line ";
        s += std::to_string(line);
        s += ")";
    }
    return s;
}

std::string Degree::str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    s += ")";
    return s;
}

std::vector<Degree> degrees_up_to(const Degree& bound) {
    std::vector<Degree> out;
    Degree cur = Degree::zero(bound.rank());
    while (true) {
        out.push_back(cur);
        int i = bound.rank() - 1;
        while (i >= 0) {
            if (cur.coords[i] < bound.coords[i]) {
                ++cur.coords[i];
                break;
            }
            cur.coords[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

Degree parse_degree(const std::string& text, int k) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            coords.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad degree coordinate '" + tok + "' in '" + text + "'");
        }
    }
    if (static_cast<int>(coords.size()) != k)
        throw Error(ErrorCode::InvalidArgument,
                    "degree '" + text + "' has " + std::to_string(coords.size()) + " coordinates, graph rank is " +
                        std::to_string(k));
    return Degree(std::move(coords));
}

}  // namespace kgraphlab
