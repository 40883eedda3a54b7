#include "spg/error.hpp"

namespace spg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::ZeroCost: return "ZeroCost";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::NoPathToSink: return "NoPathToSink";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotUndirected: return "NotUndirected";
    case ErrorCode::TerminalState: return "TerminalState";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::ZeroShortestPath: return "ZeroShortestPath";
    case ErrorCode::NotADag: return "NotADag";
    case ErrorCode::NotCactus: return "NotCactus";
    case ErrorCode::NotDirectedCactus: return "NotDirectedCactus";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadQuantifierPattern: return "BadQuantifierPattern";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::CostOverflow: return "CostOverflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

} // namespace spg
