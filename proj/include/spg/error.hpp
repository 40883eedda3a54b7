#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spg {

enum class ErrorCode {
    MalformedInput,
    NegativeCost,
    ZeroCost,
    SelfLoop,
    ParallelEdge,
    NoPathToSink,
    CycleDetected,
    NotUndirected,
    TerminalState,
    IllegalMove,
    TooManyVertices,
    ZeroShortestPath,
    NotADag,
    NotCactus,
    NotDirectedCactus,
    NotBipartite,
    TooLarge,
    BadQuantifierPattern,
    SchemaError,
    CostOverflow,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported as an spg::Error.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace spg
