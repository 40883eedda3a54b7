#pragma once

#include <array>
#include <vector>

#include "spg/cactus.hpp"

namespace spg::detail {

enum Kind : std::uint8_t {
    kNone = 0,
    kForward,
    kSwap,
    kContinue,
    kTurnback,
    kReturn,
    kOpenExit,
    kSwapExit,
    kFarEntry,
    kBackSwap,
    kTerminal,
};

inline Choice terminal_choice() { return {CostPair{}, kNoVertex, kTerminal}; }

// Costs of forced walks along consecutive ring edges.
class RingPaths {
  public:
    explicit RingPaths(const Ring& r);

    // Walk from position `from` up to `to` (from <= to), then a state worth `end`.
    [[nodiscard]] CostPair forward(std::size_t from, std::size_t to, const CostPair& end) const;
    // Walk from position `from` down to `to` (from >= to), then a state worth `end`.
    [[nodiscard]] CostPair backward(std::size_t from, std::size_t to, const CostPair& end) const;

  private:
    [[nodiscard]] CostPair combine(std::size_t lo, std::size_t hi, std::size_t mover_parity, const CostPair& end) const;

    std::array<std::vector<Cost>, 2> alternating_;
    std::vector<std::size_t> forward_blocked_;
    std::vector<std::size_t> backward_blocked_;
};

} // namespace spg::detail
