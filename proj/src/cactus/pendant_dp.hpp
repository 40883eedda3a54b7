#pragma once

#include <array>
#include <vector>

#include "ring_paths.hpp"

namespace spg::detail {

// Walks from the root of a pendant cycle (one direction) back to the root with
// the decision handed over to the other player.
class PendantDp {
  public:
    explicit PendantDp(const Ring& ring);

    // Value of the first move 0 -> 1, relative to the player making it.
    [[nodiscard]] Choice entry() const { return entry_; }
    // Appends ring[1], ..., ring[0] following the recorded choices.
    void trace(const SwapTable& swaps, std::vector<VertexId>& walk) const;

  private:
    [[nodiscard]] CostPair home(std::size_t parity) const;
    [[nodiscard]] CostPair after_forward(std::size_t x, std::size_t parity, bool swapped) const;

    const Ring& r_;
    RingPaths paths_;
    std::vector<Choice> t_;
    std::vector<Choice> t_reply_;
    std::array<std::vector<Choice>, 2> rest_;
    Choice entry_;
};

} // namespace spg::detail
