#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace spg {

using Cost = std::int64_t;
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Exact non-negative cost, or the infeasible value (top).  Top compares above
// every finite value and absorbs addition.
class CostValue {
  public:
    constexpr CostValue() = default;
    constexpr CostValue(Cost c) : value_(c) {} // NOLINT(google-explicit-constructor)

    static constexpr CostValue top() {
        CostValue v;
        v.value_ = kTop;
        return v;
    }

    [[nodiscard]] constexpr bool is_top() const { return value_ == kTop; }
    [[nodiscard]] constexpr bool finite() const { return value_ != kTop; }

    // Precondition: finite().
    [[nodiscard]] constexpr Cost value() const { return value_; }

    friend constexpr auto operator<=>(CostValue, CostValue) = default;
    friend CostValue operator+(CostValue a, CostValue b);
    CostValue& operator+=(CostValue other) { return *this = *this + other; }

    [[nodiscard]] std::string str() const;

  private:
    static constexpr Cost kTop = std::numeric_limits<Cost>::max();
    Cost value_ = 0;
};

std::ostream& operator<<(std::ostream& os, CostValue v);

// Costs relative to the player to move: (decider, follower).
struct CostPair {
    CostValue decider = 0;
    CostValue follower = 0;

    static constexpr CostPair top() { return {CostValue::top(), CostValue::top()}; }
    [[nodiscard]] constexpr bool finite() const { return decider.finite(); }

    friend constexpr bool operator==(const CostPair&, const CostPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const CostPair& p);

// Value for the mover who pays `edge` and hands the decision to the other
// player at a state worth `child`.
inline CostPair after_move(CostValue edge, const CostPair& child) {
    return {edge + child.follower, child.decider};
}

// Value for a decider who takes a role swap worth `swap` (relative to the
// swapping player) and then follows at a state worth `child`.
inline CostPair after_swap(const CostPair& swap, const CostPair& child) {
    return {swap.decider + child.follower, swap.follower + child.decider};
}

// Lexicographic comparison key for a decider's option: own cost, then the
// other player's cost, then the id of the next vertex.
struct OptionRank {
    CostValue own;
    CostValue other;
    VertexId next = kNoVertex;

    friend constexpr auto operator<=>(const OptionRank&, const OptionRank&) = default;
};

inline OptionRank rank_of(const CostPair& p, VertexId next) { return {p.decider, p.follower, next}; }

} // namespace spg
