#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spg/cost.hpp"
#include "spg/graph.hpp"

namespace spg {

enum class Player : std::uint8_t { A = 0, B = 1 };

inline Player other(Player p) { return p == Player::A ? Player::B : Player::A; }
inline Player mover_at(std::size_t moves_played) { return moves_played % 2 == 0 ? Player::A : Player::B; }
char player_name(Player p);

// Set of (vertex, parity) nodes of the parity-expanded graph, two bits per vertex.
class VisitedSet {
  public:
    VisitedSet() = default;
    explicit VisitedSet(std::size_t n) : words_((2 * n + 63) / 64, 0) {}

    [[nodiscard]] bool contains(VertexId v, std::uint8_t parity) const {
        const std::size_t bit = 2 * static_cast<std::size_t>(v) + parity;
        return (words_[bit / 64] >> (bit % 64)) & 1U;
    }
    void insert(VertexId v, std::uint8_t parity) {
        const std::size_t bit = 2 * static_cast<std::size_t>(v) + parity;
        words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const VisitedSet&, const VisitedSet&) = default;

  private:
    std::vector<std::uint64_t> words_;
};

struct GameState {
    VertexId current = 0;
    std::uint8_t parity = 0; // moves played so far mod 2; 0 means A to move
    VisitedSet visited;
    Cost cost_a = 0;
    Cost cost_b = 0;

    [[nodiscard]] Player mover() const { return parity == 0 ? Player::A : Player::B; }
};

struct Move {
    Edge edge;
    VertexId next = 0;
};

// Restriction violated by a rejected move.
enum class Rule { NotAnEdge, R1, R2 };
std::string_view to_string(Rule r);

GameState initial_state(const GameGraph& g);
bool is_terminal(const GameGraph& g, const GameState& state);

// Nodes (as 2*v + parity) from which the sink can be reached in the expanded
// graph without entering a visited node.
std::vector<bool> live_nodes(const GameGraph& g, const VisitedSet& visited);

// Legal moves sorted by next vertex; throws TerminalState at t.
std::vector<Move> legal_moves(const GameGraph& g, const GameState& state);

std::optional<Rule> violated_rule(const GameGraph& g, const GameState& state, VertexId next);

// Throws IllegalMove (message carries the rule tag) or TerminalState.
GameState apply_move(const GameGraph& g, const GameState& state, VertexId next);

struct ReplayResult {
    GameState final_state;
    std::size_t moves = 0;
};

// Replays a walk from s, validating every move; throws IllegalMove.
ReplayResult replay(const GameGraph& g, const std::vector<VertexId>& walk);

} // namespace spg
