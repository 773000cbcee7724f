#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbox {

enum class Player { Avoider, Enforcer };
enum class Rules { Strict, Monotone };

Player opponent(Player p);
const char* to_string(Player p);
const char* to_string(Rules r);

/// Per-move claim counts: p for Avoider, q for Enforcer. Under strict rules a
/// move claims exactly that many elements, under monotone rules at least that
/// many; with fewer elements left on the board the move claims all of them.
struct Bias {
  int p = 1;
  int q = 1;
};

/// One box. A box Enforcer has never touched is dangerous; if it reaches
/// remaining == 0 while still dangerous, Avoider claimed all of it and lost.
/// `safe` never goes back to false. `id` is assigned at game start and is
/// stable across re-sorting, so transcripts can follow a box through a match.
struct BoxState {
  int remaining = 0;
  bool safe = false;
  int id = 0;
};

/// A claim plan: (box index, element count) pairs. Indices refer to
/// Position::boxes of the position the move is applied to; one entry per box.
struct Move {
  std::vector<std::pair<int, int>> claims;

  int total() const;
};

/// Immutable game state. apply_move returns a new value; boxes are kept
/// sorted ascending by remaining size (ties by id) and fully claimed boxes
/// are dropped at the end of every move.
struct Position {
  std::vector<BoxState> boxes;
  Bias bias;
  Rules rules = Rules::Strict;
  Player to_move = Player::Avoider;
  bool avoider_lost = false;
  std::optional<int> lost_box;  // id of the box Avoider completed

  int total_remaining() const;
  int dangerous_count() const;
  int safe_elements() const;
  int max_size() const;  // 0 on an empty board
};

Position new_game(const std::vector<int>& sizes, Bias bias, Rules rules, Player first);

/// nullopt when the move is legal, otherwise a description of the violation.
/// Claims in fully claimed boxes are violations, as are duplicate box
/// entries and totals that break the strict/monotone claim-count rules.
std::optional<std::string> validate_move(const Position& pos, const Move& mv);

/// Applies a validated move. Throws std::invalid_argument with the
/// validate_move violation text if the move is illegal.
Position apply_move(const Position& pos, const Move& mv);

/// Applies a claim batch for to_move without enforcing the per-move total
/// rule (per-box validity still holds; the batch may be empty). This models
/// out-of-rule openings such as an Enforcer first move truncated to t
/// elements; the turn passes to the opponent as usual.
Position apply_claims(const Position& pos, const Move& mv);

/// Thrown by a paper strategy when the position violates the hypotheses its
/// guarantee needs (surfaced explicitly rather than improvised around).
struct StrategyForfeit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A player for play_match and the solver's best-response search. choose()
/// may advance internal memory; clone() must copy that memory so search can
/// branch, and memory_key() must serialize it so positions reached with
/// different memory are not conflated.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Move choose(const Position& pos) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
  virtual std::string memory_key() const { return {}; }
  virtual std::string name() const = 0;
};

struct Verdict {
  Player winner = Player::Avoider;
  std::optional<int> losing_box;  // box id; present iff Enforcer won by a completed box
  std::optional<Player> forfeited_by;
  std::vector<std::pair<Player, Move>> transcript;
};

/// Alternates moves until the board is empty or Avoider completes a box.
/// A strategy that returns an illegal move (or throws StrategyForfeit)
/// forfeits: the opponent wins and the verdict records who forfeited.
Verdict play_match(const Position& start, Strategy& avoider, Strategy& enforcer);

/// Who makes the last move of a strict game, by claim-count parity: players
/// alternate exact claims with the short final move going to whoever is up.
Player strict_last_player(int total_elements, Bias bias, Player first);

/// Game description text format (line oriented):
///   rules=strict|monotone
///   p=<int>
///   q=<int>
///   first=avoider|enforcer
///   boxes=<comma-separated sizes>
/// Keys may appear in any order, each exactly once; unknown keys are errors.
Position parse_game(const std::string& text);
Position load_game_file(const std::string& path);
std::string format_game(const Position& pos);

}  // namespace mbox
