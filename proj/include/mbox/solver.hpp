#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "mbox/engine.hpp"

namespace mbox {

enum class Outcome { AvoiderWin, EnforcerWin, Unsolved };

const char* to_string(Outcome o);

/// Canonical serialization of a position: rules, bias, mover, then the
/// multiset of (remaining, safety) pairs sorted lexicographically. Two
/// positions differing only by a box permutation share a key; the key is
/// stable across runs and processes and doubles as the cache file record.
std::string canonical_key(const Position& pos);

/// Every legal move up to box symmetry: claims are distributed over
/// equivalence classes of boxes (same remaining count and safety flag) and
/// within a class only the multiset of per-box amounts matters. Strict rules
/// give a single admissible total, monotone rules every total up to the
/// whole board. Avoider moves that complete a dangerous box sort last.
std::vector<Move> enumerate_moves(const Position& pos);

struct SolveResult {
  Outcome outcome = Outcome::Unsolved;
  std::optional<Move> optimal_move;
  std::uint64_t node_count = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Exhaustive ground truth with a memo table shared across calls. Results
/// are exact; when the node budget runs out the answer is an explicit
/// Unsolved, never a guess. The table tolerates concurrent readers and
/// writers (entries are immutable once computed).
class Solver {
 public:
  explicit Solver(std::uint64_t node_budget = kDefaultNodeBudget);

  SolveResult solve(const Position& pos);

  /// Optimal play for one side against the fixed strategy on the other;
  /// the fixed side's memory is folded into the search key. A fixed side
  /// that forfeits or produces an illegal move loses that line.
  SolveResult best_response(const Position& pos, Player fixed_side, const Strategy& fixed);

  struct ThresholdScan {
    std::optional<int> n;  // smallest box count giving an Enforcer win
    int scanned_to = 0;
    bool aborted_unsolved = false;
  };

  /// Scans n = 1..limit for the smallest n where mBox(n x k) under the given
  /// rules and first player is an Enforcer win.
  ThresholdScan minimal_enforcer_n(int p, int q, int k, Rules rules, Player first, int limit);

  void set_node_budget(std::uint64_t budget) { node_budget_ = budget; }
  std::uint64_t nodes_used() const { return nodes_used_; }
  std::size_t cache_size() const;

  /// Cache file: header line "mboxcache v1", then one "<key> <winner letter>"
  /// record per line, sorted. Loading a file with a different version fails.
  void save_cache(const std::string& path) const;
  void load_cache(const std::string& path);

 private:
  char solve_rec(const Position& pos, bool& unsolved);
  char response_rec(const Position& pos, Player fixed_side, const Strategy& fixed, bool& unsolved);

  std::uint64_t node_budget_;
  std::uint64_t nodes_used_ = 0;
  std::unordered_map<std::string, char> memo_;           // canonical key -> 'A'/'E'
  std::unordered_map<std::string, char> response_memo_;  // key + fixed memory -> 'A'/'E'
  mutable std::mutex mutex_;
};

}  // namespace mbox
