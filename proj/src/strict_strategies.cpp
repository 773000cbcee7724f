#include "mbox/strict_strategies.hpp"

#include <algorithm>
#include <map>

#include "mbox/criteria.hpp"

namespace mbox {

namespace {

// Scratch view of a move under construction: current per-box remainders plus
// accumulated claims, materialized into a Move at the end.
struct MoveBuilder {
  std::vector<int> remaining;
  std::vector<bool> safe;
  std::map<int, int> claims;

  explicit MoveBuilder(const Position& pos) {
    remaining.reserve(pos.boxes.size());
    safe.reserve(pos.boxes.size());
    for (const auto& b : pos.boxes) {
      remaining.push_back(b.remaining);
      safe.push_back(b.safe);
    }
  }

  void claim(int box, int count) {
    remaining[box] -= count;
    claims[box] += count;
  }

  int total() const {
    int t = 0;
    for (const auto& [box, count] : claims) {
      (void)box;
      t += count;
    }
    return t;
  }

  int board_remaining() const {
    int t = 0;
    for (int r : remaining) t += r;
    return t;
  }

  int first_safe() const {
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (safe[i] && remaining[i] > 0) return static_cast<int>(i);
    return -1;
  }

  int first_dangerous_larger_than(int k) const {
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!safe[i] && remaining[i] > k) return static_cast<int>(i);
    return -1;
  }

  int first_dangerous_exactly(int k) const {
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!safe[i] && remaining[i] == k) return static_cast<int>(i);
    return -1;
  }

  int first_dangerous_at_least(int k) const {
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!safe[i] && remaining[i] >= k) return static_cast<int>(i);
    return -1;
  }

  int largest_box() const {
    int best = -1;
    int size = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (remaining[i] > size) {
        size = remaining[i];
        best = static_cast<int>(i);
      }
    return best;
  }

  Move finish() const {
    Move mv;
    for (const auto& [box, count] : claims) mv.claims.emplace_back(box, count);
    return mv;
  }
};

}  // namespace

StrictAvoider::StrictAvoider(const Position& start) {
  if (start.boxes.empty()) throw StrategyForfeit("thm12: empty board at game start");
  int b1 = start.boxes.front().remaining;
  auto k = gcd_avoider_witness(start.bias.p, start.bias.q, b1);
  if (!k) throw StrategyForfeit("thm12: no k <= b_1 with gcd(p+q,k) > p");
  witness_k_ = *k;
}

StrictAvoider::StrictAvoider(int witness_k, bool stage_two)
    : witness_k_(witness_k), stage_two_(stage_two) {}

Move StrictAvoider::choose(const Position& pos) {
  if (pos.rules != Rules::Strict) throw StrategyForfeit("thm12: strict rules only");
  if (pos.to_move != Player::Avoider) throw StrategyForfeit("thm12: not Avoider's turn");

  MoveBuilder mb(pos);
  int steps = std::min(pos.bias.p, pos.total_remaining());
  for (int step = 0; step < steps; ++step) {
    if (!stage_two_) {
      if (int box = mb.first_dangerous_larger_than(witness_k_); box >= 0) {
        mb.claim(box, 1);
        continue;
      }
      if (int box = mb.first_safe(); box >= 0) {
        mb.claim(box, 1);
        continue;
      }
      // Stage I has ended mid-move: all dangerous boxes are of size at most k
      // and there are no safe elements. Spend the rest of the move in one
      // dangerous box of size exactly k.
      stage_two_ = true;
      int r = steps - step;
      int box = mb.first_dangerous_exactly(witness_k_);
      if (box < 0) throw StrategyForfeit("thm12: no dangerous box of size exactly k at stage switch");
      if (mb.remaining[box] < r) throw StrategyForfeit("thm12: stage-two box smaller than remaining steps");
      mb.claim(box, r);
      break;
    }
    // Stage II regime: safe elements first, then the rest of the move from a
    // single dangerous box.
    if (int box = mb.first_safe(); box >= 0) {
      mb.claim(box, 1);
      continue;
    }
    int need = steps - step;
    int box = mb.first_dangerous_at_least(need);
    if (box < 0) {
      if (mb.board_remaining() == 0) break;  // board emptied mid-move
      throw StrategyForfeit("thm12: no dangerous box can absorb the remaining steps");
    }
    mb.claim(box, need);
    break;
  }
  return mb.finish();
}

std::unique_ptr<Strategy> StrictAvoider::clone() const {
  return std::make_unique<StrictAvoider>(witness_k_, stage_two_);
}

std::string StrictAvoider::memory_key() const {
  return "k=" + std::to_string(witness_k_) + ";s2=" + (stage_two_ ? "1" : "0");
}

Move strict_enforcer_steps(const Position& pos, int steps) {
  MoveBuilder mb(pos);
  steps = std::min(steps, pos.total_remaining());
  for (int step = 0; step < steps; ++step) {
    if (int box = mb.first_safe(); box >= 0) {
      mb.claim(box, 1);
      continue;
    }
    int box = mb.largest_box();
    if (box < 0) break;
    mb.claim(box, 1);
    mb.safe[box] = true;
  }
  return mb.finish();
}

Move StrictEnforcer::choose(const Position& pos) {
  if (pos.rules != Rules::Strict) throw StrategyForfeit("strategy-s: strict rules only");
  if (pos.to_move != Player::Enforcer) throw StrategyForfeit("strategy-s: not Enforcer's turn");
  return strict_enforcer_steps(pos, pos.bias.q);
}

std::unique_ptr<Strategy> StrictEnforcer::clone() const {
  return std::make_unique<StrictEnforcer>();
}

}  // namespace mbox
