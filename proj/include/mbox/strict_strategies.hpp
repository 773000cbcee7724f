#pragma once

#include <optional>

#include "mbox/engine.hpp"

namespace mbox {

/// Avoider's two-stage strict-rules strategy. At construction picks the
/// largest witness k <= b_1 with gcd(p+q,k) > p; throws StrategyForfeit when
/// none exists (the guarantee needs one).
///
/// Stage I steps claim from a dangerous box larger than k if one exists,
/// otherwise a safe element. The first step with neither available switches
/// to Stage II: the move's remaining steps all land in one dangerous box of
/// size exactly k. From then on each move claims p safe elements when
/// available, else every safe element plus the rest from a single dangerous
/// box. "Arbitrary" choices resolve to the lowest eligible box index.
class StrictAvoider : public Strategy {
 public:
  explicit StrictAvoider(const Position& start);
  StrictAvoider(int witness_k, bool stage_two);

  Move choose(const Position& pos) override;
  std::unique_ptr<Strategy> clone() const override;
  std::string memory_key() const override;
  std::string name() const override { return "thm12"; }

  int witness_k() const { return witness_k_; }
  bool stage_two() const { return stage_two_; }

 private:
  int witness_k_;
  bool stage_two_ = false;
};

/// One strict Enforcer move of `steps` steps (normally q): each step claims a
/// safe element when one exists, otherwise an element of a currently largest
/// box, ties to the lowest index. Stateless.
Move strict_enforcer_steps(const Position& pos, int steps);

/// Strategy S: safe elements first, then the largest box. Stateless. The
/// robust-win theorem's truncated first move (t <= q steps) is produced by
/// strict_enforcer_steps and applied with apply_claims; every later move
/// claims the full q.
class StrictEnforcer : public Strategy {
 public:
  Move choose(const Position& pos) override;
  std::unique_ptr<Strategy> clone() const override;
  std::string name() const override { return "strategy-s"; }
};

}  // namespace mbox
