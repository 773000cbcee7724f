#pragma once

#include "mbox/engine.hpp"

namespace mbox {

/// Avoider's monotone strategy. One physical move fuses the proof's
/// pretend-game reductions with the core step:
///   (a) claim every safe element on the board;
///   (b) first move only, cut every box larger than the target k down to k;
///   (c) equalization: when Enforcer's last move removed dangerous boxes
///       while larger dangerous boxes survive, trim survivors so the board
///       looks as if Enforcer had claimed the largest boxes instead;
///   (d) core: with at most q dangerous boxes claim all but one element of
///       each; with >= p maximal boxes claim one element from p of them;
///       otherwise one from each of the r maximal boxes and one from each of
///       the p largest boxes after those decrements.
///
/// The target k is the theorem's parameter: the largest k <= b_1 with
/// q >= k*p (equal to b_1 whenever the hypotheses admit k = b_1).
class MonoAvoider : public Strategy {
 public:
  explicit MonoAvoider(const Position& start);
  MonoAvoider(int target_k, bool first_done, std::vector<int> prev_dangerous);

  Move choose(const Position& pos) override;
  std::unique_ptr<Strategy> clone() const override;
  std::string memory_key() const override;
  std::string name() const override { return "mono-avoider"; }

  int target_k() const { return target_k_; }

 private:
  int target_k_;
  bool first_done_ = false;
  std::vector<int> prev_dangerous_;  // dangerous sizes right after my last move
};

/// Enforcer's monotone strategy, stateless:
///  (i)  if the smallest dangerous box b_1 has b_1 <= p and at least q
///       elements sit outside it, fully claim everything but that box;
///  (ii) if some l has at least N(p,q,l) dangerous boxes whose N smallest
///       average at most l, take the minimal such l, fully claim every
///       dangerous box beyond those N, and continue with (iii);
///  (iii) fully claim the largest m dangerous boxes where m is minimal with
///       their total at least q (topping up with safe elements only when the
///       dangerous boxes cannot reach q).
/// When (i) fires but the outside total is below q it falls through to (iii).
Move mono_enforcer_move(const Position& pos);

class MonoEnforcer : public Strategy {
 public:
  Move choose(const Position& pos) override;
  std::unique_ptr<Strategy> clone() const override;
  std::string name() const override { return "mono-enforcer"; }
};

/// The q=1 variant behind the N(p,1,k) estimate: fully claims one largest
/// dangerous box, ties to the lowest index.
Move largest_box_enforcer_move(const Position& pos);

class LargestBoxEnforcer : public Strategy {
 public:
  Move choose(const Position& pos) override;
  std::unique_ptr<Strategy> clone() const override;
  std::string name() const override { return "largest-box"; }
};

}  // namespace mbox
