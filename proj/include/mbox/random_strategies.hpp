#pragma once

#include <map>
#include <random>
#include <sstream>

#include "mbox/engine.hpp"

namespace mbox {

/// Seeded random legal player. Strict moves claim the required total;
/// monotone moves take the minimum plus an occasional small surplus
/// (extra_chance_pct out of 100). Elements are chosen uniformly across the
/// unclaimed board, so any box can be hit, including suicidal claims.
class RandomStrategy : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed, int extra_chance_pct = 30)
      : rng_(seed), extra_pct_(extra_chance_pct) {}

  Move choose(const Position& pos) override {
    int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
    int board = pos.total_remaining();
    int total = std::min(bias, board);
    if (pos.rules == Rules::Monotone && board > total) {
      std::uniform_int_distribution<int> pct(0, 99);
      if (pct(rng_) < extra_pct_) {
        std::uniform_int_distribution<int> extra(1, board - total);
        total += extra(rng_);
      }
    }
    std::vector<int> remaining;
    remaining.reserve(pos.boxes.size());
    for (const auto& b : pos.boxes) remaining.push_back(b.remaining);
    std::map<int, int> claims;
    for (int step = 0; step < total; ++step) {
      int open = 0;
      for (int r : remaining) open += r;
      std::uniform_int_distribution<int> pick(1, open);
      int target = pick(rng_);
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (target <= remaining[i]) {
          --remaining[i];
          ++claims[static_cast<int>(i)];
          break;
        }
        target -= remaining[i];
      }
    }
    Move mv;
    for (const auto& [box, count] : claims) mv.claims.emplace_back(box, count);
    return mv;
  }

  std::unique_ptr<Strategy> clone() const override {
    auto copy = std::make_unique<RandomStrategy>(0, extra_pct_);
    copy->rng_ = rng_;
    return copy;
  }

  std::string memory_key() const override {
    std::ostringstream out;
    out << rng_;
    return out.str();
  }

  std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
  int extra_pct_;
};

}  // namespace mbox
