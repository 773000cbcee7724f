#pragma once

#include "mbox/engine.hpp"
#include "mbox/random_strategies.hpp"

namespace mbox::testing {

using RandomBox = mbox::RandomStrategy;

inline Position uniform_game(int n, int k, int p, int q, Rules rules, Player first) {
  return new_game(std::vector<int>(n, k), Bias{p, q}, rules, first);
}

}  // namespace mbox::testing
