#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mbox/solver.hpp"
#include "mbox/strict_strategies.hpp"

using namespace mbox;
using mbox::testing::uniform_game;

TEST_CASE("canonical keys collapse box permutations and nothing else") {
  Position a = new_game({3, 1, 2}, Bias{1, 2}, Rules::Strict, Player::Avoider);
  Position b = new_game({2, 3, 1}, Bias{1, 2}, Rules::Strict, Player::Avoider);
  CHECK(canonical_key(a) == canonical_key(b));

  Position c = a;
  c.to_move = Player::Enforcer;
  CHECK(canonical_key(a) != canonical_key(c));

  Position d = new_game({3, 1, 2}, Bias{1, 2}, Rules::Monotone, Player::Avoider);
  CHECK(canonical_key(a) != canonical_key(d));

  // safety flags matter, ordering of equal sizes does not
  Position e;
  e.bias = Bias{1, 1};
  e.boxes = {BoxState{1, true, 0}, BoxState{3, false, 1}};
  Position f;
  f.bias = Bias{1, 1};
  f.boxes = {BoxState{1, false, 0}, BoxState{3, true, 1}};
  CHECK(canonical_key(e) != canonical_key(f));
}

TEST_CASE("move enumeration collapses symmetric boxes") {
  SUBCASE("strict avoider p=1 on two equal boxes has one move") {
    Position pos = uniform_game(2, 2, 1, 1, Rules::Strict, Player::Avoider);
    CHECK(enumerate_moves(pos).size() == 1);
  }
  SUBCASE("strict enforcer q=2 on two equal boxes: one box or split") {
    Position pos = uniform_game(2, 2, 1, 2, Rules::Strict, Player::Enforcer);
    CHECK(enumerate_moves(pos).size() == 2);
  }
  SUBCASE("monotone enforcer q=1 on one box of 3: totals 1..3") {
    Position pos = uniform_game(1, 3, 1, 1, Rules::Monotone, Player::Enforcer);
    CHECK(enumerate_moves(pos).size() == 3);
  }
  SUBCASE("avoider ordering prefers not completing dangerous boxes") {
    Position pos;
    pos.bias = Bias{1, 1};
    pos.rules = Rules::Strict;
    pos.to_move = Player::Avoider;
    pos.boxes = {BoxState{1, false, 0}, BoxState{1, true, 1}};
    auto moves = enumerate_moves(pos);
    REQUIRE(moves.size() == 2);
    CHECK(pos.boxes[moves[0].claims[0].first].safe);
  }
}

TEST_CASE("paper opening examples solve exactly") {
  Solver solver;
  CHECK(solver.solve(uniform_game(2, 2, 1, 1, Rules::Strict, Player::Avoider)).outcome ==
        Outcome::AvoiderWin);
  CHECK(solver.solve(uniform_game(2, 2, 1, 2, Rules::Strict, Player::Avoider)).outcome ==
        Outcome::EnforcerWin);
  CHECK(solver.solve(uniform_game(2, 2, 2, 2, Rules::Strict, Player::Avoider)).outcome ==
        Outcome::AvoiderWin);
  CHECK(solver.solve(uniform_game(1, 1, 1, 1, Rules::Strict, Player::Avoider)).outcome ==
        Outcome::EnforcerWin);
}

TEST_CASE("solve is permutation invariant and cache consistent") {
  std::mt19937 rng(11);
  Solver cold;
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> nd(1, 4), sd(1, 4), bd(1, 2), rd(0, 1);
    int n = nd(rng);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(sd(rng));
    Bias bias{bd(rng), bd(rng)};
    Rules rules = rd(rng) ? Rules::Strict : Rules::Monotone;
    Position pos = new_game(sizes, bias, rules, rd(rng) ? Player::Avoider : Player::Enforcer);

    std::vector<int> shuffled = sizes;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Position perm = new_game(shuffled, bias, rules, pos.to_move);
    CHECK(canonical_key(pos) == canonical_key(perm));

    Outcome first = cold.solve(pos).outcome;
    CHECK(first == cold.solve(perm).outcome);
    Solver fresh;
    CHECK(first == fresh.solve(pos).outcome);  // warm and cold tables agree
    CHECK(first != Outcome::Unsolved);
  }
}

TEST_CASE("optimal play via the solver matches play_match") {
  struct Optimal : Strategy {
    Solver& solver;
    explicit Optimal(Solver& s) : solver(s) {}
    Move choose(const Position& pos) override {
      auto r = solver.solve(pos);
      REQUIRE(r.optimal_move.has_value());
      return *r.optimal_move;
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Optimal>(solver); }
    std::string name() const override { return "optimal"; }
  };
  Solver solver;
  Optimal a(solver), e(solver);
  CHECK(play_match(uniform_game(2, 2, 1, 1, Rules::Strict, Player::Avoider), a, e).winner ==
        Player::Avoider);
  CHECK(play_match(uniform_game(2, 2, 1, 2, Rules::Strict, Player::Avoider), a, e).winner ==
        Player::Enforcer);
  CHECK(play_match(uniform_game(2, 2, 2, 2, Rules::Strict, Player::Avoider), a, e).winner ==
        Player::Avoider);
}

TEST_CASE("node budget exhaustion reports unsolved, never a guess") {
  Solver tiny(3);
  auto r = tiny.solve(uniform_game(4, 5, 2, 2, Rules::Monotone, Player::Avoider));
  CHECK(r.outcome == Outcome::Unsolved);
  CHECK_FALSE(r.optimal_move.has_value());
}

TEST_CASE("best_response reproduces the hand-traced examples") {
  Solver solver;
  SUBCASE("strategy S on mBox(2,2,(1,2)) as first player loses to a free Avoider") {
    Position pos = uniform_game(2, 2, 1, 2, Rules::Strict, Player::Enforcer);
    StrictEnforcer s;
    CHECK(solver.best_response(pos, Player::Enforcer, s).outcome == Outcome::AvoiderWin);
  }
  SUBCASE("the two-stage Avoider strategy wins mBox(2,2,(1,1)) against every Enforcer") {
    Position pos = uniform_game(2, 2, 1, 1, Rules::Strict, Player::Avoider);
    StrictAvoider a(pos);
    CHECK(solver.best_response(pos, Player::Avoider, a).outcome == Outcome::AvoiderWin);
  }
  SUBCASE("a position that is already lost resolves immediately") {
    Position pos = uniform_game(1, 1, 1, 1, Rules::Strict, Player::Avoider);
    pos = apply_move(pos, Move{{{0, 1}}});
    REQUIRE(pos.avoider_lost);
    StrictEnforcer s;
    auto r = solver.best_response(pos, Player::Enforcer, s);
    CHECK(r.outcome == Outcome::EnforcerWin);
    CHECK(r.node_count == 0);
  }
}

TEST_CASE("minimal_enforcer_n on the frozen examples") {
  Solver solver;
  auto a = solver.minimal_enforcer_n(1, 1, 1, Rules::Strict, Player::Avoider, 10);
  CHECK(a.n == 1);
  auto b = solver.minimal_enforcer_n(1, 1, 1, Rules::Strict, Player::Enforcer, 10);
  CHECK(b.n == 2);
  auto c = solver.minimal_enforcer_n(1, 2, 2, Rules::Strict, Player::Avoider, 64);
  REQUIRE(c.n.has_value());
  CHECK(*c.n == 2);  // the paper's 2,2 example is the minimal instance
  auto d = solver.minimal_enforcer_n(1, 2, 2, Rules::Strict, Player::Enforcer, 64);
  REQUIRE(d.n.has_value());
  CHECK(*d.n == 3);
  auto none = solver.minimal_enforcer_n(1, 1, 2, Rules::Strict, Player::Avoider, 12);
  CHECK_FALSE(none.n.has_value());  // gcd witness exists, Avoider wins everywhere
  CHECK(none.scanned_to == 12);
}

TEST_CASE("cache files round-trip and reject other versions") {
  Solver solver;
  solver.solve(uniform_game(2, 2, 1, 2, Rules::Strict, Player::Avoider));
  std::string path = "test_cache.mbox";
  solver.save_cache(path);

  Solver reloaded;
  reloaded.load_cache(path);
  CHECK(reloaded.cache_size() == solver.cache_size());
  CHECK(reloaded.solve(uniform_game(2, 2, 1, 2, Rules::Strict, Player::Avoider)).outcome ==
        Outcome::EnforcerWin);

  {
    std::ofstream bad("test_cache_bad.mbox");
    bad << "mboxcache v2\n";
  }
  Solver other;
  CHECK_THROWS(other.load_cache("test_cache_bad.mbox"));
  std::remove("test_cache.mbox");
  std::remove("test_cache_bad.mbox");
}
