#include <map>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mbox/monotone_strategies.hpp"
#include "mbox/solver.hpp"
#include "mbox/transcripts.hpp"

using namespace mbox;
using mbox::testing::uniform_game;

namespace {

Position shaped(std::vector<BoxState> boxes, Bias bias, Player to_move) {
  Position pos;
  pos.boxes = std::move(boxes);
  pos.bias = bias;
  pos.rules = Rules::Monotone;
  pos.to_move = to_move;
  return pos;
}

std::map<int, int> claim_map(const Move& mv) {
  std::map<int, int> out;
  for (const auto& [box, count] : mv.claims) out[box] = count;
  return out;
}

}  // namespace

TEST_CASE("mono avoider clause (i): leave one element in each dangerous box") {
  Position pos = shaped({BoxState{2, false, 0}, BoxState{3, false, 1}}, Bias{1, 2},
                        Player::Avoider);
  MonoAvoider a(2, true, {2, 3});
  Move mv = a.choose(pos);
  auto claims = claim_map(mv);
  CHECK(claims[0] == 1);
  CHECK(claims[1] == 2);
  Position next = apply_move(pos, mv);
  REQUIRE(next.boxes.size() == 2);
  CHECK(next.boxes[0].remaining == 1);
  CHECK(next.boxes[1].remaining == 1);
}

TEST_CASE("mono avoider clause (ii): one element from each of p maximal boxes") {
  Position pos = shaped({BoxState{3, false, 0}, BoxState{3, false, 1}, BoxState{3, false, 2},
                         BoxState{3, false, 3}},
                        Bias{2, 1}, Player::Avoider);
  MonoAvoider a(3, true, {3, 3, 3, 3});
  Move mv = a.choose(pos);
  auto claims = claim_map(mv);
  CHECK(mv.total() == 2);
  CHECK(claims[0] == 1);
  CHECK(claims[1] == 1);
}

TEST_CASE("mono avoider clause (iii): r maximal decrements then p more") {
  Position pos = shaped({BoxState{2, false, 0}, BoxState{2, false, 1}, BoxState{3, false, 2}},
                        Bias{2, 1}, Player::Avoider);
  MonoAvoider a(3, true, {2, 2, 3});
  Move mv = a.choose(pos);
  // one from the size-3 box, then one from each of the two largest after the
  // decrement (all three boxes now size 2): total 3 claims
  CHECK(mv.total() == 3);
  auto claims = claim_map(mv);
  CHECK(claims[2] >= 1);
}

TEST_CASE("mono avoider first move sweeps safes and normalizes to k") {
  Position pos = shaped({BoxState{2, true, 0}, BoxState{2, false, 1}, BoxState{4, false, 2}},
                        Bias{1, 2}, Player::Avoider);
  MonoAvoider a(2, false, {});
  Move mv = a.choose(pos);
  auto claims = claim_map(mv);
  CHECK(claims[0] == 2);  // all safe elements
  CHECK(claims[2] >= 2);  // normalization 4 -> 2 before the core step
  Position next = apply_move(pos, mv);
  // two dangerous boxes <= q: the core leaves one element in each
  REQUIRE(next.boxes.size() == 2);
  CHECK(next.boxes[0].remaining == 1);
  CHECK(next.boxes[1].remaining == 1);
}

TEST_CASE("mono avoider equalization trims survivors to the pretend board") {
  // previous dangerous sizes {2,3}: Enforcer took the 2-box, so the pretend
  // game keeps a 2-box; trim the surviving 3-box down to 2 before the core.
  Position pos = shaped({BoxState{3, false, 1}}, Bias{1, 3}, Player::Avoider);
  MonoAvoider a(2, true, {2, 3});
  Move mv = a.choose(pos);
  // equalization claims 1, then clause (i) claims all but one: total 2
  auto claims = claim_map(mv);
  CHECK(claims[0] == 2);
  Position next = apply_move(pos, mv);
  REQUIRE(next.boxes.size() == 1);
  CHECK(next.boxes[0].remaining == 1);
}

TEST_CASE("mono enforcer clause traces from the operation examples") {
  SUBCASE("uniform 4x2 at (1,2): subgame trigger then one full box") {
    Position pos = uniform_game(4, 2, 1, 2, Rules::Monotone, Player::Enforcer);
    Move mv = mono_enforcer_move(pos);
    CHECK(mv.total() == 2);
    REQUIRE(mv.claims.size() == 1);
    CHECK(mv.claims[0].second == 2);
    Position next = apply_move(pos, mv);
    CHECK(next.dangerous_count() == 3);
  }
  SUBCASE("clause (i): small b1 with enough mass outside") {
    Position pos = new_game({1, 5, 5}, Bias{2, 3}, Rules::Monotone, Player::Enforcer);
    Move mv = mono_enforcer_move(pos);
    CHECK(mv.total() == 10);
    Position next = apply_move(pos, mv);
    REQUIRE(next.boxes.size() == 1);
    CHECK(next.boxes[0].remaining == 1);
    CHECK_FALSE(next.boxes[0].safe);
  }
  SUBCASE("clause (iii): minimal m largest boxes reaching q") {
    Position pos = new_game({3, 2, 2}, Bias{1, 4}, Rules::Monotone, Player::Enforcer);
    Move mv = mono_enforcer_move(pos);
    CHECK(mv.total() == 5);  // 3+2, the two largest
    REQUIRE(mv.claims.size() == 2);
    Position next = apply_move(pos, mv);
    REQUIRE(next.boxes.size() == 1);
    CHECK(next.boxes[0].remaining == 2);
  }
  SUBCASE("clause (i) falls through to (iii) when outside mass is short") {
    Position pos = new_game({1, 2}, Bias{2, 3}, Rules::Monotone, Player::Enforcer);
    // b1=1 <= p but outside total 2 < q=3: claim per (iii) instead
    Move mv = mono_enforcer_move(pos);
    CHECK_FALSE(validate_move(pos, mv).has_value());
    CHECK(mv.total() == 3);  // the whole board (fewer than q elements remain)
  }
}

TEST_CASE("mono enforcer never claims fewer than q unless the board is short") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> nd(1, 5), sd(1, 5), bd(1, 3), rd(0, 1);
    int n = nd(rng);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(sd(rng));
    Bias bias{bd(rng), bd(rng)};
    Position pos = new_game(sizes, bias, Rules::Monotone,
                            rd(rng) ? Player::Avoider : Player::Enforcer);
    mbox::testing::RandomBox a(rng());
    MonoEnforcer e;
    Verdict v = play_match(pos, a, e);
    Position cur = pos;
    for (const auto& [player, mv] : v.transcript) {
      if (player == Player::Enforcer)
        CHECK(mv.total() >= std::min(bias.q, cur.total_remaining()));
      cur = apply_move(cur, mv);
    }
  }
}

TEST_CASE("largest-box enforcer claims exactly one largest dangerous box") {
  SUBCASE("takes the bigger box fully") {
    Position pos = new_game({2, 4}, Bias{1, 1}, Rules::Monotone, Player::Enforcer);
    Move mv = largest_box_enforcer_move(pos);
    REQUIRE(mv.claims.size() == 1);
    CHECK(mv.claims[0].first == 1);
    CHECK(mv.claims[0].second == 4);
  }
  SUBCASE("single box") {
    Position pos = new_game({3}, Bias{1, 1}, Rules::Monotone, Player::Enforcer);
    Move mv = largest_box_enforcer_move(pos);
    CHECK(mv.total() == 3);
  }
  SUBCASE("tie broken to the lowest index") {
    Position pos = new_game({3, 3}, Bias{1, 1}, Rules::Monotone, Player::Enforcer);
    Move mv = largest_box_enforcer_move(pos);
    REQUIRE(mv.claims.size() == 1);
    CHECK(mv.claims[0].first == 0);
  }
}

TEST_CASE("phi recurrence holds on seeded largest-box matches") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> nd(2, 8), sd(1, 6), pd(1, 3);
    int n = nd(rng);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(sd(rng));
    Bias bias{pd(rng), 1};
    Position pos = new_game(sizes, bias, Rules::Monotone, Player::Enforcer);
    mbox::testing::RandomBox a(rng(), 20);
    LargestBoxEnforcer e;
    Verdict v = play_match(pos, a, e);
    auto scan = scan_phi_recurrence(pos, v.transcript);
    INFO(scan.detail);
    CHECK(scan.ok);
  }
}

TEST_CASE("mono avoider picks the theorem's k, not blindly b1") {
  Position small = uniform_game(2, 2, 1, 2, Rules::Monotone, Player::Avoider);
  CHECK(MonoAvoider(small).target_k() == 2);
  Position big = new_game({4, 4, 4}, Bias{1, 3}, Rules::Monotone, Player::Avoider);
  CHECK(MonoAvoider(big).target_k() == 3);  // q/p = 3 < b1
}
