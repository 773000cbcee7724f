#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mbox/criteria.hpp"
#include "mbox/hypergames.hpp"

using namespace mbox;

namespace {

GraphSpec complete_graph(int n) {
  GraphSpec g;
  g.vertex_count = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

GraphSpec cycle_graph(int n) {
  GraphSpec g;
  g.vertex_count = n;
  for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

GraphSpec triangle() {
  GraphSpec h;
  h.vertex_count = 3;
  h.edges = {{0, 1}, {1, 2}, {0, 2}};
  return h;
}

GraphSpec path3() {  // two edges sharing a vertex
  GraphSpec h;
  h.vertex_count = 3;
  h.edges = {{0, 1}, {1, 2}};
  return h;
}

// Test-only oracle: count distinct copies of h in g by enumerating subsets
// of E(g) of size |E(h)| and testing isomorphism over all vertex bijections.
int brute_force_copies(const GraphSpec& g, const GraphSpec& h) {
  int he = static_cast<int>(h.edges.size());
  int ge = static_cast<int>(g.edges.size());
  if (he == 0 || ge < he) return 0;
  std::vector<int> pick(he);
  std::set<std::vector<int>> found;
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == he) {
      std::vector<int> verts;
      for (int e : pick) {
        verts.push_back(g.edges[e].first);
        verts.push_back(g.edges[e].second);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      if (static_cast<int>(verts.size()) != h.vertex_count) return;
      std::set<std::pair<int, int>> sub;
      for (int e : pick) sub.insert(std::minmax(g.edges[e].first, g.edges[e].second));
      if (static_cast<int>(sub.size()) != he) return;
      std::vector<int> perm(verts.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        bool all = true;
        for (auto [u, v] : h.edges) {
          if (!sub.count(std::minmax(verts[perm[u]], verts[perm[v]]))) {
            all = false;
            break;
          }
        }
        if (all) {
          std::vector<int> key = pick;
          std::sort(key.begin(), key.end());
          found.insert(key);
          return;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int e = from; e < ge; ++e) {
      pick[idx] = e;
      rec(idx + 1, e + 1);
    }
  };
  rec(0, 0);
  return static_cast<int>(found.size());
}

}  // namespace

TEST_CASE("h_game_board matches the closed-form counts") {
  CHECK(h_game_board(complete_graph(4), triangle()).edges.size() == 4);
  CHECK(h_game_board(cycle_graph(5), triangle()).edges.size() == 0);
  CHECK(h_game_board(complete_graph(5), triangle()).edges.size() == 10);
  for (const auto& e : h_game_board(complete_graph(4), triangle()).edges)
    CHECK(e.size() == 3);
}

TEST_CASE("h_game_board agrees with the edge-subset oracle on random graphs") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(3, 6), pd(0, 99);
    int n = nd(rng);
    GraphSpec g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 45) g.edges.emplace_back(u, v);
    for (const GraphSpec& h : {triangle(), path3()}) {
      Hypergraph board = h_game_board(g, h);
      CHECK(static_cast<int>(board.edges.size()) == brute_force_copies(g, h));
    }
  }
}

TEST_CASE("find_matching greedy and backtracking behaviour") {
  SUBCASE("disjoint pair") {
    Hypergraph h{6, {{1, 2}, {2, 3}, {4, 5}}};
    auto m = find_matching(h, 2, 2);
    REQUIRE(m.has_value());
    CHECK(m->edge_indices.size() >= 2);
    std::set<int> seen;
    for (int e : m->edge_indices)
      for (int id : h.edges[e]) CHECK(seen.insert(id).second);
  }
  SUBCASE("overlapping edges admit no matching of two") {
    Hypergraph h{4, {{1, 2}, {2, 3}}};
    CHECK_FALSE(find_matching(h, 2, 2).has_value());
  }
  SUBCASE("the K4 triangle hypergraph has no two disjoint triangles") {
    Hypergraph board = h_game_board(complete_graph(4), triangle());
    CHECK_FALSE(find_matching(board, 3, 2).has_value());
  }
  SUBCASE("backtracking recovers what greedy misses") {
    // greedy smallest-first takes {0,1} and blocks both of {1,2},{0,3};
    // the backtracking pass still finds the two disjoint edges
    Hypergraph h{5, {{0, 1}, {1, 2}, {0, 3}}};
    auto m = find_matching(h, 2, 2);
    REQUIRE(m.has_value());
    CHECK(m->edge_indices.size() == 2);
  }
}

TEST_CASE("greedy independent set") {
  GraphSpec path;
  path.vertex_count = 3;
  path.edges = {{0, 1}, {1, 2}};
  CHECK(greedy_independent_set(path) == std::vector<int>{0, 2});
  CHECK(greedy_independent_set(complete_graph(4)).size() == 1);
  GraphSpec empty5;
  empty5.vertex_count = 5;
  CHECK(greedy_independent_set(empty5).size() == 5);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nd(1, 12), pd(0, 99);
    GraphSpec g;
    g.vertex_count = nd(rng);
    for (int u = 0; u < g.vertex_count; ++u)
      for (int v = u + 1; v < g.vertex_count; ++v)
        if (pd(rng) < 30) g.edges.emplace_back(u, v);
    auto s = greedy_independent_set(g);
    int d = max_degree(g);
    CHECK(static_cast<int>(s.size()) * (d + 1) >= g.vertex_count);
    std::set<int> in(s.begin(), s.end());
    for (auto [u, v] : g.edges) {
      bool both = in.count(u) > 0 && in.count(v) > 0;
      CHECK_FALSE(both);
    }
  }
}

TEST_CASE("hyper engine basics") {
  Hypergraph h{4, {{0, 1}, {2, 3}}};
  HyperPosition pos = hyper_new_game(h, Bias{1, 1}, Rules::Strict, Player::Avoider);
  CHECK(pos.unclaimed() == 4);
  CHECK(hyper_validate(pos, {0}) == std::nullopt);
  CHECK(hyper_validate(pos, {0, 1}).has_value());  // strict p=1
  pos = hyper_apply(pos, {0});
  CHECK_FALSE(pos.avoider_lost);
  pos = hyper_apply(pos, {2});  // enforcer
  pos = hyper_apply(pos, {1});  // avoider completes {0,1}
  CHECK(pos.avoider_lost);
  CHECK(pos.lost_edge == 0);
}

TEST_CASE("hypergraph and graph file parsing") {
  Hypergraph h = parse_hypergraph("m 5\n0 1\n2 3 4\n");
  CHECK(h.ground_size == 5);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.edges[1] == std::vector<int>{2, 3, 4});
  CHECK_THROWS(parse_hypergraph("m 3\n0 7\n"));
  CHECK_THROWS(parse_hypergraph("x 3\n0 1\n"));

  GraphSpec g = parse_graph("n 3\n0 1\n1 2\n");
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 2);
  CHECK_THROWS(parse_graph("n 3\n0 0\n"));
  CHECK_THROWS(parse_graph("n 3\n0 1\n0 1\n"));
  CHECK_THROWS(parse_graph("n 3\n0 5\n"));
}

TEST_CASE("matching enforcer phases") {
  // three disjoint pairs plus one free element; strict (1,2)
  Hypergraph h{7, {{0, 1}, {2, 3}, {4, 5}}};
  Matching m{{0, 1, 2}};
  HyperPosition pos = hyper_new_game(h, Bias{1, 2}, Rules::Strict, Player::Enforcer);
  SUBCASE("phase 1 takes the off-matching element plus a top-up step") {
    HyperMove mv = matching_enforcer_move(pos, m);
    REQUIRE(mv.size() == 2);
    CHECK(std::find(mv.begin(), mv.end(), 6) != mv.end());
  }
  SUBCASE("phase 2 delegates to strategy S") {
    pos.owner[6] = CellOwner::Avoider;  // off element gone
    HyperMove mv = matching_enforcer_move(pos, m);
    CHECK(mv.size() == 2);
    for (int id : mv) CHECK(id < 6);
  }
  SUBCASE("a broken matching forfeits") {
    Matching overlap{{0, 0}};
    CHECK_THROWS_AS(matching_enforcer_move(pos, overlap), StrategyForfeit);
  }
}

TEST_CASE("isolate-vertex strategy on the perfect matching graph") {
  GraphSpec g;
  g.vertex_count = 8;
  g.edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  auto strat = make_isolate_vertex_avoider(g, 1);
  CHECK(strat.independent_set == std::vector<int>{0, 2, 4, 6});
  for (const auto& star : strat.stars) CHECK(star.size() == 1);

  // star decomposition sanity on a random graph: with S independent, every
  // S-incident edge lies in exactly one star
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> nd(2, 10), pd(0, 99);
    GraphSpec r;
    r.vertex_count = nd(rng);
    for (int u = 0; u < r.vertex_count; ++u)
      for (int v = u + 1; v < r.vertex_count; ++v)
        if (pd(rng) < 35) r.edges.emplace_back(u, v);
    auto s = make_isolate_vertex_avoider(r, 2);
    std::map<int, int> cover;
    for (const auto& star : s.stars)
      for (int e : star) cover[e]++;
    std::set<int> in(s.independent_set.begin(), s.independent_set.end());
    for (std::size_t e = 0; e < r.edges.size(); ++e) {
      auto [u, v] = r.edges[e];
      int expected = (in.count(u) || in.count(v)) ? 1 : 0;
      int got = cover[static_cast<int>(e)];
      CHECK(got == expected);
    }
  }
}

TEST_CASE("corollary estimate gate: d=2, q=2, n=20") {
  // N(q,1,d) <= 1+e^{(d-1)/q} <= 2e^{d/q} <= n/(d+1)
  int d = 2, q = 2, n = 20;
  CHECK(n_mono_enforcer(q, 1, d) == 2);
  auto [lo1, hi1] = exp_enclosure(Rational(d - 1, q), Rational(1, 1000000));
  CHECK(Rational(n_mono_enforcer(q, 1, d)) <= 1 + lo1);
  auto [lo2, hi2] = exp_enclosure(Rational(d, q), Rational(1, 1000000));
  CHECK(1 + hi1 <= 2 * lo2);
  CHECK(2 * hi2 <= Rational(n, d + 1));
}

TEST_CASE("exhaustive driver: isolate-vertex wins the d=1 instance outright") {
  GraphSpec g;
  g.vertex_count = 8;
  g.edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  auto strat = make_isolate_vertex_avoider(g, 1);
  Hypergraph board;
  board.ground_size = static_cast<int>(g.edges.size());
  HyperPosition start = hyper_new_game(board, Bias{1, 1}, Rules::Monotone, Player::Avoider);
  bool always = hyper_always_wins(start, Player::Avoider, strat.mover,
                                  [&](const HyperPosition& fin) {
                                    return isolated_vertex_achieved(strat, fin);
                                  });
  CHECK(always);
}
