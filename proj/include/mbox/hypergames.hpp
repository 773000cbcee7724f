#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbox/engine.hpp"

namespace mbox {

/// General board: ground elements 0..m-1 and a family of target sets.
struct Hypergraph {
  int ground_size = 0;
  std::vector<std::vector<int>> edges;
};

/// Indices into Hypergraph::edges; the selected edges are pairwise disjoint.
struct Matching {
  std::vector<int> edge_indices;
};

/// Simple graph: vertices 0..n-1, no loops, no duplicate edges.
struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

void validate_hypergraph(const Hypergraph& h);
void validate_graph(const GraphSpec& g);
int max_degree(const GraphSpec& g);

/// File format: first line "m <ground_size>", then one line of
/// space-separated element ids per edge.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph_file(const std::string& path);

/// File format: first line "n <vertices>", then one "u v" pair per line.
GraphSpec parse_graph(const std::string& text);
GraphSpec load_graph_file(const std::string& path);

/// A matching of at least `want` pairwise disjoint edges, each of size at
/// most max_size. Greedy smallest-edge-first, with exhaustive backtracking
/// when greedy fails and the instance is small. Absent when none is found.
std::optional<Matching> find_matching(const Hypergraph& h, int max_size, int want);

/// Ground set = E(g); one hyperedge per subgraph of g isomorphic to h
/// (exact backtracking enumeration, duplicate edge sets removed).
Hypergraph h_game_board(const GraphSpec& g, const GraphSpec& h);

/// Repeatedly takes the lowest-index remaining vertex and deletes its
/// neighbourhood; the result has at least n/(maxdeg+1) vertices.
std::vector<int> greedy_independent_set(const GraphSpec& g);

// ---------------------------------------------------------------------------
// The (p,q) game on a general hypergraph. Avoider loses once every element
// of some target set is his.

enum class CellOwner : std::uint8_t { Unclaimed, Avoider, Enforcer };

using HyperMove = std::vector<int>;  // element ids, strictly increasing

struct HyperPosition {
  Hypergraph board;
  Bias bias;
  Rules rules = Rules::Strict;
  Player to_move = Player::Avoider;
  std::vector<CellOwner> owner;
  bool avoider_lost = false;
  std::optional<int> lost_edge;

  int unclaimed() const;
};

HyperPosition hyper_new_game(const Hypergraph& h, Bias bias, Rules rules, Player first);
std::optional<std::string> hyper_validate(const HyperPosition& pos, const HyperMove& mv);
HyperPosition hyper_apply(const HyperPosition& pos, const HyperMove& mv);

using HyperMover = std::function<HyperMove(const HyperPosition&)>;

struct HyperVerdict {
  Player winner = Player::Avoider;
  std::optional<int> lost_edge;
  std::optional<Player> forfeited_by;
  std::vector<std::pair<Player, HyperMove>> transcript;
};

HyperVerdict hyper_play_match(const HyperPosition& start, const HyperMover& avoider,
                              const HyperMover& enforcer);

/// Enforcer's matching reduction. Phase 1 exhausts the elements outside the
/// matching (strict: q per move; monotone: all at once), topping up inside
/// the currently largest matching box when fewer than q are left — the
/// partially spent move at the phase boundary is exactly the t-element
/// first-move allowance the strict theorem grants. Phase 2 delegates to
/// strategy S (strict) or the monotone Enforcer strategy on the matching
/// boxes. Throws StrategyForfeit when the matching is structurally unusable
/// (empty, out of range, or not pairwise disjoint).
HyperMove matching_enforcer_move(const HyperPosition& pos, const Matching& m);

HyperMover make_matching_enforcer(const Hypergraph& h, const Matching& m);

/// Avoider's role swap for isolating a vertex in the monotone (1,q) game on
/// E(g): first claim every edge avoiding the independent set S, then play
/// the monotone box Enforcer with bias (q,1) on the stars of S. Returns the
/// mover together with S so callers can check the isolation property.
struct IsolateVertexStrategy {
  GraphSpec graph;
  std::vector<int> independent_set;
  std::vector<std::vector<int>> stars;  // edge ids per independent-set vertex
  HyperMover mover;
};

IsolateVertexStrategy make_isolate_vertex_avoider(const GraphSpec& g, int q);

/// True iff some star of `strategy.independent_set` is fully Enforcer-owned,
/// i.e. that vertex is isolated in Avoider's graph.
bool isolated_vertex_achieved(const IsolateVertexStrategy& strategy, const HyperPosition& final_pos);

/// Seeded random legal hypergame player, the baseline adversary.
HyperMover make_random_hyper_mover(std::uint64_t seed, int extra_chance_pct = 30);

/// Enforcer script that spreads its claims across distinct fullest stars,
/// avoiding finishing any single one: the natural adversary for the
/// isolate-a-vertex strategy.
HyperMover make_spread_enforcer(const std::vector<std::vector<int>>& stars);

/// Exhaustive adversary check: does the fixed side, playing `fixed`, reach a
/// terminal state satisfying `success` against EVERY legal free-side move
/// sequence? Ground size must be at most 24 (bitmask search, memoized).
/// Strict free moves enumerate exact-size subsets, monotone free moves every
/// subset of at least the bias.
bool hyper_always_wins(const HyperPosition& start, Player fixed_side, const HyperMover& fixed,
                       const std::function<bool(const HyperPosition&)>& success);

}  // namespace mbox
