#include "mbox/hypergames.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mbox/monotone_strategies.hpp"
#include "mbox/strict_strategies.hpp"

namespace mbox {

void validate_hypergraph(const Hypergraph& h) {
  if (h.ground_size < 1) throw std::runtime_error("hypergraph: ground size must be positive");
  for (const auto& e : h.edges) {
    if (e.empty()) throw std::runtime_error("hypergraph: empty edge");
    std::set<int> seen;
    for (int id : e) {
      if (id < 0 || id >= h.ground_size)
        throw std::runtime_error("hypergraph: element id " + std::to_string(id) + " out of range");
      if (!seen.insert(id).second)
        throw std::runtime_error("hypergraph: repeated element in edge");
    }
  }
}

void validate_graph(const GraphSpec& g) {
  if (g.vertex_count < 1) throw std::runtime_error("graph: vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
      throw std::runtime_error("graph: vertex out of range");
    if (u == v) throw std::runtime_error("graph: loop edge");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw std::runtime_error("graph: duplicate edge");
  }
}

int max_degree(const GraphSpec& g) {
  std::vector<int> deg(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Hypergraph h;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      if (!(ls >> tag) ) continue;  // skip blank leading lines
      if (tag != "m") throw std::runtime_error("hypergraph file: expected 'm <ground_size>'");
      if (!(ls >> h.ground_size)) throw std::runtime_error("hypergraph file: bad ground size");
      have_header = true;
      continue;
    }
    std::vector<int> edge;
    int id;
    while (ls >> id) edge.push_back(id);
    if (!edge.empty()) h.edges.push_back(std::move(edge));
  }
  if (!have_header) throw std::runtime_error("hypergraph file: missing 'm' header");
  validate_hypergraph(h);
  return h;
}

Hypergraph load_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

GraphSpec parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GraphSpec g;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "n") throw std::runtime_error("graph file: expected 'n <vertices>'");
      if (!(ls >> g.vertex_count)) throw std::runtime_error("graph file: bad vertex count");
      have_header = true;
      continue;
    }
    int u, v;
    if (ls >> u >> v) g.edges.emplace_back(u, v);
  }
  if (!have_header) throw std::runtime_error("graph file: missing 'n' header");
  validate_graph(g);
  return g;
}

GraphSpec load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

namespace {

bool edges_disjoint(const Hypergraph& h, const std::vector<int>& picked, int candidate) {
  for (int i : picked)
    for (int a : h.edges[i])
      for (int b : h.edges[candidate])
        if (a == b) return false;
  return true;
}

bool matching_search(const Hypergraph& h, const std::vector<int>& eligible, std::size_t idx,
                     int want, std::vector<int>& picked, long long& nodes) {
  if (static_cast<int>(picked.size()) >= want) return true;
  if (idx >= eligible.size()) return false;
  if (static_cast<int>(picked.size() + (eligible.size() - idx)) < want) return false;
  if (++nodes > 2'000'000) return false;
  // take eligible[idx]
  if (edges_disjoint(h, picked, eligible[idx])) {
    picked.push_back(eligible[idx]);
    if (matching_search(h, eligible, idx + 1, want, picked, nodes)) return true;
    picked.pop_back();
  }
  return matching_search(h, eligible, idx + 1, want, picked, nodes);
}

}  // namespace

std::optional<Matching> find_matching(const Hypergraph& h, int max_size, int want) {
  std::vector<int> eligible;
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (static_cast<int>(h.edges[i].size()) <= max_size) eligible.push_back(static_cast<int>(i));
  std::stable_sort(eligible.begin(), eligible.end(), [&](int a, int b) {
    return h.edges[a].size() < h.edges[b].size();
  });

  std::vector<int> picked;
  for (int i : eligible)
    if (edges_disjoint(h, picked, i)) picked.push_back(i);
  if (static_cast<int>(picked.size()) >= want) return Matching{std::move(picked)};

  picked.clear();
  long long nodes = 0;
  if (matching_search(h, eligible, 0, want, picked, nodes)) return Matching{std::move(picked)};
  return std::nullopt;
}

namespace {

// Backtracking enumeration of injective maps V(h) -> V(g) realizing every
// edge of h; collects the distinct image edge sets.
struct CopyEnumerator {
  const GraphSpec& g;
  const GraphSpec& h;
  std::vector<std::vector<bool>> g_adj;
  std::map<std::pair<int, int>, int> g_edge_id;
  std::vector<std::vector<std::pair<int, int>>> h_edges_by_max_vertex;
  std::vector<int> assignment;
  std::vector<bool> used;
  std::set<std::vector<int>> copies;

  CopyEnumerator(const GraphSpec& g_, const GraphSpec& h_) : g(g_), h(h_) {
    g_adj.assign(g.vertex_count, std::vector<bool>(g.vertex_count, false));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto [u, v] = g.edges[i];
      g_adj[u][v] = g_adj[v][u] = true;
      g_edge_id[std::minmax(u, v)] = static_cast<int>(i);
    }
    h_edges_by_max_vertex.assign(h.vertex_count + 1, {});
    for (auto [u, v] : h.edges) h_edges_by_max_vertex[std::max(u, v)].emplace_back(u, v);
    assignment.assign(h.vertex_count, -1);
    used.assign(g.vertex_count, false);
  }

  void run() { extend(0); }

  void extend(int hv) {
    if (hv == h.vertex_count) {
      std::vector<int> ids;
      ids.reserve(h.edges.size());
      for (auto [u, v] : h.edges)
        ids.push_back(g_edge_id.at(std::minmax(assignment[u], assignment[v])));
      std::sort(ids.begin(), ids.end());
      copies.insert(std::move(ids));
      return;
    }
    for (int gv = 0; gv < g.vertex_count; ++gv) {
      if (used[gv]) continue;
      bool ok = true;
      for (auto [u, v] : h_edges_by_max_vertex[hv]) {
        int other = u == hv ? v : u;
        if (assignment[other] >= 0 && !g_adj[gv][assignment[other]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[gv] = true;
      assignment[hv] = gv;
      extend(hv + 1);
      assignment[hv] = -1;
      used[gv] = false;
    }
  }
};

}  // namespace

Hypergraph h_game_board(const GraphSpec& g, const GraphSpec& h) {
  validate_graph(g);
  validate_graph(h);
  Hypergraph board;
  board.ground_size = static_cast<int>(g.edges.size());
  if (board.ground_size == 0) board.ground_size = 1;  // keep the board valid when E(g) is empty
  if (h.edges.empty()) return board;
  CopyEnumerator ce(g, h);
  ce.run();
  for (const auto& ids : ce.copies) board.edges.push_back(ids);
  return board;
}

std::vector<int> greedy_independent_set(const GraphSpec& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> removed(g.vertex_count, false);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (removed[v]) continue;
    out.push_back(v);
    removed[v] = true;
    for (int w : adj[v]) removed[w] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------

int HyperPosition::unclaimed() const {
  int n = 0;
  for (CellOwner o : owner)
    if (o == CellOwner::Unclaimed) ++n;
  return n;
}

HyperPosition hyper_new_game(const Hypergraph& h, Bias bias, Rules rules, Player first) {
  validate_hypergraph(h);
  if (bias.p < 1 || bias.q < 1) throw std::invalid_argument("hyper_new_game: bias must be positive");
  HyperPosition pos;
  pos.board = h;
  pos.bias = bias;
  pos.rules = rules;
  pos.to_move = first;
  pos.owner.assign(h.ground_size, CellOwner::Unclaimed);
  return pos;
}

std::optional<std::string> hyper_validate(const HyperPosition& pos, const HyperMove& mv) {
  if (pos.avoider_lost) return "game is over (avoider already lost)";
  int board = pos.unclaimed();
  if (board == 0) return "board is empty";
  if (mv.empty()) return "empty move";
  std::set<int> seen;
  for (int id : mv) {
    if (id < 0 || id >= pos.board.ground_size) return "element id out of range";
    if (!seen.insert(id).second) return "repeated element in move";
    if (pos.owner[id] != CellOwner::Unclaimed) return "element already claimed";
  }
  int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
  int need = std::min(bias, board);
  int total = static_cast<int>(mv.size());
  if (pos.rules == Rules::Strict) {
    if (total != need)
      return "strict move must claim exactly " + std::to_string(need) + " elements";
  } else if (total < need) {
    return "monotone move must claim at least " + std::to_string(need) + " elements";
  }
  return std::nullopt;
}

HyperPosition hyper_apply(const HyperPosition& pos, const HyperMove& mv) {
  if (auto violation = hyper_validate(pos, mv)) throw std::invalid_argument(*violation);
  HyperPosition next = pos;
  CellOwner mark = pos.to_move == Player::Avoider ? CellOwner::Avoider : CellOwner::Enforcer;
  for (int id : mv) next.owner[id] = mark;
  if (mark == CellOwner::Avoider) {
    for (std::size_t e = 0; e < next.board.edges.size(); ++e) {
      bool all = true;
      for (int id : next.board.edges[e])
        if (next.owner[id] != CellOwner::Avoider) {
          all = false;
          break;
        }
      if (all) {
        next.avoider_lost = true;
        next.lost_edge = static_cast<int>(e);
        break;
      }
    }
  }
  next.to_move = opponent(pos.to_move);
  return next;
}

HyperVerdict hyper_play_match(const HyperPosition& start, const HyperMover& avoider,
                              const HyperMover& enforcer) {
  HyperVerdict verdict;
  HyperPosition pos = start;
  while (true) {
    if (pos.avoider_lost) {
      verdict.winner = Player::Enforcer;
      verdict.lost_edge = pos.lost_edge;
      return verdict;
    }
    if (pos.unclaimed() == 0) {
      verdict.winner = Player::Avoider;
      return verdict;
    }
    Player mover = pos.to_move;
    const HyperMover& f = mover == Player::Avoider ? avoider : enforcer;
    HyperMove mv;
    try {
      mv = f(pos);
    } catch (const StrategyForfeit&) {
      verdict.winner = opponent(mover);
      verdict.forfeited_by = mover;
      return verdict;
    }
    if (hyper_validate(pos, mv)) {
      verdict.winner = opponent(mover);
      verdict.forfeited_by = mover;
      return verdict;
    }
    verdict.transcript.emplace_back(mover, mv);
    pos = hyper_apply(pos, mv);
  }
}

namespace {

void check_matching(const Hypergraph& h, const Matching& m) {
  if (m.edge_indices.empty()) throw StrategyForfeit("matching-enforcer: empty matching");
  std::set<int> covered;
  for (int e : m.edge_indices) {
    if (e < 0 || e >= static_cast<int>(h.edges.size()))
      throw StrategyForfeit("matching-enforcer: matching edge index out of range");
    for (int id : h.edges[e])
      if (!covered.insert(id).second)
        throw StrategyForfeit("matching-enforcer: matching edges are not disjoint");
  }
}

// Box view of the matching inside a hyper position. boxes[i] follows
// m.edge_indices[i]; fully claimed boxes keep remaining == 0 so the
// translation back to element ids stays index-aligned.
struct BoxView {
  std::vector<int> remaining;
  std::vector<bool> touched;  // Enforcer has claimed inside

  BoxView(const HyperPosition& pos, const Matching& m) {
    for (int e : m.edge_indices) {
      int rem = 0;
      bool touch = false;
      for (int id : pos.board.edges[e]) {
        if (pos.owner[id] == CellOwner::Unclaimed) ++rem;
        if (pos.owner[id] == CellOwner::Enforcer) touch = true;
      }
      remaining.push_back(rem);
      touched.push_back(touch);
    }
  }
};

// count lowest-id unclaimed elements of the given matching box
void take_from_box(const HyperPosition& pos, const Matching& m, int box, int count,
                   std::set<int>& taken, HyperMove& mv) {
  for (int id : pos.board.edges[m.edge_indices[box]]) {
    if (count == 0) break;
    if (pos.owner[id] == CellOwner::Unclaimed && !taken.count(id)) {
      taken.insert(id);
      mv.push_back(id);
      --count;
    }
  }
  if (count != 0) throw StrategyForfeit("matching-enforcer: box translation ran out of elements");
}

}  // namespace

HyperMove matching_enforcer_move(const HyperPosition& pos, const Matching& m) {
  if (pos.to_move != Player::Enforcer) throw StrategyForfeit("matching-enforcer: not Enforcer's turn");
  check_matching(pos.board, m);

  std::vector<bool> in_matching(pos.board.ground_size, false);
  for (int e : m.edge_indices)
    for (int id : pos.board.edges[e]) in_matching[id] = true;

  std::vector<int> off;
  for (int id = 0; id < pos.board.ground_size; ++id)
    if (pos.owner[id] == CellOwner::Unclaimed && !in_matching[id]) off.push_back(id);

  int board = pos.unclaimed();
  int q = pos.bias.q;
  int budget = std::min(q, board);

  HyperMove mv;
  std::set<int> taken;

  if (!off.empty()) {
    // Phase 1: exhaust the off-matching elements first.
    int take_off = pos.rules == Rules::Strict ? std::min<int>(budget, off.size())
                                              : static_cast<int>(off.size());
    for (int i = 0; i < take_off; ++i) {
      mv.push_back(off[i]);
      taken.insert(off[i]);
    }
    // Top up inside the matching, one step at a time from the currently
    // largest box (this is the t-element leftover the strict theorem absorbs).
    BoxView view(pos, m);
    while (static_cast<int>(mv.size()) < budget) {
      int best = -1;
      for (std::size_t b = 0; b < view.remaining.size(); ++b)
        if (view.remaining[b] > (best < 0 ? 0 : view.remaining[best])) best = static_cast<int>(b);
      if (best < 0) break;
      take_from_box(pos, m, best, 1, taken, mv);
      --view.remaining[best];
    }
    std::sort(mv.begin(), mv.end());
    return mv;
  }

  // Phase 2: the game lives on the matching boxes; delegate to the box
  // strategy and translate per-box counts back to element ids.
  BoxView view(pos, m);
  std::vector<int> live;  // view index per engine box
  std::vector<int> sizes;
  Position boxpos;
  boxpos.bias = pos.bias;
  boxpos.rules = pos.rules;
  boxpos.to_move = Player::Enforcer;
  for (std::size_t b = 0; b < view.remaining.size(); ++b) {
    if (view.remaining[b] == 0) continue;
    live.push_back(static_cast<int>(b));
    boxpos.boxes.push_back(BoxState{view.remaining[b], view.touched[b], static_cast<int>(b)});
  }
  std::sort(boxpos.boxes.begin(), boxpos.boxes.end(), [](const BoxState& a, const BoxState& b) {
    if (a.remaining != b.remaining) return a.remaining < b.remaining;
    return a.id < b.id;
  });
  if (boxpos.boxes.empty()) throw StrategyForfeit("matching-enforcer: no matching elements left");

  Move box_mv = pos.rules == Rules::Strict ? strict_enforcer_steps(boxpos, pos.bias.q)
                                           : mono_enforcer_move(boxpos);
  for (const auto& [idx, count] : box_mv.claims)
    take_from_box(pos, m, boxpos.boxes[idx].id, count, taken, mv);
  std::sort(mv.begin(), mv.end());
  return mv;
}

HyperMover make_matching_enforcer(const Hypergraph& h, const Matching& m) {
  check_matching(h, m);
  Matching copy = m;
  return [copy](const HyperPosition& pos) { return matching_enforcer_move(pos, copy); };
}

IsolateVertexStrategy make_isolate_vertex_avoider(const GraphSpec& g, int q) {
  validate_graph(g);
  if (q < 1) throw std::invalid_argument("isolate-vertex: q must be positive");
  IsolateVertexStrategy strat;
  strat.graph = g;
  strat.independent_set = greedy_independent_set(g);
  std::vector<int> star_of(g.vertex_count, -1);
  for (std::size_t i = 0; i < strat.independent_set.size(); ++i)
    star_of[strat.independent_set[i]] = static_cast<int>(i);
  strat.stars.assign(strat.independent_set.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (star_of[u] >= 0) strat.stars[star_of[u]].push_back(static_cast<int>(e));
    if (star_of[v] >= 0) strat.stars[star_of[v]].push_back(static_cast<int>(e));
  }

  GraphSpec graph = g;
  auto stars = strat.stars;
  int q_real = q;
  strat.mover = [graph, stars, q_real](const HyperPosition& pos) -> HyperMove {
    if (pos.to_move != Player::Avoider) throw StrategyForfeit("isolate-vertex: not Avoider's turn");

    bool first_move = true;
    for (CellOwner o : pos.owner)
      if (o == CellOwner::Avoider) {
        first_move = false;
        break;
      }

    std::vector<bool> in_star(pos.board.ground_size, false);
    for (const auto& star : stars)
      for (int e : star) in_star[e] = true;

    if (first_move) {
      HyperMove mv;
      for (int e = 0; e < pos.board.ground_size; ++e)
        if (pos.owner[e] == CellOwner::Unclaimed && !in_star[e]) mv.push_back(e);
      if (!mv.empty()) return mv;
      // Every edge meets S; fall through to the box game straight away.
    }

    // Box view over the stars: the roles swap, so a star is dangerous for
    // the box game while the real Avoider has not claimed in it, and the
    // box game's bias is (q, 1) with the box Enforcer (us) to move.
    Position boxpos;
    boxpos.bias = Bias{q_real, 1};
    boxpos.rules = Rules::Monotone;
    boxpos.to_move = Player::Enforcer;
    bool already_isolated = false;
    for (std::size_t s = 0; s < stars.size(); ++s) {
      int rem = 0;
      bool we_touched = false;
      bool enforcer_all = !stars[s].empty();
      for (int e : stars[s]) {
        if (pos.owner[e] == CellOwner::Unclaimed) ++rem;
        if (pos.owner[e] == CellOwner::Avoider) we_touched = true;
        if (pos.owner[e] != CellOwner::Enforcer) enforcer_all = false;
      }
      if (enforcer_all && !stars[s].empty()) already_isolated = true;
      if (rem > 0) boxpos.boxes.push_back(BoxState{rem, we_touched, static_cast<int>(s)});
    }

    auto lowest_unclaimed = [&]() -> HyperMove {
      for (int e = 0; e < pos.board.ground_size; ++e)
        if (pos.owner[e] == CellOwner::Unclaimed) return {e};
      throw StrategyForfeit("isolate-vertex: no unclaimed element");
    };

    if (already_isolated || boxpos.boxes.empty()) return lowest_unclaimed();

    bool any_dangerous = false;
    for (const auto& b : boxpos.boxes)
      if (!b.safe) any_dangerous = true;
    if (!any_dangerous) return lowest_unclaimed();

    std::sort(boxpos.boxes.begin(), boxpos.boxes.end(), [](const BoxState& a, const BoxState& b) {
      if (a.remaining != b.remaining) return a.remaining < b.remaining;
      return a.id < b.id;
    });

    Move box_mv = mono_enforcer_move(boxpos);
    HyperMove mv;
    for (const auto& [idx, count] : box_mv.claims) {
      int star = boxpos.boxes[idx].id;
      int left = count;
      for (int e : stars[star]) {
        if (left == 0) break;
        if (pos.owner[e] == CellOwner::Unclaimed) {
          mv.push_back(e);
          --left;
        }
      }
      if (left != 0) throw StrategyForfeit("isolate-vertex: star translation ran out of edges");
    }
    std::sort(mv.begin(), mv.end());
    if (mv.empty()) return lowest_unclaimed();
    return mv;
  };
  return strat;
}

bool isolated_vertex_achieved(const IsolateVertexStrategy& strategy,
                              const HyperPosition& final_pos) {
  for (const auto& star : strategy.stars) {
    if (star.empty()) return true;  // a degree-0 vertex of S is isolated outright
    bool all = true;
    for (int e : star)
      if (final_pos.owner[e] != CellOwner::Enforcer) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

HyperMover make_random_hyper_mover(std::uint64_t seed, int extra_chance_pct) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng, extra_chance_pct](const HyperPosition& pos) -> HyperMove {
    std::vector<int> open;
    for (int i = 0; i < pos.board.ground_size; ++i)
      if (pos.owner[i] == CellOwner::Unclaimed) open.push_back(i);
    int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
    int total = std::min<int>(bias, open.size());
    if (pos.rules == Rules::Monotone && static_cast<int>(open.size()) > total) {
      std::uniform_int_distribution<int> pct(0, 99);
      if (pct(*rng) < extra_chance_pct) {
        std::uniform_int_distribution<int> extra(1, static_cast<int>(open.size()) - total);
        total += extra(*rng);
      }
    }
    std::shuffle(open.begin(), open.end(), *rng);
    open.resize(total);
    std::sort(open.begin(), open.end());
    return open;
  };
}

HyperMover make_spread_enforcer(const std::vector<std::vector<int>>& stars) {
  return [stars](const HyperPosition& pos) -> HyperMove {
    int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
    int total = std::min(bias, pos.unclaimed());
    std::vector<std::pair<int, int>> order;  // (-open, star index)
    for (std::size_t s = 0; s < stars.size(); ++s) {
      int open = 0;
      for (int e : stars[s])
        if (pos.owner[e] == CellOwner::Unclaimed) ++open;
      if (open > 0) order.emplace_back(-open, static_cast<int>(s));
    }
    std::sort(order.begin(), order.end());
    HyperMove mv;
    for (const auto& [neg, s] : order) {
      (void)neg;
      if (static_cast<int>(mv.size()) == total) break;
      for (int e : stars[s])
        if (pos.owner[e] == CellOwner::Unclaimed &&
            std::find(mv.begin(), mv.end(), e) == mv.end()) {
          mv.push_back(e);
          break;
        }
    }
    for (int e = 0; e < pos.board.ground_size && static_cast<int>(mv.size()) < total; ++e)
      if (pos.owner[e] == CellOwner::Unclaimed && std::find(mv.begin(), mv.end(), e) == mv.end())
        mv.push_back(e);
    std::sort(mv.begin(), mv.end());
    return mv;
  };
}

// ---------------------------------------------------------------------------

namespace {

struct MaskSearch {
  const HyperPosition& root;
  Player fixed_side;
  const HyperMover& fixed;
  const std::function<bool(const HyperPosition&)>& success;
  std::unordered_map<std::uint64_t, bool> memo;

  HyperPosition materialize(std::uint32_t a_mask, std::uint32_t e_mask, Player to_move) const {
    HyperPosition pos = root;
    pos.to_move = to_move;
    for (int i = 0; i < root.board.ground_size; ++i) {
      if (a_mask & (1u << i))
        pos.owner[i] = CellOwner::Avoider;
      else if (e_mask & (1u << i))
        pos.owner[i] = CellOwner::Enforcer;
    }
    for (std::size_t e = 0; e < pos.board.edges.size(); ++e) {
      bool all = true;
      for (int id : pos.board.edges[e])
        if (pos.owner[id] != CellOwner::Avoider) {
          all = false;
          break;
        }
      if (all) {
        pos.avoider_lost = true;
        pos.lost_edge = static_cast<int>(e);
        break;
      }
    }
    return pos;
  }

  bool run(std::uint32_t a_mask, std::uint32_t e_mask, Player to_move) {
    std::uint64_t key = (static_cast<std::uint64_t>(a_mask) << 25) ^ e_mask ^
                        (to_move == Player::Avoider ? 0 : (1ull << 58));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    HyperPosition pos = materialize(a_mask, e_mask, to_move);
    bool result;
    if (pos.avoider_lost || pos.unclaimed() == 0) {
      result = success(pos);
    } else if (to_move == fixed_side) {
      bool forfeit = false;
      HyperMove mv;
      try {
        mv = fixed(pos);
      } catch (const StrategyForfeit&) {
        forfeit = true;
      }
      if (!forfeit && hyper_validate(pos, mv)) forfeit = true;
      if (forfeit) {
        result = false;
      } else {
        auto [na, ne] = advance(a_mask, e_mask, to_move, mv);
        result = run(na, ne, opponent(to_move));
      }
    } else {
      // every legal free-side move must still lose
      result = true;
      int bias = to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
      std::uint32_t open = 0;
      for (int i = 0; i < pos.board.ground_size; ++i)
        if (pos.owner[i] == CellOwner::Unclaimed) open |= (1u << i);
      int open_count = std::popcount(open);
      int need = std::min(bias, open_count);
      // enumerate submasks of `open`
      for (std::uint32_t sub = open;; sub = (sub - 1) & open) {
        if (sub != 0) {
          int sz = std::popcount(sub);
          bool legal = pos.rules == Rules::Strict ? sz == need : sz >= need;
          if (legal) {
            HyperMove mv;
            for (int i = 0; i < pos.board.ground_size; ++i)
              if (sub & (1u << i)) mv.push_back(i);
            auto [na, ne] = advance(a_mask, e_mask, to_move, mv);
            if (!run(na, ne, opponent(to_move))) {
              result = false;
              break;
            }
          }
        }
        if (sub == 0) break;
      }
    }
    memo[key] = result;
    return result;
  }

  std::pair<std::uint32_t, std::uint32_t> advance(std::uint32_t a_mask, std::uint32_t e_mask,
                                                  Player mover, const HyperMove& mv) const {
    std::uint32_t bits = 0;
    for (int id : mv) bits |= (1u << id);
    if (mover == Player::Avoider) return {a_mask | bits, e_mask};
    return {a_mask, e_mask | bits};
  }
};

}  // namespace

bool hyper_always_wins(const HyperPosition& start, Player fixed_side, const HyperMover& fixed,
                       const std::function<bool(const HyperPosition&)>& success) {
  if (start.board.ground_size > 24)
    throw std::invalid_argument("hyper_always_wins: ground size above 24");
  std::uint32_t a_mask = 0, e_mask = 0;
  for (int i = 0; i < start.board.ground_size; ++i) {
    if (start.owner[i] == CellOwner::Avoider) a_mask |= (1u << i);
    if (start.owner[i] == CellOwner::Enforcer) e_mask |= (1u << i);
  }
  MaskSearch search{start, fixed_side, fixed, success, {}};
  return search.run(a_mask, e_mask, start.to_move);
}

}  // namespace mbox
