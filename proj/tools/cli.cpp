#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mbox/acceptance.hpp"
#include "mbox/criteria.hpp"
#include "mbox/engine.hpp"
#include "mbox/hypergames.hpp"
#include "mbox/monotone_strategies.hpp"
#include "mbox/random_strategies.hpp"
#include "mbox/solver.hpp"
#include "mbox/strict_strategies.hpp"

namespace mbox {

namespace {

std::uint64_t env_node_budget() {
  if (const char* env = std::getenv("MBOX_NODE_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodeBudget;
}

std::string format_move(const Move& mv) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mv.claims.size(); ++i) {
    if (i) out << " ";
    out << mv.claims[i].second << "@" << mv.claims[i].first;
  }
  return out.str();
}

// Plays the solver's optimal move at every turn.
class OptimalStrategy : public Strategy {
 public:
  explicit OptimalStrategy(Solver& solver) : solver_(solver) {}

  Move choose(const Position& pos) override {
    SolveResult r = solver_.solve(pos);
    if (r.outcome == Outcome::Unsolved || !r.optimal_move)
      throw StrategyForfeit("optimal: node budget exhausted");
    return *r.optimal_move;
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<OptimalStrategy>(solver_);
  }
  std::string name() const override { return "optimal"; }

 private:
  Solver& solver_;
};

std::unique_ptr<Strategy> make_box_strategy(const std::string& name, const Position& start,
                                            Player side, Solver& solver, std::uint64_t seed) {
  if (name == "thm12") {
    if (side != Player::Avoider) throw std::runtime_error("thm12 plays Avoider only");
    return std::make_unique<StrictAvoider>(start);
  }
  if (name == "strategy-s") {
    if (side != Player::Enforcer) throw std::runtime_error("strategy-s plays Enforcer only");
    return std::make_unique<StrictEnforcer>();
  }
  if (name == "mono-avoider") {
    if (side != Player::Avoider) throw std::runtime_error("mono-avoider plays Avoider only");
    return std::make_unique<MonoAvoider>(start);
  }
  if (name == "mono-enforcer") {
    if (side != Player::Enforcer) throw std::runtime_error("mono-enforcer plays Enforcer only");
    return std::make_unique<MonoEnforcer>();
  }
  if (name == "largest-box") {
    if (side != Player::Enforcer) throw std::runtime_error("largest-box plays Enforcer only");
    return std::make_unique<LargestBoxEnforcer>();
  }
  if (name == "optimal") return std::make_unique<OptimalStrategy>(solver);
  if (name == "random") return std::make_unique<RandomStrategy>(seed);
  throw std::runtime_error("unknown box-game strategy: " + name +
                           " (expected thm12, strategy-s, mono-avoider, mono-enforcer, "
                           "largest-box, optimal or random)");
}

enum class BoardKind { Box, Hyper, Graph };

BoardKind sniff_board(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "m") return BoardKind::Hyper;
    if (tok == "n") return BoardKind::Graph;
    return BoardKind::Box;
  }
  throw std::runtime_error("empty board file: " + path);
}

std::string format_hyper_move(const HyperMove& mv) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (i) out << " ";
    out << mv[i];
  }
  return out.str();
}

struct ListSpec {
  std::vector<int> values;
};

ListSpec parse_list(const std::string& text) {
  ListSpec out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t dots = token.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(token.substr(0, dots));
      int hi = std::stoi(token.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.values.push_back(v);
    } else if (!token.empty()) {
      out.values.push_back(std::stoi(token));
    }
  }
  if (out.values.empty()) throw std::runtime_error("empty list: '" + text + "'");
  for (int v : out.values)
    if (v < 1) throw std::runtime_error("list values must be positive: '" + text + "'");
  return out;
}

int cmd_solve(const std::string& file, const std::string& cache, std::uint64_t budget,
              std::ostream& out) {
  Position pos = load_game_file(file);
  Solver solver(budget);
  if (!cache.empty()) {
    std::ifstream probe(cache);
    if (probe.good()) solver.load_cache(cache);
  }
  SolveResult res = solver.solve(pos);
  out << "winner: " << to_string(res.outcome) << "\n";
  out << "nodes: " << res.node_count << "\n";
  if (res.outcome == Outcome::Unsolved) return 2;
  std::ostringstream line;
  Position cur = pos;
  bool first = true;
  while (!cur.avoider_lost && cur.total_remaining() > 0) {
    SolveResult step = solver.solve(cur);
    if (!step.optimal_move) break;
    if (!first) line << " | ";
    line << (cur.to_move == Player::Avoider ? "A " : "E ") << format_move(*step.optimal_move);
    first = false;
    cur = apply_move(cur, *step.optimal_move);
  }
  out << "line: " << line.str() << "\n";
  if (!cache.empty()) solver.save_cache(cache);
  return 0;
}

int cmd_play_box(const Position& start, const std::string& avoider_name,
                 const std::string& enforcer_name, std::uint64_t budget, std::uint64_t seed,
                 std::ostream& out) {
  Solver solver(budget);
  std::unique_ptr<Strategy> avoider;
  std::unique_ptr<Strategy> enforcer;
  std::optional<Player> construction_forfeit;
  try {
    avoider = make_box_strategy(avoider_name, start, Player::Avoider, solver, seed);
  } catch (const StrategyForfeit&) {
    construction_forfeit = Player::Avoider;
  }
  if (!construction_forfeit) {
    try {
      enforcer = make_box_strategy(enforcer_name, start, Player::Enforcer, solver, seed + 1);
    } catch (const StrategyForfeit&) {
      construction_forfeit = Player::Enforcer;
    }
  }
  if (construction_forfeit) {
    out << "winner: " << to_string(opponent(*construction_forfeit)) << " (forfeit by "
        << to_string(*construction_forfeit) << " at setup)\n";
    return 0;
  }
  Verdict v = play_match(start, *avoider, *enforcer);
  for (const auto& [player, mv] : v.transcript)
    out << (player == Player::Avoider ? "A " : "E ") << format_move(mv) << "\n";
  out << "winner: " << to_string(v.winner);
  if (v.losing_box) out << " (box " << *v.losing_box << " completed by Avoider)";
  if (v.forfeited_by) out << " (forfeit by " << to_string(*v.forfeited_by) << ")";
  out << "\n";
  return 0;
}

int cmd_play(const std::string& file, const std::string& avoider_name,
             const std::string& enforcer_name, int p, int q, const std::string& rules_name,
             const std::string& first_name, std::uint64_t budget, std::uint64_t seed,
             std::ostream& out) {
  BoardKind kind = sniff_board(file);
  if (kind == BoardKind::Box)
    return cmd_play_box(load_game_file(file), avoider_name, enforcer_name, budget, seed, out);

  Rules rules = rules_name == "monotone" ? Rules::Monotone : Rules::Strict;
  Player first = first_name == "enforcer" ? Player::Enforcer : Player::Avoider;
  Bias bias{p, q};

  Hypergraph board;
  IsolateVertexStrategy isolate;
  bool have_isolate = false;
  GraphSpec graph;
  if (kind == BoardKind::Graph) {
    graph = load_graph_file(file);
    board.ground_size = static_cast<int>(graph.edges.size());
    if (board.ground_size == 0) throw std::runtime_error("graph has no edges to play on");
  } else {
    board = load_hypergraph_file(file);
  }

  HyperPosition pos = hyper_new_game(board, bias, rules, first);

  auto make_side = [&](const std::string& name, Player side, std::uint64_t s) -> HyperMover {
    if (name == "random") return make_random_hyper_mover(s);
    if (name == "matching-enforcer") {
      if (side != Player::Enforcer) throw std::runtime_error("matching-enforcer plays Enforcer only");
      if (kind != BoardKind::Hyper) throw std::runtime_error("matching-enforcer needs a hypergraph board");
      int max_size = 0;
      for (const auto& e : board.edges) max_size = std::max<int>(max_size, e.size());
      auto m = find_matching(board, max_size, 1);
      if (!m) throw std::runtime_error("no matching found in the hypergraph");
      // grow greedily to the largest matching the finder reaches
      for (int want = static_cast<int>(m->edge_indices.size()) + 1;; ++want) {
        auto bigger = find_matching(board, max_size, want);
        if (!bigger) break;
        m = bigger;
      }
      return make_matching_enforcer(board, *m);
    }
    if (name == "isolate-vertex") {
      if (side != Player::Avoider) throw std::runtime_error("isolate-vertex plays Avoider only");
      if (kind != BoardKind::Graph) throw std::runtime_error("isolate-vertex needs a graph board");
      if (p != 1) throw std::runtime_error("isolate-vertex requires p=1");
      if (rules != Rules::Monotone) throw std::runtime_error("isolate-vertex requires monotone rules");
      isolate = make_isolate_vertex_avoider(graph, q);
      have_isolate = true;
      return isolate.mover;
    }
    if (name == "spread") {
      if (kind != BoardKind::Graph) throw std::runtime_error("spread needs a graph board");
      auto tmp = make_isolate_vertex_avoider(graph, q);
      return make_spread_enforcer(tmp.stars);
    }
    throw std::runtime_error("unknown strategy for this board: " + name);
  };

  HyperMover avoider = make_side(avoider_name, Player::Avoider, seed);
  HyperMover enforcer = make_side(enforcer_name, Player::Enforcer, seed + 1);

  HyperVerdict v;
  HyperPosition cur = pos;
  while (true) {
    if (cur.avoider_lost) {
      v.winner = Player::Enforcer;
      v.lost_edge = cur.lost_edge;
      break;
    }
    if (cur.unclaimed() == 0) {
      v.winner = Player::Avoider;
      break;
    }
    const HyperMover& f = cur.to_move == Player::Avoider ? avoider : enforcer;
    HyperMove mv;
    try {
      mv = f(cur);
    } catch (const StrategyForfeit&) {
      v.forfeited_by = cur.to_move;
      v.winner = opponent(cur.to_move);
      break;
    }
    if (hyper_validate(cur, mv)) {
      v.forfeited_by = cur.to_move;
      v.winner = opponent(cur.to_move);
      break;
    }
    out << (cur.to_move == Player::Avoider ? "A " : "E ") << format_hyper_move(mv) << "\n";
    cur = hyper_apply(cur, mv);
  }
  out << "winner: " << to_string(v.winner);
  if (v.lost_edge) out << " (edge " << *v.lost_edge << " completed by Avoider)";
  if (v.forfeited_by) out << " (forfeit by " << to_string(*v.forfeited_by) << ")";
  out << "\n";
  if (have_isolate)
    out << "isolated vertex: " << (isolated_vertex_achieved(isolate, cur) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sweep(const ListSpec& ps, const ListSpec& qs, const ListSpec& ks, const ListSpec& ns,
              const std::string& rules_name, const std::string& first_name,
              const std::string& source, const std::string& out_file, std::uint64_t budget,
              std::ostream& out) {
  std::vector<Rules> rules_list;
  if (rules_name == "strict" || rules_name == "both") rules_list.push_back(Rules::Strict);
  if (rules_name == "monotone" || rules_name == "both") rules_list.push_back(Rules::Monotone);
  if (rules_list.empty()) throw std::runtime_error("rules must be strict, monotone or both");

  std::vector<Player> first_list;
  if (first_name == "avoider" || first_name == "both") first_list.push_back(Player::Avoider);
  if (first_name == "enforcer" || first_name == "both") first_list.push_back(Player::Enforcer);
  if (first_list.empty()) throw std::runtime_error("first must be avoider, enforcer or both");

  Solver solver(budget);
  std::vector<std::string> rows;
  bool any_unsolved = false;
  for (int p : ps.values)
    for (int q : qs.values)
      for (int k : ks.values)
        for (int n : ns.values)
          for (Rules rules : rules_list)
            for (Player first : first_list) {
              Position pos = new_game(std::vector<int>(n, k), Bias{p, q}, rules, first);
              std::string winner;
              if (source == "solver") {
                SolveResult r = solver.solve(pos);
                winner = to_string(r.outcome);
                if (r.outcome == Outcome::Unsolved) any_unsolved = true;
              } else if (source == "strategy") {
                std::unique_ptr<Strategy> avoider;
                std::unique_ptr<Strategy> enforcer;
                std::optional<Player> setup_forfeit;
                try {
                  if (rules == Rules::Strict)
                    avoider = std::make_unique<StrictAvoider>(pos);
                  else
                    avoider = std::make_unique<MonoAvoider>(pos);
                } catch (const StrategyForfeit&) {
                  setup_forfeit = Player::Avoider;
                }
                if (rules == Rules::Strict)
                  enforcer = std::make_unique<StrictEnforcer>();
                else
                  enforcer = std::make_unique<MonoEnforcer>();
                if (setup_forfeit)
                  winner = "Enforcer";
                else
                  winner = to_string(play_match(pos, *avoider, *enforcer).winner) ==
                                   std::string("avoider")
                               ? "Avoider"
                               : "Enforcer";
              } else if (source == "criteria") {
                bool avoider_guaranteed = false;
                if (rules == Rules::Strict && gcd_avoider_witness(p, q, k)) avoider_guaranteed = true;
                std::vector<int> sizes(n, k);
                if (rules == Rules::Strict) {
                  bool a_last = strict_last_player(n * k, Bias{p, q}, first) == Player::Avoider;
                  if (potential_criterion(sizes, p, a_last)) avoider_guaranteed = true;
                } else if (potential_criterion(sizes, p, true)) {
                  avoider_guaranteed = true;
                }
                winner = avoider_guaranteed ? "Avoider" : "Unsolved";
              } else {
                throw std::runtime_error("source must be solver, strategy or criteria");
              }
              std::ostringstream row;
              row << p << "," << q << "," << k << "," << n << "," << to_string(rules) << ","
                  << to_string(first) << "," << winner << ","
                  << (source == "solver" ? "Solver" : source == "strategy" ? "Strategy" : "Criterion");
              rows.push_back(row.str());
            }
  std::sort(rows.begin(), rows.end());
  std::ostringstream csv;
  csv << "p,q,k,n,rules,first,winner,source\n";
  for (const auto& row : rows) csv << row << "\n";
  if (out_file.empty() || out_file == "-") {
    out << csv.str();
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_file);
    f << csv.str();
    out << "wrote " << rows.size() << " rows to " << out_file << "\n";
  }
  return any_unsolved ? 2 : 0;
}

int cmd_criteria(const std::string& file, std::ostream& out) {
  Position pos = load_game_file(file);
  int p = pos.bias.p;
  int q = pos.bias.q;
  std::vector<int> sizes;
  for (const auto& b : pos.boxes) sizes.push_back(b.remaining);
  int b1 = sizes.front();
  bool uniform = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == b1; });

  out << "game: " << to_string(pos.rules) << " (" << p << "," << q << ") first="
      << to_string(pos.to_move) << " boxes=" << sizes.size() << "\n";

  auto witness = gcd_avoider_witness(p, q, b1);
  if (witness)
    out << "gcd_avoider_witness: k=" << *witness
        << " -> Avoider wins under strict rules (gcd(p+q,k) > p)\n";
  else
    out << "gcd_avoider_witness: none\n";

  out << "enforcer_gcd_condition(k=" << b1 << "): "
      << (enforcer_gcd_condition(p, q, b1) ? "true" : "false") << "\n";

  bool avoider_last;
  if (pos.rules == Rules::Strict) {
    avoider_last = strict_last_player(pos.total_remaining(), pos.bias, pos.to_move) ==
                   Player::Avoider;
    out << "last player (strict parity): " << (avoider_last ? "avoider" : "enforcer") << "\n";
  } else {
    avoider_last = true;  // unknown under monotone rules; use the stronger bound
    out << "last player: unknown under monotone rules; using the Avoider-last bound\n";
  }
  out << "potential_criterion: "
      << (potential_criterion(sizes, p, avoider_last) ? "Avoider win guaranteed" : "inconclusive")
      << "\n";

  if (uniform) {
    try {
      out << "n_strict(" << p << "," << q << "," << b1 << ") = " << n_strict(p, q, b1) << "\n";
    } catch (const std::overflow_error&) {
      out << "n_strict(" << p << "," << q << "," << b1 << ") = overflow beyond 64 bits\n";
    }
    try {
      out << "n_mono_enforcer(" << p << "," << q << "," << b1 << ") = " << n_mono_enforcer(p, q, b1)
          << "\n";
    } catch (const std::overflow_error&) {
      out << "n_mono_enforcer(" << p << "," << q << "," << b1 << ") = overflow beyond 64 bits\n";
    }
    if (b1 > p && q >= b1 * p)
      out << "n_mono_avoider(" << p << "," << q << "," << b1 << ") = " << n_mono_avoider(p, q, b1)
          << "\n";
  }
  return 0;
}

int cmd_cache(const std::string& action, const std::string& file,
              const std::vector<std::string>& games, std::uint64_t budget, std::ostream& out) {
  Solver solver(budget);
  if (action == "load") {
    solver.load_cache(file);
    out << "loaded " << solver.cache_size() << " entries from " << file << "\n";
    return 0;
  }
  if (action == "save") {
    std::ifstream probe(file);
    if (probe.good()) solver.load_cache(file);
    for (const auto& g : games) {
      SolveResult r = solver.solve(load_game_file(g));
      out << g << ": " << to_string(r.outcome) << "\n";
      if (r.outcome == Outcome::Unsolved) return 2;
    }
    solver.save_cache(file);
    out << "saved " << solver.cache_size() << " entries to " << file << "\n";
    return 0;
  }
  throw std::runtime_error("cache action must be load or save");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"misere box games: exact solving, paper strategies, threshold formulas"};
  app.require_subcommand(1);

  std::uint64_t budget = env_node_budget();
  std::uint64_t seed = 12345;

  auto* solve_cmd = app.add_subcommand("solve", "solve a game file exactly");
  std::string solve_file, solve_cache;
  solve_cmd->add_option("gamefile", solve_file)->required();
  solve_cmd->add_option("--cache", solve_cache, "cache file to reuse and update");
  solve_cmd->add_option("--budget", budget, "node budget");

  auto* play_cmd = app.add_subcommand("play", "play two strategies against each other");
  std::string play_file, play_avoider, play_enforcer;
  std::string play_rules = "strict", play_first = "avoider";
  int play_p = 1, play_q = 1;
  play_cmd->add_option("boardfile", play_file, "game, hypergraph or graph file")->required();
  play_cmd->add_option("--avoider", play_avoider)->required();
  play_cmd->add_option("--enforcer", play_enforcer)->required();
  play_cmd->add_option("--seed", seed);
  play_cmd->add_option("--budget", budget);
  play_cmd->add_option("--p", play_p, "bias p (hypergraph/graph boards)");
  play_cmd->add_option("--q", play_q, "bias q (hypergraph/graph boards)");
  play_cmd->add_option("--rules", play_rules, "strict|monotone (hypergraph/graph boards)");
  play_cmd->add_option("--first", play_first, "avoider|enforcer (hypergraph/graph boards)");

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep uniform games over a parameter grid");
  std::string sp = "1", sq = "1", sk = "1", sn = "1";
  std::string sweep_rules = "strict", sweep_first = "both", sweep_source = "solver", sweep_out;
  sweep_cmd->add_option("--p", sp);
  sweep_cmd->add_option("--q", sq);
  sweep_cmd->add_option("--k", sk);
  sweep_cmd->add_option("--n", sn);
  sweep_cmd->add_option("--rules", sweep_rules, "strict|monotone|both");
  sweep_cmd->add_option("--first", sweep_first, "avoider|enforcer|both");
  sweep_cmd->add_option("--source", sweep_source, "solver|strategy|criteria");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path ('-' for stdout)");
  sweep_cmd->add_option("--budget", budget);

  auto* criteria_cmd = app.add_subcommand("criteria", "print every applicable winning criterion");
  std::string criteria_file;
  criteria_cmd->add_option("gamefile", criteria_file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--budget", budget);

  auto* cache_cmd = app.add_subcommand("cache", "inspect or build a solver cache file");
  std::string cache_action, cache_file;
  std::vector<std::string> cache_games;
  cache_cmd->add_option("action", cache_action, "load|save")->required();
  cache_cmd->add_option("file", cache_file)->required();
  cache_cmd->add_option("--game", cache_games, "game files to solve into the cache");
  cache_cmd->add_option("--budget", budget);

  std::vector<std::string> argv = args;
  std::vector<const char*> cargv;
  cargv.push_back("mbox");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_file, solve_cache, budget, out);
    if (play_cmd->parsed())
      return cmd_play(play_file, play_avoider, play_enforcer, play_p, play_q, play_rules,
                      play_first, budget, seed, out);
    if (sweep_cmd->parsed())
      return cmd_sweep(parse_list(sp), parse_list(sq), parse_list(sk), parse_list(sn), sweep_rules,
                       sweep_first, sweep_source, sweep_out, budget, out);
    if (criteria_cmd->parsed()) return cmd_criteria(criteria_file, out);
    if (verify_cmd->parsed()) {
      auto results = run_acceptance(out, budget);
      return all_passed(results) && !results.empty() ? 0 : 1;
    }
    if (cache_cmd->parsed()) return cmd_cache(cache_action, cache_file, cache_games, budget, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace mbox
