#include "mbox/solver.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace mbox {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::AvoiderWin: return "Avoider";
    case Outcome::EnforcerWin: return "Enforcer";
    default: return "Unsolved";
  }
}

std::string canonical_key(const Position& pos) {
  std::vector<std::pair<int, bool>> pairs;
  pairs.reserve(pos.boxes.size());
  for (const auto& b : pos.boxes)
    if (b.remaining > 0) pairs.emplace_back(b.remaining, b.safe);
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream out;
  out << (pos.rules == Rules::Strict ? 'S' : 'M') << ',' << pos.bias.p << ',' << pos.bias.q << ','
      << (pos.to_move == Player::Avoider ? 'A' : 'E') << ':';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ',';
    out << pairs[i].first << (pairs[i].second ? 's' : 'd');
  }
  return out.str();
}

namespace {

struct BoxClass {
  int size = 0;
  bool safe = false;
  std::vector<int> members;  // box indices, ascending
};

std::vector<BoxClass> box_classes(const Position& pos) {
  std::map<std::pair<int, bool>, std::vector<int>> groups;
  for (std::size_t i = 0; i < pos.boxes.size(); ++i)
    groups[{pos.boxes[i].remaining, pos.boxes[i].safe}].push_back(static_cast<int>(i));
  std::vector<BoxClass> out;
  for (auto& [key, members] : groups)
    out.push_back(BoxClass{key.first, key.second, std::move(members)});
  return out;
}

// Partitions of t into at most `parts` parts, each between 1 and `cap`,
// listed in non-increasing order.
void partitions_rec(int t, int parts, int cap, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (t == 0) {
    out.push_back(cur);
    return;
  }
  if (parts == 0) return;
  for (int first = std::min(t, cap); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(t - first, parts - 1, first, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int t, int parts, int cap) {
  std::vector<std::vector<int>> out;
  if (t == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  partitions_rec(t, parts, cap, cur, out);
  return out;
}

void compose_classes(const std::vector<BoxClass>& classes, std::size_t idx, int left,
                     std::vector<std::vector<int>>& chosen, std::vector<Move>& out) {
  if (idx == classes.size()) {
    if (left != 0) return;
    Move mv;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t j = 0; j < chosen[c].size(); ++j)
        mv.claims.emplace_back(classes[c].members[j], chosen[c][j]);
    std::sort(mv.claims.begin(), mv.claims.end());
    out.push_back(std::move(mv));
    return;
  }
  const BoxClass& cls = classes[idx];
  int capacity = cls.size * static_cast<int>(cls.members.size());
  int rest_capacity = 0;
  for (std::size_t c = idx + 1; c < classes.size(); ++c)
    rest_capacity += classes[c].size * static_cast<int>(classes[c].members.size());
  int max_here = std::min(left, capacity);
  int min_here = std::max(0, left - rest_capacity);
  for (int t = min_here; t <= max_here; ++t) {
    for (auto& part : partitions(t, static_cast<int>(cls.members.size()), cls.size)) {
      chosen[idx] = part;
      compose_classes(classes, idx + 1, left - t, chosen, out);
    }
    chosen[idx].clear();
  }
}

bool completes_dangerous(const Position& pos, const Move& mv) {
  for (const auto& [box, count] : mv.claims)
    if (!pos.boxes[box].safe && count == pos.boxes[box].remaining) return true;
  return false;
}

}  // namespace

std::vector<Move> enumerate_moves(const Position& pos) {
  std::vector<Move> out;
  int board = pos.total_remaining();
  if (board == 0 || pos.avoider_lost) return out;
  int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
  int lo = std::min(bias, board);
  int hi = pos.rules == Rules::Strict ? lo : board;

  auto classes = box_classes(pos);
  std::vector<std::vector<int>> chosen(classes.size());
  for (int total = lo; total <= hi; ++total)
    compose_classes(classes, 0, total, chosen, out);

  if (pos.to_move == Player::Avoider)
    std::stable_partition(out.begin(), out.end(),
                          [&](const Move& mv) { return !completes_dangerous(pos, mv); });
  return out;
}

Solver::Solver(std::uint64_t node_budget) : node_budget_(node_budget) {}

std::size_t Solver::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

char Solver::solve_rec(const Position& pos, bool& unsolved) {
  if (pos.avoider_lost) return 'E';
  if (pos.total_remaining() == 0) return 'A';
  std::string key = canonical_key(pos);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++nodes_used_ > node_budget_) {
      unsolved = true;
      return '?';
    }
  }
  char mover = pos.to_move == Player::Avoider ? 'A' : 'E';
  bool child_unsolved = false;
  char result = mover == 'A' ? 'E' : 'A';
  for (const Move& mv : enumerate_moves(pos)) {
    char r = solve_rec(apply_move(pos, mv), child_unsolved);
    if (child_unsolved && r == '?') continue;
    if (r == mover) {
      result = mover;
      child_unsolved = false;
      break;
    }
  }
  if (child_unsolved) {
    unsolved = true;
    return '?';
  }
  std::lock_guard lock(mutex_);
  memo_[key] = result;
  return result;
}

SolveResult Solver::solve(const Position& pos) {
  SolveResult res;
  std::uint64_t start_nodes = nodes_used_;
  bool unsolved = false;
  char winner = solve_rec(pos, unsolved);
  res.node_count = nodes_used_ - start_nodes;
  if (unsolved) {
    res.outcome = Outcome::Unsolved;
    return res;
  }
  res.outcome = winner == 'A' ? Outcome::AvoiderWin : Outcome::EnforcerWin;
  if (!pos.avoider_lost && pos.total_remaining() > 0) {
    // Root is solved, so every needed child is memoized; pick the first move
    // that preserves the result (a winning move for the mover if one exists).
    char mover = pos.to_move == Player::Avoider ? 'A' : 'E';
    std::optional<Move> fallback;
    for (const Move& mv : enumerate_moves(pos)) {
      bool u = false;
      char r = solve_rec(apply_move(pos, mv), u);
      if (u) continue;
      if (!fallback) fallback = mv;
      if (r == mover) {
        res.optimal_move = mv;
        break;
      }
    }
    if (!res.optimal_move) res.optimal_move = fallback;
  }
  return res;
}

char Solver::response_rec(const Position& pos, Player fixed_side, const Strategy& fixed,
                          bool& unsolved) {
  if (pos.avoider_lost) return 'E';
  if (pos.total_remaining() == 0) return 'A';
  std::string key = canonical_key(pos) + '#' + (fixed_side == Player::Avoider ? 'a' : 'e') +
                    fixed.memory_key();
  {
    std::lock_guard lock(mutex_);
    auto it = response_memo_.find(key);
    if (it != response_memo_.end()) return it->second;
    if (++nodes_used_ > node_budget_) {
      unsolved = true;
      return '?';
    }
  }
  char result;
  if (pos.to_move == fixed_side) {
    auto instance = fixed.clone();
    Move mv;
    bool forfeit = false;
    try {
      mv = instance->choose(pos);
    } catch (const StrategyForfeit&) {
      forfeit = true;
    }
    if (!forfeit && validate_move(pos, mv)) forfeit = true;
    if (forfeit) {
      result = fixed_side == Player::Avoider ? 'E' : 'A';
    } else {
      bool child_unsolved = false;
      result = response_rec(apply_move(pos, mv), fixed_side, *instance, child_unsolved);
      if (child_unsolved) {
        unsolved = true;
        return '?';
      }
    }
  } else {
    char mover = pos.to_move == Player::Avoider ? 'A' : 'E';
    bool child_unsolved = false;
    result = mover == 'A' ? 'E' : 'A';
    for (const Move& mv : enumerate_moves(pos)) {
      char r = response_rec(apply_move(pos, mv), fixed_side, fixed, child_unsolved);
      if (child_unsolved && r == '?') continue;
      if (r == mover) {
        result = mover;
        child_unsolved = false;
        break;
      }
    }
    if (child_unsolved) {
      unsolved = true;
      return '?';
    }
  }
  std::lock_guard lock(mutex_);
  response_memo_[key] = result;
  return result;
}

SolveResult Solver::best_response(const Position& pos, Player fixed_side, const Strategy& fixed) {
  SolveResult res;
  std::uint64_t start_nodes = nodes_used_;
  bool unsolved = false;
  char winner = response_rec(pos, fixed_side, fixed, unsolved);
  res.node_count = nodes_used_ - start_nodes;
  res.outcome = unsolved              ? Outcome::Unsolved
                : winner == 'A'       ? Outcome::AvoiderWin
                                      : Outcome::EnforcerWin;
  return res;
}

Solver::ThresholdScan Solver::minimal_enforcer_n(int p, int q, int k, Rules rules, Player first,
                                                 int limit) {
  ThresholdScan scan;
  for (int n = 1; n <= limit; ++n) {
    Position pos = new_game(std::vector<int>(n, k), Bias{p, q}, rules, first);
    SolveResult r = solve(pos);
    scan.scanned_to = n;
    if (r.outcome == Outcome::Unsolved) {
      scan.aborted_unsolved = true;
      return scan;
    }
    if (r.outcome == Outcome::EnforcerWin) {
      scan.n = n;
      return scan;
    }
  }
  return scan;
}

void Solver::save_cache(const std::string& path) const {
  std::vector<std::string> lines;
  {
    std::lock_guard lock(mutex_);
    lines.reserve(memo_.size());
    for (const auto& [key, winner] : memo_) lines.push_back(key + ' ' + winner);
  }
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  out << "mboxcache v1\n";
  for (const auto& line : lines) out << line << '\n';
}

void Solver::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::string header;
  std::getline(in, header);
  if (header != "mboxcache v1")
    throw std::runtime_error("cache file version mismatch: expected 'mboxcache v1', got '" +
                             header + "'");
  std::string line;
  std::size_t lineno = 1;
  std::lock_guard lock(mutex_);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t space = line.rfind(' ');
    if (space == std::string::npos || space + 2 != line.size() ||
        (line.back() != 'A' && line.back() != 'E'))
      throw std::runtime_error("cache file: malformed record at line " + std::to_string(lineno));
    memo_[line.substr(0, space)] = line.back();
  }
}

}  // namespace mbox
