#include "mbox/engine.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace mbox {

Player opponent(Player p) {
  return p == Player::Avoider ? Player::Enforcer : Player::Avoider;
}

const char* to_string(Player p) {
  return p == Player::Avoider ? "avoider" : "enforcer";
}

const char* to_string(Rules r) {
  return r == Rules::Strict ? "strict" : "monotone";
}

int Move::total() const {
  int t = 0;
  for (const auto& [box, count] : claims) {
    (void)box;
    t += count;
  }
  return t;
}

int Position::total_remaining() const {
  int t = 0;
  for (const auto& b : boxes) t += b.remaining;
  return t;
}

int Position::dangerous_count() const {
  int n = 0;
  for (const auto& b : boxes)
    if (!b.safe && b.remaining > 0) ++n;
  return n;
}

int Position::safe_elements() const {
  int n = 0;
  for (const auto& b : boxes)
    if (b.safe) n += b.remaining;
  return n;
}

int Position::max_size() const {
  int m = 0;
  for (const auto& b : boxes) m = std::max(m, b.remaining);
  return m;
}

namespace {

void sort_boxes(std::vector<BoxState>& boxes) {
  std::sort(boxes.begin(), boxes.end(), [](const BoxState& a, const BoxState& b) {
    if (a.remaining != b.remaining) return a.remaining < b.remaining;
    return a.id < b.id;
  });
}

int required_minimum(const Position& pos) {
  int bias = pos.to_move == Player::Avoider ? pos.bias.p : pos.bias.q;
  return std::min(bias, pos.total_remaining());
}

}  // namespace

Position new_game(const std::vector<int>& sizes, Bias bias, Rules rules, Player first) {
  if (sizes.empty()) throw std::invalid_argument("new_game: empty size list");
  if (bias.p < 1 || bias.q < 1) throw std::invalid_argument("new_game: bias must be positive");
  Position pos;
  pos.bias = bias;
  pos.rules = rules;
  pos.to_move = first;
  std::vector<int> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw std::invalid_argument("new_game: box sizes must be positive");
    pos.boxes.push_back(BoxState{sorted[i], false, static_cast<int>(i)});
  }
  return pos;
}

std::optional<std::string> validate_move(const Position& pos, const Move& mv) {
  if (pos.avoider_lost) return "game is over (avoider already lost)";
  if (pos.boxes.empty()) return "board is empty";
  if (mv.claims.empty()) return "empty move";

  std::vector<bool> seen(pos.boxes.size(), false);
  for (const auto& [box, count] : mv.claims) {
    if (box < 0 || box >= static_cast<int>(pos.boxes.size()))
      return "claim references box index " + std::to_string(box) + " out of range";
    if (seen[box]) return "duplicate entries for box index " + std::to_string(box);
    seen[box] = true;
    if (count < 1) return "claim count must be positive";
    if (pos.boxes[box].remaining == 0)
      return "claim in a fully claimed box (index " + std::to_string(box) + ")";
    if (count > pos.boxes[box].remaining)
      return "claim of " + std::to_string(count) + " exceeds remaining " +
             std::to_string(pos.boxes[box].remaining) + " in box index " + std::to_string(box);
  }

  int need = required_minimum(pos);
  int total = mv.total();
  if (pos.rules == Rules::Strict) {
    if (total != need)
      return "strict move must claim exactly " + std::to_string(need) + " elements, got " +
             std::to_string(total);
  } else {
    if (total < need)
      return "monotone move must claim at least " + std::to_string(need) + " elements, got " +
             std::to_string(total);
  }
  return std::nullopt;
}

namespace {

Position apply_unchecked(const Position& pos, const Move& mv);

}  // namespace

Position apply_move(const Position& pos, const Move& mv) {
  if (auto violation = validate_move(pos, mv)) throw std::invalid_argument(*violation);
  return apply_unchecked(pos, mv);
}

Position apply_claims(const Position& pos, const Move& mv) {
  if (pos.avoider_lost) throw std::invalid_argument("apply_claims: game is over");
  std::vector<bool> seen(pos.boxes.size(), false);
  for (const auto& [box, count] : mv.claims) {
    if (box < 0 || box >= static_cast<int>(pos.boxes.size()))
      throw std::invalid_argument("apply_claims: box index out of range");
    if (seen[box]) throw std::invalid_argument("apply_claims: duplicate box entry");
    seen[box] = true;
    if (count < 1 || count > pos.boxes[box].remaining)
      throw std::invalid_argument("apply_claims: bad claim count");
  }
  return apply_unchecked(pos, mv);
}

namespace {

Position apply_unchecked(const Position& pos, const Move& mv) {
  Position next = pos;
  bool enforcer = pos.to_move == Player::Enforcer;
  for (const auto& [box, count] : mv.claims) {
    next.boxes[box].remaining -= count;
    if (enforcer) next.boxes[box].safe = true;
  }
  for (const auto& b : next.boxes) {
    if (b.remaining == 0 && !b.safe) {
      next.avoider_lost = true;
      next.lost_box = b.id;
      break;
    }
  }
  next.boxes.erase(std::remove_if(next.boxes.begin(), next.boxes.end(),
                                  [](const BoxState& b) { return b.remaining == 0; }),
                   next.boxes.end());
  sort_boxes(next.boxes);
  next.to_move = opponent(pos.to_move);
  return next;
}

}  // namespace

Verdict play_match(const Position& start, Strategy& avoider, Strategy& enforcer) {
  Verdict verdict;
  Position pos = start;
  while (true) {
    if (pos.avoider_lost) {
      verdict.winner = Player::Enforcer;
      verdict.losing_box = pos.lost_box;
      return verdict;
    }
    if (pos.total_remaining() == 0) {
      verdict.winner = Player::Avoider;
      return verdict;
    }
    Player mover = pos.to_move;
    Strategy& strat = mover == Player::Avoider ? avoider : enforcer;
    Move mv;
    try {
      mv = strat.choose(pos);
    } catch (const StrategyForfeit&) {
      verdict.winner = opponent(mover);
      verdict.forfeited_by = mover;
      return verdict;
    }
    if (validate_move(pos, mv)) {
      verdict.winner = opponent(mover);
      verdict.forfeited_by = mover;
      return verdict;
    }
    verdict.transcript.emplace_back(mover, mv);
    pos = apply_move(pos, mv);
  }
}

Player strict_last_player(int total_elements, Bias bias, Player first) {
  Player cur = first;
  Player last = first;
  int rem = total_elements;
  while (rem > 0) {
    int take = std::min(cur == Player::Avoider ? bias.p : bias.q, rem);
    rem -= take;
    last = cur;
    cur = opponent(cur);
  }
  return last;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_positive_int(const std::string& value, const std::string& key) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("game file: bad integer for " + key + ": '" + value + "'");
  }
  if (used != value.size() || v < 1)
    throw std::runtime_error("game file: " + key + " must be a positive integer, got '" + value + "'");
  return v;
}

}  // namespace

Position parse_game(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("game file: expected key=value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    static const char* known[] = {"rules", "p", "q", "first", "boxes"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known))
      throw std::runtime_error("game file: unknown key '" + key + "'");
    if (kv.count(key)) throw std::runtime_error("game file: duplicate key '" + key + "'");
    kv[key] = value;
  }
  for (const char* k : {"rules", "p", "q", "first", "boxes"})
    if (!kv.count(k)) throw std::runtime_error(std::string("game file: missing key '") + k + "'");

  Rules rules;
  if (kv["rules"] == "strict")
    rules = Rules::Strict;
  else if (kv["rules"] == "monotone")
    rules = Rules::Monotone;
  else
    throw std::runtime_error("game file: rules must be strict or monotone, got '" + kv["rules"] + "'");

  Player first;
  if (kv["first"] == "avoider")
    first = Player::Avoider;
  else if (kv["first"] == "enforcer")
    first = Player::Enforcer;
  else
    throw std::runtime_error("game file: first must be avoider or enforcer, got '" + kv["first"] + "'");

  Bias bias{parse_positive_int(kv["p"], "p"), parse_positive_int(kv["q"], "q")};

  std::vector<int> sizes;
  std::stringstream boxes(kv["boxes"]);
  std::string token;
  while (std::getline(boxes, token, ',')) sizes.push_back(parse_positive_int(trim(token), "boxes"));
  if (sizes.empty()) throw std::runtime_error("game file: boxes list is empty");

  return new_game(sizes, bias, rules, first);
}

Position load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string format_game(const Position& pos) {
  std::ostringstream out;
  out << "rules=" << to_string(pos.rules) << "\n";
  out << "p=" << pos.bias.p << "\n";
  out << "q=" << pos.bias.q << "\n";
  out << "first=" << to_string(pos.to_move) << "\n";
  out << "boxes=";
  for (std::size_t i = 0; i < pos.boxes.size(); ++i) {
    if (i) out << ",";
    out << pos.boxes[i].remaining;
  }
  out << "\n";
  return out.str();
}

}  // namespace mbox
