#include "mbox/transcripts.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace mbox {

Position replay(const Position& start, const Transcript& transcript,
                const std::function<void(const Position&, Player, const Move&)>& visit) {
  Position pos = start;
  for (const auto& [player, mv] : transcript) {
    if (visit) visit(pos, player, mv);
    if (pos.to_move != player) throw std::runtime_error("replay: transcript out of turn");
    pos = apply_move(pos, mv);
  }
  return pos;
}

namespace {

int nonempty_safe_boxes(const Position& pos) {
  int n = 0;
  for (const auto& b : pos.boxes)
    if (b.safe && b.remaining > 0) ++n;
  return n;
}

bool move_is_safe(const Position& pos, const Move& mv) {
  for (const auto& [box, count] : mv.claims) {
    (void)count;
    if (!pos.boxes[box].safe) return false;
  }
  return true;
}

}  // namespace

ScanReport scan_single_safe_box(const Position& start, const Transcript& transcript) {
  ScanReport report;
  Position pos = start;
  int ply = 0;
  for (const auto& [player, mv] : transcript) {
    pos = apply_move(pos, mv);
    ++ply;
    if (nonempty_safe_boxes(pos) > 1) {
      report.ok = false;
      std::ostringstream out;
      out << "two nonempty safe boxes after ply " << ply << " (" << to_string(player) << ")";
      report.detail = out.str();
      return report;
    }
  }
  return report;
}

ScanReport scan_safe_run_bound(const Position& start, const Transcript& transcript) {
  ScanReport report;
  std::map<int, int> capacity;  // box id -> initial size
  for (const auto& b : start.boxes) capacity[b.id] = b.remaining;

  Position pos = start;
  int run = 0;
  int run_l = 0;
  int ply = 0;
  for (const auto& [player, mv] : transcript) {
    if (player == Player::Avoider) {
      if (move_is_safe(pos, mv)) {
        // The bound applies to stretches over which the largest box size
        // stays constant; the size counts the capacity of a partially
        // claimed safe box, since the counting argument tracks claimed
        // elements against full boxes.
        int cur_l = pos.max_size();
        for (const auto& b : pos.boxes)
          if (b.safe && b.remaining > 0) cur_l = std::max(cur_l, capacity.at(b.id));
        if (run == 0 || cur_l != run_l) {
          run = 0;
          run_l = cur_l;
        }
        ++run;
        // the modular counting behind the bound needs gcd(p+q, l) <= p;
        // above that the run length is unconstrained
        bool applies = std::gcd(start.bias.p + start.bias.q, run_l) <= start.bias.p;
        if (applies && run >= run_l) {
          report.ok = false;
          std::ostringstream out;
          out << "avoider made " << run << " consecutive safe moves with bound " << run_l
              << " at ply " << ply + 1;
          report.detail = out.str();
          return report;
        }
      } else {
        run = 0;
      }
    }
    pos = apply_move(pos, mv);
    ++ply;
  }
  return report;
}

ScanReport scan_dangerous_trigger(const Position& start, const Transcript& transcript) {
  ScanReport report;
  Position pos = start;
  int ply = 0;
  for (const auto& [player, mv] : transcript) {
    ++ply;
    if (player == Player::Avoider && mv.total() == pos.bias.p) {
      int safe_claimed = 0;
      int dangerous_claimed = 0;
      for (const auto& [box, count] : mv.claims) {
        if (pos.boxes[box].safe)
          safe_claimed += count;
        else
          dangerous_claimed += count;
      }
      if (dangerous_claimed > 0) {
        int s_available = pos.safe_elements();
        if (safe_claimed != s_available || dangerous_claimed != pos.bias.p - s_available) {
          report.ok = false;
          std::ostringstream out;
          out << "dangerous move at ply " << ply << " claimed " << safe_claimed << " of "
              << s_available << " safe elements and " << dangerous_claimed << " dangerous";
          report.detail = out.str();
          return report;
        }
      }
    }
    pos = apply_move(pos, mv);
  }
  return report;
}

ScanReport scan_phi_recurrence(const Position& start, const Transcript& transcript) {
  ScanReport report;
  if (start.to_move != Player::Enforcer) {
    report.ok = false;
    report.detail = "phi recurrence expects Enforcer to move first";
    return report;
  }
  int n = static_cast<int>(start.boxes.size());

  auto phi = [](const Position& pos) -> std::optional<Rational> {
    long long sum = 0;
    int count = 0;
    for (const auto& b : pos.boxes)
      if (!b.safe && b.remaining > 0) {
        sum += b.remaining;
        ++count;
      }
    if (count == 0) return std::nullopt;
    return Rational(sum, count);
  };

  Position pos = start;
  std::vector<Rational> phis;  // phi(i) before round i, 1-based
  std::size_t idx = 0;
  while (idx < transcript.size()) {
    auto value = phi(pos);
    if (!value) break;
    phis.push_back(*value);
    // round: Enforcer move, then Avoider move (either may end the game)
    pos = apply_move(pos, transcript[idx].second);
    ++idx;
    if (idx >= transcript.size()) break;
    pos = apply_move(pos, transcript[idx].second);
    ++idx;
  }

  Rational p(start.bias.p);
  for (std::size_t i = 0; i + 1 < phis.size(); ++i) {
    // phis[i] = phi(i+1), so the round index is i+1
    int round = static_cast<int>(i) + 1;
    if (n - round <= 0) break;
    Rational allowed = phis[i] - p / (n - round);
    if (phis[i + 1] > allowed) {
      report.ok = false;
      std::ostringstream out;
      out << "phi(" << round + 1 << ") > phi(" << round << ") - p/(n-" << round << ")";
      report.detail = out.str();
      return report;
    }
  }
  return report;
}

}  // namespace mbox
