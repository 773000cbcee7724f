#include "mbox/monotone_strategies.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mbox/criteria.hpp"

namespace mbox {

namespace {

struct Scratch {
  std::vector<int> remaining;
  std::vector<bool> safe;
  std::map<int, int> claims;

  explicit Scratch(const Position& pos) {
    for (const auto& b : pos.boxes) {
      remaining.push_back(b.remaining);
      safe.push_back(b.safe);
    }
  }

  void claim(int box, int count) {
    if (count <= 0) return;
    remaining[box] -= count;
    claims[box] += count;
  }

  int total() const {
    int t = 0;
    for (const auto& [box, count] : claims) {
      (void)box;
      t += count;
    }
    return t;
  }

  std::vector<int> dangerous_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!safe[i] && remaining[i] > 0) out.push_back(static_cast<int>(i));
    return out;
  }

  Move finish() const {
    Move mv;
    for (const auto& [box, count] : claims) mv.claims.emplace_back(box, count);
    return mv;
  }
};

}  // namespace

MonoAvoider::MonoAvoider(const Position& start) {
  if (start.boxes.empty()) throw StrategyForfeit("mono-avoider: empty board at game start");
  int b1 = start.boxes.front().remaining;
  int p = start.bias.p;
  int q = start.bias.q;
  // Largest k <= b_1 compatible with q >= k*p; the win also needs k > p and
  // n <= N(k), which choose() cannot repair and the forfeit paths surface.
  target_k_ = std::min(b1, q / p);
  if (target_k_ < 1) target_k_ = 1;
}

MonoAvoider::MonoAvoider(int target_k, bool first_done, std::vector<int> prev_dangerous)
    : target_k_(target_k), first_done_(first_done), prev_dangerous_(std::move(prev_dangerous)) {}

Move MonoAvoider::choose(const Position& pos) {
  if (pos.rules != Rules::Monotone) throw StrategyForfeit("mono-avoider: monotone rules only");
  if (pos.to_move != Player::Avoider) throw StrategyForfeit("mono-avoider: not Avoider's turn");

  int p = pos.bias.p;
  int q = pos.bias.q;
  int board = pos.total_remaining();
  Scratch sc(pos);

  // (a) sweep every safe element
  for (std::size_t i = 0; i < sc.remaining.size(); ++i)
    if (sc.safe[i]) sc.claim(static_cast<int>(i), sc.remaining[i]);

  // (b) first move: normalize oversize boxes down to k
  if (!first_done_) {
    for (std::size_t i = 0; i < sc.remaining.size(); ++i)
      if (!sc.safe[i] && sc.remaining[i] > target_k_)
        sc.claim(static_cast<int>(i), sc.remaining[i] - target_k_);
  }

  // (c) equalization against the snapshot of dangerous sizes after my last
  // move: Enforcer removed some of them; trim the survivors pointwise onto
  // the multiset that keeps the smallest sizes, as if he took the largest.
  if (first_done_) {
    std::vector<int> current;
    for (int i : sc.dangerous_indices()) current.push_back(sc.remaining[i]);
    // both lists ascending; prev_dangerous_ was stored sorted
    if (current.size() <= prev_dangerous_.size()) {
      auto ds = sc.dangerous_indices();
      for (std::size_t i = 0; i < current.size(); ++i) {
        int want = prev_dangerous_[i];
        if (sc.remaining[ds[i]] > want) sc.claim(ds[i], sc.remaining[ds[i]] - want);
      }
    }
  }

  // (d) core
  auto dangerous = sc.dangerous_indices();
  if (!dangerous.empty()) {
    if (static_cast<int>(dangerous.size()) <= q) {
      for (int i : dangerous) sc.claim(i, sc.remaining[i] - 1);
    } else {
      int maxsz = 0;
      for (int i : dangerous) maxsz = std::max(maxsz, sc.remaining[i]);
      std::vector<int> maximal;
      for (int i : dangerous)
        if (sc.remaining[i] == maxsz) maximal.push_back(i);
      if (static_cast<int>(maximal.size()) >= p) {
        for (int j = 0; j < p; ++j) sc.claim(maximal[j], 1);
      } else {
        for (int i : maximal) sc.claim(i, 1);
        // p further claims: the p largest dangerous boxes after the
        // decrements, ties to the lowest index
        auto candidates = sc.dangerous_indices();
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](int a, int b) { return sc.remaining[a] > sc.remaining[b]; });
        int taken = 0;
        for (int i : candidates) {
          if (taken == p) break;
          sc.claim(i, 1);
          ++taken;
        }
      }
    }
  }

  int need = std::min(p, board);
  if (sc.total() < need) throw StrategyForfeit("mono-avoider: move cannot reach p claims");

  Move mv = sc.finish();
  prev_dangerous_.clear();
  for (int i : sc.dangerous_indices()) prev_dangerous_.push_back(sc.remaining[i]);
  std::sort(prev_dangerous_.begin(), prev_dangerous_.end());
  first_done_ = true;
  return mv;
}

std::unique_ptr<Strategy> MonoAvoider::clone() const {
  return std::make_unique<MonoAvoider>(target_k_, first_done_, prev_dangerous_);
}

std::string MonoAvoider::memory_key() const {
  std::ostringstream out;
  out << "k=" << target_k_ << ";f=" << (first_done_ ? 1 : 0) << ";d=";
  for (std::size_t i = 0; i < prev_dangerous_.size(); ++i) {
    if (i) out << ",";
    out << prev_dangerous_[i];
  }
  return out.str();
}

Move mono_enforcer_move(const Position& pos) {
  if (pos.rules != Rules::Monotone) throw StrategyForfeit("mono-enforcer: monotone rules only");
  if (pos.to_move != Player::Enforcer) throw StrategyForfeit("mono-enforcer: not Enforcer's turn");

  int p = pos.bias.p;
  int q = pos.bias.q;
  int board = pos.total_remaining();
  Scratch sc(pos);
  auto dangerous = sc.dangerous_indices();

  if (dangerous.empty()) {
    // nothing left to force; claim the minimum legal amount from safe boxes
    int need = std::min(q, board);
    for (std::size_t i = 0; i < sc.remaining.size() && need > 0; ++i) {
      int take = std::min(need, sc.remaining[i]);
      sc.claim(static_cast<int>(i), take);
      need -= take;
    }
    return sc.finish();
  }

  // (i) smallest dangerous box already within Avoider's reach
  int b1_box = dangerous.front();
  int b1 = sc.remaining[b1_box];
  if (b1 <= p) {
    int outside = board - b1;
    if (outside >= q) {
      for (std::size_t i = 0; i < sc.remaining.size(); ++i)
        if (static_cast<int>(i) != b1_box && sc.remaining[i] > 0)
          sc.claim(static_cast<int>(i), sc.remaining[i]);
      return sc.finish();
    }
    // illegal as a full move; fall through to (iii)
  } else {
    // (ii) reduce to a subgame the recursion already wins
    int maxsz = 0;
    for (int i : dangerous) maxsz = std::max(maxsz, sc.remaining[i]);
    for (int l = 1; l <= maxsz; ++l) {
      std::uint64_t need;
      try {
        need = n_mono_enforcer(p, q, l);
      } catch (const std::overflow_error&) {
        continue;
      }
      if (need > dangerous.size()) continue;
      long long sum = 0;
      for (std::uint64_t j = 0; j < need; ++j) sum += sc.remaining[dangerous[j]];
      if (sum <= static_cast<long long>(need) * l) {
        for (std::size_t j = need; j < dangerous.size(); ++j)
          sc.claim(dangerous[j], sc.remaining[dangerous[j]]);
        break;
      }
    }
  }

  // (iii) fully claim the largest m dangerous boxes, m minimal with total >= q
  auto live = sc.dangerous_indices();
  std::stable_sort(live.begin(), live.end(),
                   [&](int a, int b) { return sc.remaining[a] > sc.remaining[b]; });
  int got = 0;
  for (int i : live) {
    if (got >= q) break;
    got += sc.remaining[i];
    sc.claim(i, sc.remaining[i]);
  }
  if (got < q) {
    // dangerous boxes alone cannot reach q; top up with safe elements
    for (std::size_t i = 0; i < sc.remaining.size() && got < q; ++i) {
      int take = std::min(q - got, sc.remaining[i]);
      if (take > 0) {
        sc.claim(static_cast<int>(i), take);
        got += take;
      }
    }
  }
  return sc.finish();
}

Move MonoEnforcer::choose(const Position& pos) { return mono_enforcer_move(pos); }

std::unique_ptr<Strategy> MonoEnforcer::clone() const { return std::make_unique<MonoEnforcer>(); }

Move largest_box_enforcer_move(const Position& pos) {
  if (pos.rules != Rules::Monotone) throw StrategyForfeit("largest-box: monotone rules only");
  if (pos.to_move != Player::Enforcer) throw StrategyForfeit("largest-box: not Enforcer's turn");
  Scratch sc(pos);
  auto dangerous = sc.dangerous_indices();
  if (dangerous.empty()) {
    for (std::size_t i = 0; i < sc.remaining.size(); ++i)
      if (sc.remaining[i] > 0) {
        sc.claim(static_cast<int>(i), 1);
        break;
      }
    return sc.finish();
  }
  int best = dangerous.front();
  for (int i : dangerous)
    if (sc.remaining[i] > sc.remaining[best]) best = i;
  sc.claim(best, sc.remaining[best]);
  return sc.finish();
}

Move LargestBoxEnforcer::choose(const Position& pos) { return largest_box_enforcer_move(pos); }

std::unique_ptr<Strategy> LargestBoxEnforcer::clone() const {
  return std::make_unique<LargestBoxEnforcer>();
}

}  // namespace mbox
