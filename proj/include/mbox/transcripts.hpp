#pragma once

#include <functional>
#include <string>

#include "mbox/criteria.hpp"
#include "mbox/engine.hpp"

namespace mbox {

using Transcript = std::vector<std::pair<Player, Move>>;

/// Replays a transcript from `start`, invoking the visitor with the position
/// before each move. Returns the final position.
Position replay(const Position& start, const Transcript& transcript,
                const std::function<void(const Position&, Player, const Move&)>& visit = {});

struct ScanReport {
  bool ok = true;
  std::string detail;
};

/// Strategy-S structural invariant: after every move at most one safe box
/// still holds elements. Valid whenever Enforcer played S from his first move.
ScanReport scan_single_safe_box(const Position& start, const Transcript& transcript);

/// Lemma-2.4 invariant: a run of consecutive Avoider safe moves never reaches
/// length l, where l is taken at the start of the run as the largest of the
/// current box sizes and the capacities (initial sizes) of nonempty safe
/// boxes. Valid whenever Enforcer played S from his first move.
ScanReport scan_safe_run_bound(const Position& start, const Transcript& transcript);

/// Lemma-2.1 trigger invariant for the two-stage Avoider strategy: every
/// Avoider move containing a dangerous step first consumed every safe element
/// available at the move's start (so s + r = p exactly at the trigger).
/// The last move of the game may be shorter than p and is skipped.
ScanReport scan_dangerous_trigger(const Position& start, const Transcript& transcript);

/// Phi recurrence for the largest-box Enforcer: with n initial boxes and
/// phi(i) the mean dangerous-box size before round i (Enforcer moving first),
/// checks phi(i+1) <= phi(i) - p/(n-i) in exact rationals for every round
/// whose successor still sees a dangerous box.
ScanReport scan_phi_recurrence(const Position& start, const Transcript& transcript);

}  // namespace mbox
