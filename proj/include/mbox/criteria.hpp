#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mbox {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest k <= b1 with gcd(p+q, k) > p, or nullopt when none exists.
/// A witness guarantees an Avoider win under strict rules on boxes of
/// size >= k (the two-stage strategy plays to it).
std::optional<int> gcd_avoider_witness(int p, int q, int b1);

/// true iff gcd(p+q, l) <= p for every 1 <= l <= k. The complementary
/// condition to the witness on uniform boards: exactly one of the two holds.
bool enforcer_gcd_condition(int p, int q, int k);

/// Potential criterion for an Avoider win valid under both rule sets.
/// With Avoider last:   sum (1+1/p)^(-size) < (1+1/p)^(-p)
/// With Enforcer last:  sum (1+1/p)^(-size) < 1
/// Evaluated in exact rationals; the inequalities are strict.
bool potential_criterion(const std::vector<int>& sizes, int p, bool avoider_last);

/// Strict-rules Enforcer threshold:
///   (q+1) * (ceil(q/p)+3)^(k-1)   for k <= p
///   (2(p+q+1))^k                  for k >  p
/// Throws std::overflow_error when the exact value exceeds uint64.
std::uint64_t n_strict(int p, int q, int k);

/// Monotone-rules Avoider threshold (the proof's piecewise definition):
///   q                             for k = p+1
///   floor((q-p) * (q/(kp)+1)^(k-p-1))   for k > p+1
/// Requires k >= p+1 and q >= k*p; evaluated in exact rationals, final
/// product floored. Throws std::invalid_argument outside the hypotheses.
std::uint64_t n_mono_avoider(int p, int q, int k);

/// The bound displayed in the theorem statement, which uses the general
/// formula at k = p+1 as well (value q-p there instead of the proof's q).
std::uint64_t n_mono_avoider_statement_bound(int p, int q, int k);

/// Monotone-rules Enforcer threshold:
///   q+1                                  for k <= p
///   q+1+ceil(q/k)                        for k = p+1
///   ceil(N(p,q,k-1)/p) * (p+ceil(q/k))   for k > p+1
std::uint64_t n_mono_enforcer(int p, int q, int k);

struct EstimateBounds {
  std::uint64_t recursion_value = 0;
  Rational bound_value;  // (1+q)^k for p=1, else an upper bound on 1+e^{k/p}
  bool holds = false;
};

/// Compares n_mono_enforcer against the closed-form estimates
/// N(1,q,k) <= (1+q)^k and N(p,1,k) <= 1+e^{k/p}. Requires p=1 or q=1;
/// with both, the (1+q)^k form is used. The e^{k/p} comparison is decided
/// with certified rational bounds on the exponential (accuracy 1e-9,
/// tightened further if the comparison would be ambiguous).
EstimateBounds estimate_bounds(int p, int q, int k);

/// Certified rational enclosure lower <= e^x <= upper with upper-lower <= tol.
std::pair<Rational, Rational> exp_enclosure(const Rational& x, const Rational& tol);

}  // namespace mbox
