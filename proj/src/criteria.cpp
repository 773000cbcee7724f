#include "mbox/criteria.hpp"

#include <numeric>
#include <stdexcept>

namespace mbox {

namespace {

std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
  if (v > BigInt(UINT64_MAX)) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

BigInt big_pow(const BigInt& base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational rat_pow(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

BigInt ceil_div_big(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

std::optional<int> gcd_avoider_witness(int p, int q, int b1) {
  if (p < 1 || q < 1 || b1 < 1) throw std::invalid_argument("gcd_avoider_witness: arguments must be positive");
  for (int k = b1; k >= 1; --k)
    if (std::gcd(p + q, k) > p) return k;
  return std::nullopt;
}

bool enforcer_gcd_condition(int p, int q, int k) {
  if (p < 1 || q < 1 || k < 1) throw std::invalid_argument("enforcer_gcd_condition: arguments must be positive");
  for (int l = 1; l <= k; ++l)
    if (std::gcd(p + q, l) > p) return false;
  return true;
}

bool potential_criterion(const std::vector<int>& sizes, int p, bool avoider_last) {
  if (p < 1) throw std::invalid_argument("potential_criterion: p must be positive");
  // (1+1/p)^(-s) == (p/(p+1))^s
  Rational base(p, p + 1);
  Rational sum = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("potential_criterion: sizes must be positive");
    sum += rat_pow(base, s);
  }
  Rational target = avoider_last ? rat_pow(base, p) : Rational(1);
  return sum < target;
}

std::uint64_t n_strict(int p, int q, int k) {
  if (p < 1 || q < 1 || k < 1) throw std::invalid_argument("n_strict: arguments must be positive");
  BigInt value;
  if (k <= p)
    value = BigInt(q + 1) * big_pow(BigInt(ceil_div(q, p) + 3), k - 1);
  else
    value = big_pow(BigInt(2 * (p + q + 1)), k);
  return to_u64_checked(value, "n_strict");
}

std::uint64_t n_mono_avoider(int p, int q, int k) {
  if (p < 1 || q < 1) throw std::invalid_argument("n_mono_avoider: p,q must be positive");
  if (k <= p) throw std::invalid_argument("n_mono_avoider: requires k > p");
  if (q < k * p) throw std::invalid_argument("n_mono_avoider: requires q >= k*p");
  if (k == p + 1) return static_cast<std::uint64_t>(q);
  Rational value = Rational(q - p) * rat_pow(Rational(q, k * p) + 1, k - p - 1);
  BigInt floored = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
  return to_u64_checked(floored, "n_mono_avoider");
}

std::uint64_t n_mono_avoider_statement_bound(int p, int q, int k) {
  if (p < 1 || q < 1) throw std::invalid_argument("n_mono_avoider_statement_bound: p,q must be positive");
  if (k <= p) throw std::invalid_argument("n_mono_avoider_statement_bound: requires k > p");
  Rational value = Rational(q - p) * rat_pow(Rational(q, k * p) + 1, k - p - 1);
  BigInt floored = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
  return to_u64_checked(floored, "n_mono_avoider_statement_bound");
}

std::uint64_t n_mono_enforcer(int p, int q, int k) {
  if (p < 1 || q < 1 || k < 1) throw std::invalid_argument("n_mono_enforcer: arguments must be positive");
  if (k <= p) return static_cast<std::uint64_t>(q) + 1;
  if (k == p + 1) return to_u64_checked(BigInt(q) + 1 + ceil_div(q, k), "n_mono_enforcer");
  BigInt value = BigInt(q) + 1 + ceil_div(q, p + 1);
  for (int l = p + 2; l <= k; ++l) {
    value = ceil_div_big(value, p) * BigInt(p + ceil_div(q, l));
    if (value > BigInt(UINT64_MAX)) throw std::overflow_error("n_mono_enforcer: value exceeds 64 bits");
  }
  return to_u64_checked(value, "n_mono_enforcer");
}

std::pair<Rational, Rational> exp_enclosure(const Rational& x, const Rational& tol) {
  if (x < 0) throw std::invalid_argument("exp_enclosure: requires x >= 0");
  // Maclaurin partial sum; remainder after m terms is bounded by
  // term_{m+1} / (1 - x/(m+2)) once m+2 > x.
  Rational sum = 1;
  Rational term = 1;
  int m = 0;
  while (true) {
    ++m;
    term *= x / m;
    sum += term;
    if (Rational(m + 2) > x) {
      Rational next = term * x / (m + 1);
      Rational remainder = next / (1 - x / (m + 2));
      if (remainder < tol) return {sum, sum + remainder};
    }
    if (m > 10000) throw std::runtime_error("exp_enclosure: did not converge");
  }
}

EstimateBounds estimate_bounds(int p, int q, int k) {
  if (p != 1 && q != 1)
    throw std::invalid_argument("estimate_bounds: requires p = 1 or q = 1");
  EstimateBounds out;
  out.recursion_value = n_mono_enforcer(p, q, k);
  if (p == 1) {
    BigInt bound = big_pow(BigInt(1 + q), k);
    out.bound_value = Rational(bound);
    out.holds = BigInt(out.recursion_value) <= bound;
    return out;
  }
  // q == 1: compare against 1 + e^{k/p} with certified rational bounds,
  // tightening until the integer comparison is unambiguous.
  Rational x(k, p);
  Rational tol(1, 1000000000);
  Rational target = Rational(out.recursion_value) - 1;  // holds iff target <= e^{k/p}
  for (int round = 0; round < 4; ++round) {
    auto [lo, hi] = exp_enclosure(x, tol);
    out.bound_value = 1 + hi;
    if (target <= lo) {
      out.holds = true;
      return out;
    }
    if (target > hi) {
      out.holds = false;
      return out;
    }
    tol /= 1000000;
  }
  throw std::runtime_error("estimate_bounds: comparison against e^{k/p} stayed ambiguous");
}

}  // namespace mbox
