#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "mbox/criteria.hpp"

using namespace mbox;

TEST_CASE("gcd_avoider_witness picks the largest valid k") {
  CHECK(gcd_avoider_witness(1, 1, 2) == 2);
  CHECK_FALSE(gcd_avoider_witness(1, 2, 2).has_value());
  CHECK(gcd_avoider_witness(2, 2, 4) == 4);
}

TEST_CASE("enforcer_gcd_condition") {
  CHECK(enforcer_gcd_condition(1, 2, 2));
  CHECK_FALSE(enforcer_gcd_condition(1, 1, 2));
  CHECK(enforcer_gcd_condition(2, 2, 2));
}

TEST_CASE("witness and condition are complementary on uniform boards") {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int k = 1; k <= 40; ++k) {
        bool witness = gcd_avoider_witness(p, q, k).has_value();
        bool condition = enforcer_gcd_condition(p, q, k);
        CHECK(witness == !condition);
      }
}

TEST_CASE("potential criterion exact boundary behaviour") {
  std::vector<int> fifteen(15, 4), sixteen(16, 4), seven(7, 4);
  CHECK(potential_criterion(fifteen, 1, false));        // 15/16 < 1
  CHECK_FALSE(potential_criterion(sixteen, 1, false));  // exactly 1, not strictly below
  CHECK(potential_criterion(seven, 1, true));           // 7/16 < 1/2
  CHECK_FALSE(potential_criterion(std::vector<int>(8, 4), 1, true));  // exactly 1/2
}

TEST_CASE("potential criterion is monotone under box removal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nd(1, 10), sd(1, 12), pd(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int n = nd(rng);
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(sd(rng));
    int p = pd(rng);
    bool a_last = trial % 2 == 0;
    if (!potential_criterion(sizes, p, a_last)) continue;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> fewer = sizes;
    fewer.erase(fewer.begin() + pick(rng));
    if (fewer.empty()) continue;
    CHECK(potential_criterion(fewer, p, a_last));
  }
}

TEST_CASE("n_strict formula values") {
  CHECK(n_strict(1, 1, 1) == 2);
  CHECK(n_strict(1, 2, 2) == 64);
  CHECK(n_strict(2, 3, 1) == 4);
  CHECK_THROWS_AS(n_strict(5, 5, 25), std::overflow_error);
}

TEST_CASE("n_mono_avoider proof values and statement bound") {
  CHECK(n_mono_avoider(1, 2, 2) == 2);  // k = p+1 branch gives q
  CHECK(n_mono_avoider(1, 3, 3) == 4);
  CHECK(n_mono_avoider(1, 4, 3) == 7);  // 3*(7/3), exact
  CHECK(n_mono_avoider_statement_bound(1, 2, 2) == 1);  // q-p at k=p+1
  CHECK(n_mono_avoider_statement_bound(1, 3, 3) == 4);
  CHECK_THROWS_AS(n_mono_avoider(2, 8, 2), std::invalid_argument);  // k <= p
  CHECK_THROWS_AS(n_mono_avoider(1, 2, 3), std::invalid_argument);  // q < k*p
}

TEST_CASE("n_mono_enforcer recursion values") {
  CHECK(n_mono_enforcer(1, 2, 1) == 3);  // k <= p: q+1
  CHECK(n_mono_enforcer(1, 2, 2) == 4);  // q+1+ceil(q/k)
  CHECK(n_mono_enforcer(1, 2, 3) == 8);  // ceil(4/1)*(1+ceil(2/3))
  CHECK(n_mono_enforcer(2, 1, 4) == 6);  // ceil(3/2)*(2+1)
  CHECK(n_mono_enforcer(3, 1, 7) == 12);
}

TEST_CASE("exp_enclosure brackets e tightly") {
  auto [lo, hi] = exp_enclosure(Rational(1), Rational(1, 1000000000));
  Rational e_low(2718281828, 1000000000);
  Rational e_high(2718281829, 1000000000);
  CHECK(lo <= e_high);
  CHECK(hi >= e_low);
  CHECK(hi - lo <= Rational(1, 1000000000));
  CHECK(lo < hi);
}

TEST_CASE("estimate_bounds examples") {
  auto a = estimate_bounds(1, 2, 3);
  CHECK(a.recursion_value == 8);
  CHECK(a.bound_value == Rational(27));
  CHECK(a.holds);

  auto b = estimate_bounds(1, 1, 1);
  CHECK(b.recursion_value == 2);
  CHECK(b.bound_value == Rational(2));
  CHECK(b.holds);

  auto c = estimate_bounds(2, 1, 4);
  CHECK(c.recursion_value == 6);
  CHECK(c.holds);  // 6 <= 1+e^2
  CHECK(c.bound_value > Rational(8));
  CHECK(c.bound_value < Rational(9));

  CHECK_THROWS_AS(estimate_bounds(2, 3, 2), std::invalid_argument);
}

TEST_CASE("estimate_bounds over the small grid") {
  // The (1,q,k) estimate holds everywhere on the grid. The (p,1,k) estimate
  // compares the ceiling-inflated recursion against a bound the source
  // derives from a different strategy; the recursion value exceeds it at
  // exactly these six points, which the verification suite reports.
  for (int q = 1; q <= 5; ++q)
    for (int k = 1; k <= 8; ++k) CHECK(estimate_bounds(1, q, k).holds);

  std::set<std::pair<int, int>> expected_failures = {{3, 7}, {3, 8}, {4, 7},
                                                     {4, 8}, {5, 7}, {5, 8}};
  for (int p = 2; p <= 5; ++p)
    for (int k = 1; k <= 8; ++k) {
      bool holds = estimate_bounds(p, 1, k).holds;
      CHECK(holds == !expected_failures.count({p, k}));
    }
}
