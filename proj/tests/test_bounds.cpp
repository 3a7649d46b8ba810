#include "doctest.h"
#include "meyersig/bounds.hpp"
#include "testutil.hpp"

using namespace meyersig;
using namespace meyersig::bounds;

TEST_SUITE("bounds") {

TEST_CASE("separating bound") {
  CHECK(separating_bound(1, 2, 0) == 0);
  CHECK(separating_bound(2, 2, 0) == 30);
  CHECK(separating_bound(2, 3, 1) == 53);
  CHECK_THROWS_AS(separating_bound(0, 2, 0), HypothesisViolation);
  CHECK_THROWS_AS(separating_bound(1, 1, 0), HypothesisViolation);
}

TEST_CASE("Torelli separating bound") {
  CHECK(torelli_separating_bound(2, 3, 0) == 12);
  CHECK(torelli_separating_bound(1, 5, 2) == 10);
  CHECK(torelli_separating_bound(3, 2, 0) == 12);
  CHECK_THROWS_AS(torelli_separating_bound(0, 3, 0), HypothesisViolation);
}

TEST_CASE("Betti number bounds") {
  B2Bounds b = b2_bounds(5, 1);
  CHECK(b.b2_minus_lower == 6);
  CHECK(b.b2_plus_lower == Rat(2));
  CHECK_FALSE(b.vacuous);

  b = b2_bounds(0, 1);
  CHECK(b.b2_minus_lower == 1);
  CHECK(b.b2_plus_lower == Rat(1));
  CHECK(b.vacuous);

  b = b2_bounds(10, 2);
  CHECK(b.b2_minus_lower == 11);
  CHECK(b.b2_plus_lower == Rat(3));

  b = b2_bounds(31, 2);
  CHECK(b.b2_plus_lower == make_rat(36, 5));
}

TEST_CASE("canonical chain") {
  CanonicalChain c = canonical_chain(2, 2, 0, 0);
  CHECK(c.degree == 2);
  CHECK(c.genus_sigma_upper == 32);
  CHECK(c.kneser_lower == 2);
  CHECK(c.k2_upper == 32);

  c = canonical_chain(1, 3, 0, 0);
  CHECK(c.degree == 4);
  CHECK(c.genus_sigma_upper == 0);
  CHECK(c.kneser_lower == 0);

  c = canonical_chain(2, 2, 31, 0);
  CHECK(c.genus_sigma_upper == 1);
  CHECK(c.kneser_lower == 2);  // contradiction: matches separating_bound = 30
  CHECK_THROWS_AS(canonical_chain(2, 2, -1, 0), HypothesisViolation);
}

TEST_CASE("check verdicts") {
  // The Theorem-2 style data: one separating fiber over a torus.
  BoundReport r = check(fibration::build_separating_power(2, 1, 1, 1));
  CHECK(r.verdict == Verdict::NoSuchFibration);
  CHECK(r.failing == "separating_bound");

  r = check(2, 2, 30, 0);
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(r.failing.empty());

  r = check(1, 2, 0, 7);
  CHECK(r.verdict == Verdict::Consistent);

  CHECK_THROWS_AS(check(0, 2, 0, 0), HypothesisViolation);
  CHECK_THROWS_AS(check(1, 1, 0, 0), HypothesisViolation);
}

TEST_CASE("check with the Torelli flag") {
  // s = 20 passes the general bound at (g,h) = (2,3) but not the Torelli one.
  BoundReport r = check(2, 3, 20, 0, true);
  CHECK(r.verdict == Verdict::NoSuchFibration);
  CHECK(r.failing == "torelli_separating_bound");
  CHECK(r.entries.size() == 3);
  CHECK(r.entries[0].satisfied);

  r = check(2, 3, 12, 0, true);
  CHECK(r.verdict == Verdict::Consistent);
}

TEST_CASE("report invariant: verdict fails iff some entry fails") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> g(1, 6), h(2, 6), s(0, 80), n(0, 10);
  for (int iter = 0; iter < 200; ++iter) {
    BoundReport r = check(g(rng), h(rng), s(rng), n(rng), iter % 2 == 0);
    bool any_failed = false;
    for (const auto& e : r.entries) any_failed = any_failed || !e.satisfied;
    CHECK((r.verdict == Verdict::NoSuchFibration) == any_failed);
    CHECK(r.failing.empty() == !any_failed);
  }
}

TEST_CASE("pipeline identity: the canonical chain rearranges to the bound") {
  // Raw algebra, valid for all h >= 1.
  for (Int h = 1; h <= 50; h += 1)
    for (Int g = 1; g <= 50; g += 7)
      for (Int n = 0; n <= 50; n += 11) {
        Int threshold = 2 * (10 * h - 4) * (g - 1) + 5 * n - 2 * (h - 1) * (g - 1);
        CHECK(threshold == 6 * (3 * h - 1) * (g - 1) + 5 * n);
      }
  // Through the library values.
  for (Int h = 2; h <= 50; h += 3)
    for (Int g = 1; g <= 50; g += 5)
      for (Int n = 0; n <= 50; n += 7) {
        CanonicalChain c = canonical_chain(g, h, 0, n);
        CHECK(c.genus_sigma_upper - c.kneser_lower == separating_bound(g, h, n));
      }
}

TEST_CASE("monotonicity and bound comparison") {
  for (Int h = 2; h <= 8; h += 1)
    for (Int g = 1; g <= 8; g += 1)
      for (Int n = 0; n <= 8; n += 1) {
        CHECK(separating_bound(g + 1, h, n) >= separating_bound(g, h, n));
        CHECK(separating_bound(g, h + 1, n) >= separating_bound(g, h, n));
        CHECK(separating_bound(g, h, n + 1) >= separating_bound(g, h, n));
        CHECK(torelli_separating_bound(g, h, n) <= separating_bound(g, h, n));
      }
}

TEST_CASE("verdict on the separating-power construction") {
  for (int h = 2; h <= 3; ++h) {
    const Int d = 6 * (3 * Int(h) - 1);
    for (int k : {1, 29, 30, 31, 60, 100}) {
      for (int base = 1; base <= 5; ++base) {
        BoundReport r = check(fibration::build_separating_power(h, k, 1, base));
        const bool expected_fail = Int(k) > d * (base - 1);
        CHECK((r.verdict == Verdict::NoSuchFibration) == expected_fail);
      }
    }
  }
}

}  // TEST_SUITE
