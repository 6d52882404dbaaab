#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "queens/construct.hpp"
#include "queens/width.hpp"

using queens::arrangement;
using queens::errc;
using queens::error;

TEST_CASE("fit_segment finds per-parity linear maps", "[width]") {
  const arrangement a = queens::solve(8);  // 2 4 6 8 3 1 7 5
  const auto head = queens::fit_segment(a, 1, 4);
  REQUIRE(head.has_value());
  CHECK(head->odd_map == queens::linear_map{2, 0});
  CHECK(head->even_map == queens::linear_map{2, 0});
  CHECK_FALSE(queens::fit_segment(a, 1, 8).has_value());

  // Single rows always fit; a one-point class pins nothing.
  for (int i = 1; i <= 8; ++i) CHECK(queens::fit_segment(a, i, i).has_value());

  CHECK_THROWS_AS(queens::fit_segment(a, 0, 3), error);
  CHECK_THROWS_AS(queens::fit_segment(a, 3, 2), error);
  CHECK_THROWS_AS(queens::fit_segment(a, 5, 9), error);
}

TEST_CASE("fit_segment verdicts equal the two-coefficient scan", "[width]") {
  for (unsigned seed = 0; seed < 25; ++seed) {
    const arrangement a{9, oracle::random_permutation(9, 1200 + seed)};
    for (int lo = 1; lo <= 9; ++lo)
      for (int hi = lo; hi <= 9; ++hi)
        CHECK(queens::fit_segment(a, lo, hi).has_value() ==
              oracle::segment_feasible(a.perm, lo, hi));
  }
}

TEST_CASE("greedy width equals the exact DP oracle", "[width]") {
  // Every solution of small boards...
  for (int n : {1, 4, 5, 6, 7})
    for (const auto& perm : oracle::all_solutions(n)) {
      const arrangement a{n, perm};
      CHECK(queens::min_width(a).width == oracle::min_width_dp(perm));
    }
  // ... and arbitrary permutations, which need not be solutions.
  for (int n = 1; n <= 10; ++n)
    for (unsigned seed = 0; seed < 30; ++seed) {
      const auto perm = oracle::random_permutation(n, 2000u + 31u * seed);
      CHECK(queens::min_width(arrangement{n, perm}).width ==
            oracle::min_width_dp(perm));
    }
}

TEST_CASE("the witness function materializes back to its input", "[width]") {
  for (int n : {4, 5, 8, 9, 14, 15, 20})
    for (unsigned seed = 0; seed < 20; ++seed) {
      const arrangement a{n, oracle::random_permutation(
                                 n, 77u * static_cast<unsigned>(n) + seed)};
      const auto d = queens::min_width(a);
      CHECK(d.width == d.function.width());
      CHECK(queens::well_formed(d.function));
      CHECK(queens::materialize(d.function) == a);
      CHECK(queens::min_width_value(a) == d.width);
    }
}

TEST_CASE("width pins: identity is 1, constructions meet their claims",
          "[width]") {
  for (int n : {1, 2, 3, 7, 12}) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    CHECK(queens::min_width(arrangement{n, id}).width == 1);
  }
  CHECK(queens::min_width(queens::solve(8)).width == 2);
  for (int n = 4; n <= 60; ++n) {
    const int w = queens::min_width(queens::solve(n)).width;
    CHECK(w >= 1);
    CHECK(w <= queens::claimed_width(queens::dispatch(n)));
  }
}

TEST_CASE("a 15-queens solution of width 2 exists", "[width]") {
  // Two segments suffice on the 15-board: [1,8] maps odd rows by 6i+11 and
  // even rows by 6i+7, [9,15] maps odd rows by 6i+12 and even rows by 6i,
  // all mod 16. Every point is easy to confirm by hand, so this pins the
  // width floor at 2 (width 1 is impossible: no full-board line pair works).
  const arrangement a{15, {1, 3, 13, 15, 9, 11, 5, 7, 2, 12, 14, 8, 10, 4, 6}};
  REQUIRE(queens::validate(a));
  const auto fit_lo = queens::fit_segment(a, 1, 8);
  const auto fit_hi = queens::fit_segment(a, 9, 15);
  REQUIRE(fit_lo.has_value());
  REQUIRE(fit_hi.has_value());
  CHECK(queens::min_width(a).width == 2);
  CHECK(!queens::fit_segment(a, 1, 15).has_value());  // not width 1
}

TEST_CASE("raw-pointer width path matches the public one", "[width]") {
  queens::detail::parity_fitter odd(10), even(10);
  for (unsigned seed = 0; seed < 40; ++seed) {
    const auto perm = oracle::random_permutation(10, 4000 + seed);
    CHECK(queens::detail::min_width_raw(perm.data(), 10, odd, even) ==
          queens::min_width_value(arrangement{10, perm}));
  }
}

TEST_CASE("orbit width is an orbit invariant bounded by member widths",
          "[width]") {
  const arrangement a = queens::solve(8);
  const int w = queens::orbit_min_width(a);
  CHECK(w <= 2);
  int best = a.n + 1;
  for (const arrangement& img : queens::orbit(a)) {
    CHECK(queens::orbit_min_width(img) == w);
    best = std::min(best, oracle::min_width_dp(img.perm));
  }
  CHECK(w == best);

  // Defined only for solutions.
  CHECK_THROWS_AS(queens::orbit_min_width(arrangement{4, {1, 2, 3, 4}}),
                  error);
}

TEST_CASE("width inputs must be permutations", "[width]") {
  try {
    queens::min_width(arrangement{3, {1, 1, 2}});
    FAIL("expected not_a_permutation");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_permutation);
  }
  CHECK_THROWS_AS(queens::min_width_value(arrangement{2, {1, 3}}), error);
}
