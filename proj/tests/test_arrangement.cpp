#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "queens/arrangement.hpp"

using queens::arrangement;
using queens::errc;
using queens::error;

TEST_CASE("known boards validate", "[core]") {
  // 8x8 arrangement with queens on c4, g8, ...: a classic valid solution.
  CHECK(queens::validate(arrangement{8, {3, 1, 7, 5, 8, 2, 4, 6}}));
  CHECK(queens::validate(arrangement{4, {2, 4, 1, 3}}));
  CHECK(queens::validate(arrangement{1, {1}}));

  // Same column twice and diagonal contact must both fail.
  CHECK_FALSE(queens::validate(arrangement{2, {1, 1}}));
  CHECK_FALSE(queens::validate(arrangement{2, {1, 2}}));
  CHECK_FALSE(queens::validate(arrangement{4, {2, 4, 3, 1}}));
}

TEST_CASE("validate matches the pairwise oracle on every 4- and 6-perm",
          "[core]") {
  for (int n : {4, 6}) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      CHECK(queens::validate(arrangement{n, perm}) ==
            oracle::is_solution(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("validate matches the oracle on random boards", "[core]") {
  for (int n = 5; n <= 12; ++n)
    for (unsigned seed = 0; seed < 40; ++seed) {
      const auto perm = oracle::random_permutation(n, seed * 131 + n);
      CHECK(queens::validate(arrangement{n, perm}) ==
            oracle::is_solution(perm));
    }
}

TEST_CASE("shape violations throw, duplicates merely fail", "[core]") {
  const auto code = [](const arrangement& a) {
    try {
      queens::validate(a);
    } catch (const error& e) {
      return e.code();
    }
    return errc::no_solution_exists;  // sentinel: no throw
  };
  CHECK(code(arrangement{3, {1, 2}}) == errc::invalid_input);
  CHECK(code(arrangement{3, {0, 1, 2}}) == errc::invalid_input);
  CHECK(code(arrangement{3, {1, 2, 4}}) == errc::invalid_input);
  CHECK_FALSE(queens::validate(arrangement{3, {1, 1, 1}}));

  CHECK_THROWS_AS(queens::require_permutation(arrangement{2, {1, 1}}), error);
  try {
    queens::require_permutation(arrangement{2, {1, 1}});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_permutation);
  }
}

TEST_CASE("inverse is an involution and 1-indexed access works", "[core]") {
  const arrangement a{5, {2, 4, 1, 3, 5}};
  CHECK(a(1) == 2);
  CHECK(a(5) == 5);
  const arrangement inv = queens::inverse(a);
  CHECK(inv.perm == std::vector<int>{3, 1, 4, 2, 5});
  CHECK(queens::inverse(inv) == a);

  for (unsigned seed = 0; seed < 20; ++seed) {
    const arrangement r{9, oracle::random_permutation(9, 7000 + seed)};
    CHECK(queens::inverse(queens::inverse(r)) == r);
  }
}

TEST_CASE("arrangement ordering follows the permutation", "[core]") {
  const arrangement x{4, {2, 4, 1, 3}};
  const arrangement y{4, {3, 1, 4, 2}};
  CHECK(x < y);
  CHECK(x == x);
  CHECK(x != y);
}
