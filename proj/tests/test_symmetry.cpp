#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "queens/construct.hpp"
#include "queens/symmetry.hpp"

using queens::all_symmetries;
using queens::arrangement;
using queens::symmetry_op;

TEST_CASE("reflect flips columns", "[symmetry]") {
  const arrangement a{8, {3, 1, 7, 5, 8, 2, 4, 6}};
  CHECK(queens::apply_symmetry(a, symmetry_op::reflect).perm ==
        std::vector<int>{6, 8, 2, 4, 1, 7, 5, 3});
}

TEST_CASE("rot90 on a rotation-symmetric board", "[symmetry]") {
  // Both 4-board solutions are fixed by the quarter turn.
  const arrangement a{4, {2, 4, 1, 3}};
  CHECK(queens::apply_symmetry(a, symmetry_op::rot90) == a);
  CHECK(queens::orbit_size(a) == 2);
  CHECK(queens::orbit(a).size() == 2);
}

TEST_CASE("symmetries act as the dihedral group of order 8", "[symmetry]") {
  for (unsigned seed = 0; seed < 12; ++seed) {
    const arrangement a{7, oracle::random_permutation(7, 300 + seed)};
    for (symmetry_op s : all_symmetries) {
      // inverse really inverts
      CHECK(queens::apply_symmetry(queens::apply_symmetry(a, s),
                                   queens::inverse(s)) == a);
      for (symmetry_op t : all_symmetries) {
        // compose(s, t) applies t first
        CHECK(queens::apply_symmetry(queens::apply_symmetry(a, t), s) ==
              queens::apply_symmetry(a, queens::compose(s, t)));
      }
    }
    CHECK(queens::apply_symmetry(a, symmetry_op::identity) == a);
  }
}

TEST_CASE("fourth rotation and double reflection are the identity",
          "[symmetry]") {
  const arrangement a{9, oracle::random_permutation(9, 42)};
  arrangement r = a;
  for (int k = 0; k < 4; ++k)
    r = queens::apply_symmetry(r, symmetry_op::rot90);
  CHECK(r == a);
  CHECK(queens::apply_symmetry(
            queens::apply_symmetry(a, symmetry_op::reflect),
            symmetry_op::reflect) == a);
}

TEST_CASE("symmetries preserve being a solution", "[symmetry]") {
  for (int n : {5, 6, 8, 9, 13}) {
    const arrangement a = queens::solve(n);
    for (symmetry_op s : all_symmetries)
      CHECK(queens::validate(queens::apply_symmetry(a, s)));
  }
}

TEST_CASE("canonical form is a least, idempotent orbit invariant",
          "[symmetry]") {
  for (unsigned seed = 0; seed < 15; ++seed) {
    const arrangement a{8, oracle::random_permutation(8, 500 + seed)};
    const arrangement canon = queens::canonical_form(a);
    CHECK(queens::canonical_form(canon) == canon);
    for (symmetry_op s : all_symmetries) {
      const arrangement img = queens::apply_symmetry(a, s);
      CHECK(canon.perm <= img.perm);
      CHECK(queens::canonical_form(img) == canon);
    }
    const auto orb = queens::orbit(a);
    CHECK(orb.front() == canon);
    CHECK(8 % orb.size() == 0);
    CHECK(std::is_sorted(orb.begin(), orb.end(),
                         [](const arrangement& x, const arrangement& y) {
                           return x.perm < y.perm;
                         }));
  }
}

TEST_CASE("closed-form images match the step-by-step action", "[symmetry]") {
  for (int n : {1, 2, 5, 8, 11})
    for (unsigned seed = 0; seed < 10; ++seed) {
      const arrangement a{n, oracle::random_permutation(
                                 n, 100u * static_cast<unsigned>(n) + seed)};
      const arrangement ainv = queens::inverse(a);
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int op = 0; op < 8; ++op) {
        queens::detail::fill_image(op, a.perm.data(), ainv.perm.data(), n,
                                   img.data());
        CHECK(img ==
              queens::apply_symmetry(a, static_cast<symmetry_op>(op)).perm);
      }
    }
}

TEST_CASE("symmetry names", "[symmetry]") {
  CHECK(std::string(queens::to_string(symmetry_op::identity)) == "identity");
  CHECK(std::string(queens::to_string(symmetry_op::reflect_rot270)) ==
        "reflect*rot270");
}
