#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "queens/construct.hpp"
#include "queens/enumerate.hpp"
#include "queens/io.hpp"

using queens::arrangement;
using queens::errc;
using queens::error;

TEST_CASE("permutation text round trip", "[io]") {
  const arrangement a = queens::parse_perm_text("2 4 6 8 3 1 7 5");
  CHECK(a.n == 8);
  CHECK(a.perm == std::vector<int>{2, 4, 6, 8, 3, 1, 7, 5});
  CHECK(queens::format_perm_text(a) == "2 4 6 8 3 1 7 5");
  CHECK(queens::parse_perm_text("  7\t1   3 ").perm ==
        std::vector<int>{7, 1, 3});

  CHECK_THROWS_AS(queens::parse_perm_text(""), error);
  CHECK_THROWS_AS(queens::parse_perm_text("   "), error);
  CHECK_THROWS_AS(queens::parse_perm_text("1 two 3"), error);
  CHECK_THROWS_AS(queens::parse_perm_text("1 2x"), error);
}

TEST_CASE("board rendering", "[io]") {
  CHECK(queens::render_board(queens::solve(4)) ==
        ".Q..\n"
        "...Q\n"
        "Q...\n"
        "..Q.\n");
  CHECK(queens::render_board(arrangement{1, {1}}) == "Q\n");
}

TEST_CASE("placement text parsing", "[io]") {
  const auto p = queens::parse_placement_text(8, "1,2;2,4");
  CHECK(p.n == 8);
  REQUIRE(p.queens.size() == 2);
  CHECK(p.queens[0] == std::pair<int, int>{1, 2});
  CHECK(p.queens[1] == std::pair<int, int>{2, 4});

  CHECK(queens::parse_placement_text(5, "").queens.empty());
  CHECK(queens::parse_placement_text(5, " 3 , 1 ; ").queens.size() == 1);
  CHECK_THROWS_AS(queens::parse_placement_text(5, "3"), error);
  CHECK_THROWS_AS(queens::parse_placement_text(5, "a,b"), error);
}

TEST_CASE("arrangement JSON is stable and round-trips", "[io]") {
  const arrangement a = queens::solve(4);
  CHECK(queens::to_json(a).dump() == R"({"n":4,"perm":[2,4,1,3]})");
  CHECK(queens::arrangement_from_json(queens::to_json(a)) == a);

  CHECK_THROWS_AS(
      queens::arrangement_from_json(nlohmann::json{{"n", 4}}), error);
  CHECK_THROWS_AS(queens::arrangement_from_json(nlohmann::json{
                      {"n", "four"}, {"perm", {2, 4, 1, 3}}}),
                  error);
}

TEST_CASE("queen function JSON round-trips", "[io]") {
  for (int n : {6, 9, 14}) {
    const queens::queen_function f = queens::build_queen_function(n);
    const auto j = queens::to_json(f);
    CHECK(queens::queen_function_from_json(j) == f);
  }
  const auto j = queens::to_json(queens::build_queen_function(8));
  CHECK(j.dump() ==
        R"({"n":8,"segments":[{"even":[2,0],"hi":4,"lo":1,"odd":[2,0]},)"
        R"({"even":[2,7],"hi":8,"lo":5,"odd":[2,2]}]})");

  CHECK_THROWS_AS(queens::queen_function_from_json(
                      nlohmann::json{{"n", 4}, {"segments", 3}}),
                  error);
  CHECK_THROWS_AS(
      queens::queen_function_from_json(nlohmann::json{
          {"n", 4},
          {"segments",
           {{{"lo", 1}, {"hi", 4}, {"odd", {2}}, {"even", {2, 0}}}}}}),
      error);
}

TEST_CASE("class lists serialize with rep and orbit", "[io]") {
  const auto classes = queens::fundamental_classes(4);
  CHECK(queens::to_json(classes).dump() ==
        R"([{"orbit":2,"rep":[2,4,1,3]}])");
}

TEST_CASE("criterion report JSON carries all fields", "[io]") {
  const auto r = queens::criterion(arrangement{5, {2, 4, 1, 3, 5}});
  const auto j = queens::to_json(r);
  CHECK(j["n"] == 5);
  CHECK(j["passes"] == true);
  CHECK(j["diff_residues"] == nlohmann::json({1, 2, 3, 4, 0}));
  CHECK(j["sum_complete"] == true);
}

TEST_CASE("classification JSON shows form or witness", "[io]") {
  const auto ji = queens::to_json(queens::classify(2019));
  CHECK(ji["q_irreducible"] == true);
  CHECK(ji["form"] == "3p");
  CHECK_FALSE(ji.contains("factor_witness"));

  const auto jr = queens::to_json(queens::classify(20));
  CHECK(jr["q_irreducible"] == false);
  CHECK(jr["factor_witness"] == nlohmann::json({4, 5}));
  CHECK_FALSE(jr.contains("form"));
}

TEST_CASE("read_arrangement sniffs JSON against plain text", "[io]") {
  std::istringstream text("2 4 1 3\n");
  CHECK(queens::read_arrangement(text).perm ==
        std::vector<int>{2, 4, 1, 3});

  std::istringstream json(R"(  {"n":4,"perm":[3,1,4,2]} )");
  CHECK(queens::read_arrangement(json).perm ==
        std::vector<int>{3, 1, 4, 2});

  std::istringstream empty("  \n ");
  CHECK_THROWS_AS(queens::read_arrangement(empty), error);
  std::istringstream broken(R"({"n":4 "perm":[1]})");
  CHECK_THROWS_AS(queens::read_arrangement(broken), error);
}
