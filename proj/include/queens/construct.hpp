#pragma once

/**
 * @file construct.hpp
 * @brief O(n) constructive solver via closed-form queen functions.
 *
 * For every n >= 4 there is a solution given by one of five doubling-map
 * formula families, selected by the residue of n mod 6 (mod 12 inside the
 * n = 6k+2 class). Each family is a queen function of width at most 3:
 *
 *   n = 0,4 (mod 6): A(i) = 2i (mod n+1)                      width 1
 *   n = 1,5 (mod 6): 2i below the middle, 2i+1 above          width 2
 *   n = 8  (mod 12): 2i below, 2i+2 / 2i-2 above by parity    width 2
 *   n = 2  (mod 12): 2i+4 / 2i below the middle by parity,
 *                    2i+2 in the middle run, 2i+4 at i = n    width 3
 *   n = 3  (mod 6):  2i+2 below, 2i+4 at the midpoint,
 *                    2i+5 above                               width 3
 *
 * The width-1 bound cannot hold for every n (n = 15 has no solutions of
 * width 1 or 2, see the width and enumeration modules).
 */

#include "queens/arrangement.hpp"
#include "queens/error.hpp"
#include "queens/queen_function.hpp"

namespace queens {

// Formula family serving one residue class of n.
enum class formula_family {
  mod6_0_or_4,  // single segment, A(i) = 2i
  mod6_1_or_5,  // two segments, tail offset 1
  mod12_8,      // two segments, parity-split tail offsets +2/-2
  mod12_2,      // three segments
  mod6_3,       // three segments
};

inline constexpr int claimed_width(formula_family f) noexcept {
  switch (f) {
    case formula_family::mod6_0_or_4: return 1;
    case formula_family::mod6_1_or_5: return 2;
    case formula_family::mod12_8: return 2;
    case formula_family::mod12_2: return 3;
    case formula_family::mod6_3: return 3;
  }
  return 0;
}

inline const char* to_string(formula_family f) noexcept {
  switch (f) {
    case formula_family::mod6_0_or_4: return "mod6_0_or_4";
    case formula_family::mod6_1_or_5: return "mod6_1_or_5";
    case formula_family::mod12_8: return "mod12_8";
    case formula_family::mod12_2: return "mod12_2";
    case formula_family::mod6_3: return "mod6_3";
  }
  return "?";
}

/// Family covering board size n. Total over n >= 4; boards of size 2 and 3
/// have no solution and size 1 is handled by solve() without a formula.
inline formula_family dispatch(int n) {
  if (n <= 0) throw error(errc::invalid_input, "board size must be positive");
  if (n == 1)
    throw error(errc::invalid_input, "n = 1 has no formula family; use solve()");
  if (n <= 3) throw error(errc::no_solution_exists, "no solution for n = 2, 3");
  switch (n % 6) {
    case 0:
    case 4: return formula_family::mod6_0_or_4;
    case 1:
    case 5: return formula_family::mod6_1_or_5;
    case 3: return formula_family::mod6_3;
    default: return (n % 12 == 2) ? formula_family::mod12_2
                                  : formula_family::mod12_8;
  }
}

/// The family's formula as an explicit queen function. Width equals
/// claimed_width(dispatch(n)) exactly. Negative offsets are stored as their
/// canonical residues mod n+1 (so "2i-2" becomes b = n-1).
inline queen_function build_queen_function(int n) {
  const formula_family fam = dispatch(n);
  queen_function f;
  f.n = n;
  switch (fam) {
    case formula_family::mod6_0_or_4:
      f.segments = {{1, n, {2, 0}, {2, 0}}};
      break;
    case formula_family::mod6_1_or_5:  // n odd: middle row does not exist
      f.segments = {{1, n / 2, {2, 0}, {2, 0}},
                    {n / 2 + 1, n, {2, 1}, {2, 1}}};
      break;
    case formula_family::mod12_8:  // n even
      f.segments = {{1, n / 2, {2, 0}, {2, 0}},
                    {n / 2 + 1, n, {2, 2}, {2, n - 1}}};
      break;
    case formula_family::mod12_2:  // n even; last row rejoins the 2i+4 map
      f.segments = {{1, n / 2 - 1, {2, 4}, {2, 0}},
                    {n / 2, n - 1, {2, 2}, {2, 2}},
                    {n, n, {2, 4}, {2, 4}}};
      break;
    case formula_family::mod6_3: {  // n odd
      const int mid = (n - 1) / 2;
      f.segments = {{1, mid - 1, {2, 2}, {2, 2}},
                    {mid, mid, {2, 4}, {2, 4}},
                    {mid + 1, n, {2, 5}, {2, 5}}};
      break;
    }
  }
  return f;
}

/// A solution for any n >= 1 except n = 2, 3 (which have none); O(n) time
/// and memory, deterministic across runs.
inline arrangement solve(int n) {
  if (n <= 0) throw error(errc::invalid_input, "board size must be positive");
  if (n == 1) return arrangement{1, {1}};
  if (n <= 3) throw error(errc::no_solution_exists, "no solution for n = 2, 3");
  return materialize(build_queen_function(n));
}

}  // namespace queens
