#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "queens/arrangement.hpp"
#include "queens/enumerate.hpp"
#include "queens/error.hpp"
#include "queens/width.hpp"

namespace queens {

// Queens already on the board: (row, column) pairs, 1-based, at most one per
// row. Mutual attacks are allowed here; the solvers answer "none" for them.
struct partial_placement {
  int n = 0;
  std::vector<std::pair<int, int>> queens;
};

namespace detail {

struct placement_pins {
  std::vector<int> pinned;  // index = row (1-based); 0 = row is free
  std::uint32_t cols = 0;   // occupancy of the pinned queens, as in enumerate
  std::uint64_t diag_up = 0;
  std::uint64_t diag_down = 0;
};

// Validates coordinates and checks the placed queens against each other.
// Returns nullopt when two queens attack (same row, column, or diagonal);
// a cell listed twice counts once.
inline std::optional<placement_pins> check_placement(
    const partial_placement& p) {
  check_enumeration_size(p.n);
  placement_pins pins;
  pins.pinned.assign(static_cast<std::size_t>(p.n) + 1, 0);
  for (const auto& [r, c] : p.queens) {
    if (r < 1 || r > p.n || c < 1 || c > p.n)
      throw error(errc::invalid_input,
                  "queen (" + std::to_string(r) + ", " + std::to_string(c) +
                      ") outside the board");
    if (pins.pinned[r] == c) continue;
    if (pins.pinned[r] != 0) return std::nullopt;  // two queens in one row
    const std::uint32_t col_bit = 1u << (c - 1);
    const std::uint64_t up_bit = 1ull << (c - r + p.n);
    const std::uint64_t down_bit = 1ull << (c + r - 2);
    if ((pins.cols & col_bit) || (pins.diag_up & up_bit) ||
        (pins.diag_down & down_bit))
      return std::nullopt;
    pins.pinned[r] = c;
    pins.cols |= col_bit;
    pins.diag_up |= up_bit;
    pins.diag_down |= down_bit;
  }
  return pins;
}

}  // namespace detail

// Extends the placement to a full solution, or nullopt when none exists.
// Exhaustive and deterministic: always branches on the free row with the
// fewest surviving columns (ties to the smaller row), columns ascending.
inline std::optional<arrangement> complete(const partial_placement& p) {
  auto pins = detail::check_placement(p);
  if (!pins) return std::nullopt;
  const int n = p.n;
  const std::uint32_t all = (1u << n) - 1;
  std::vector<int> perm(pins->pinned.begin() + 1, pins->pinned.end());

  // Board-relative diagonal ids: up bit (c - r + n), down bit (c + r - 2)
  // for 1-based r, c — same masks check_placement seeded.
  auto avail_for = [&](int r, std::uint32_t cols, std::uint64_t up,
                       std::uint64_t down) {
    return all & ~(cols | static_cast<std::uint32_t>(up >> (n - r + 1)) |
                   static_cast<std::uint32_t>(down >> (r - 1)));
  };

  auto dfs = [&](auto&& self, std::uint32_t cols, std::uint64_t up,
                 std::uint64_t down) -> bool {
    int best_row = 0;
    std::uint32_t best_avail = 0;
    int best_count = n + 1;
    for (int r = 1; r <= n; ++r) {
      if (perm[r - 1] != 0) continue;
      const std::uint32_t avail = avail_for(r, cols, up, down);
      const int count = std::popcount(avail);
      if (count < best_count) {
        best_count = count;
        best_row = r;
        best_avail = avail;
        if (count == 0) return false;  // dead row, prune immediately
      }
    }
    if (best_row == 0) return true;  // no free rows left
    for (std::uint32_t m = best_avail; m != 0; m &= m - 1) {
      const int c = std::countr_zero(m) + 1;
      perm[best_row - 1] = c;
      if (self(self, cols | (1u << (c - 1)), up | (1ull << (c - best_row + n)),
               down | (1ull << (c + best_row - 2))))
        return true;
    }
    perm[best_row - 1] = 0;
    return false;
  };

  if (!dfs(dfs, pins->cols, pins->diag_up, pins->diag_down))
    return std::nullopt;
  return arrangement{n, std::move(perm)};
}

// Heuristic completion restricted to arrangements realizable by a queen
// function of width <= max_width. Rows are filled top to bottom; within the
// open segment only values reachable by a still-consistent (a, b) pair are
// tried (each placed queen pins b given a, shrinking the pair set), and a
// segment cut is tried when the width budget allows. Deterministic, but
// incomplete by design: nullopt means "nothing found under this width
// bound", not "no completion exists".
inline std::optional<arrangement> complete_via_queen_functions(
    const partial_placement& p, int max_width = 4) {
  if (max_width < 1)
    throw error(errc::invalid_input, "width bound must be at least 1");
  auto pins = detail::check_placement(p);
  if (!pins) return std::nullopt;
  const int n = p.n;
  std::vector<int> perm(static_cast<std::size_t>(n), 0);

  auto usable = [&](int r, int v, std::uint32_t cols, std::uint64_t up,
                    std::uint64_t down) {
    if (v < 1 || v > n) return false;
    if (pins->pinned[r] != 0 && pins->pinned[r] != v) return false;
    return ((cols >> (v - 1)) & 1u) == 0 &&
           ((up >> (v - r + n)) & 1ull) == 0 &&
           ((down >> (v + r - 2)) & 1ull) == 0;
  };

  // Fitter copies are a handful of small vectors; passing them by value
  // keeps backtracking trivial at these board sizes.
  auto dfs = [&](auto&& self, int row, std::uint32_t cols, std::uint64_t up,
                 std::uint64_t down, detail::parity_fitter odd,
                 detail::parity_fitter even, int used, int seg_lo) -> bool {
    if (row > n) return true;
    detail::parity_fitter& ft = (row % 2 != 0) ? odd : even;
    std::vector<int> values;
    if (ft.anchored()) {
      ft.for_each_candidate(row, [&](int, int v) {
        if (usable(row, v, cols, up, down)) values.push_back(v);
      });
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    } else {
      for (int v = 1; v <= n; ++v)
        if (usable(row, v, cols, up, down)) values.push_back(v);
    }
    auto descend = [&](int v, detail::parity_fitter next_odd,
                       detail::parity_fitter next_even, int next_used,
                       int next_lo) {
      detail::parity_fitter& nf = (row % 2 != 0) ? next_odd : next_even;
      if (!nf.add(row, v)) return false;
      perm[row - 1] = v;
      if (self(self, row + 1, cols | (1u << (v - 1)),
               up | (1ull << (v - row + n)), down | (1ull << (v + row - 2)),
               std::move(next_odd), std::move(next_even), next_used, next_lo))
        return true;
      perm[row - 1] = 0;
      return false;
    };
    for (int v : values)
      if (descend(v, odd, even, used, seg_lo)) return true;
    if (row > seg_lo && used < max_width) {
      detail::parity_fitter fresh(n);
      for (int v = 1; v <= n; ++v) {
        if (!usable(row, v, cols, up, down)) continue;
        if (descend(v, fresh, fresh, used + 1, row)) return true;
      }
    }
    return false;
  };

  if (!dfs(dfs, 1, 0, 0, 0, detail::parity_fitter(n),
           detail::parity_fitter(n), 1, 1))
    return std::nullopt;
  return arrangement{n, std::move(perm)};
}

}  // namespace queens
