#pragma once

/**
 * @file queen_function.hpp
 * @brief Piecewise modular-linear representation of arrangements.
 *
 * A queen function on [1,n] is an ordered partition into contiguous segments;
 * inside each segment the odd rows and the even rows are mapped by separate
 * linear maps i -> a*i + b (mod n+1) with a in [1,n], b in [0,n]. The number
 * of segments is the function's width. Every arrangement admits width n
 * (one singleton segment per row); the interesting questions are about small
 * widths.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "queens/arrangement.hpp"
#include "queens/error.hpp"

namespace queens {

// i -> a*i + b (mod n+1), canonical residue in [0,n].
struct linear_map {
  int a = 1;
  int b = 0;

  friend bool operator==(const linear_map&, const linear_map&) = default;
};

struct segment {
  int lo = 1;  // inclusive, 1-indexed
  int hi = 1;
  linear_map odd_map;   // applied to odd i in [lo,hi]
  linear_map even_map;  // applied to even i in [lo,hi]

  friend bool operator==(const segment&, const segment&) = default;
};

struct queen_function {
  int n = 0;
  std::vector<segment> segments;  // contiguous, covering [1,n]

  int width() const { return static_cast<int>(segments.size()); }

  friend bool operator==(const queen_function&, const queen_function&) = default;
};

// Structural check: segments tile [1,n] in order and map coefficients are
// within their bounds (a in [1,n], b in [0,n]).
inline bool well_formed(const queen_function& f) {
  if (f.n < 1 || f.segments.empty()) return false;
  int expect_lo = 1;
  for (const segment& s : f.segments) {
    if (s.lo != expect_lo || s.hi < s.lo || s.hi > f.n) return false;
    for (const linear_map& m : {s.odd_map, s.even_map})
      if (m.a < 1 || m.a > f.n || m.b < 0 || m.b > f.n) return false;
    expect_lo = s.hi + 1;
  }
  return expect_lo == f.n + 1;
}

/// Value of the queen function at row i, as the canonical residue of
/// a*i + b mod (n+1) in [0,n]. A result of 0 is returned as-is; only
/// materialize() treats it as unplaceable.
inline int eval(const queen_function& f, int i) {
  if (i < 1 || i > f.n)
    throw error(errc::invalid_input, "row index outside [1,n]");
  for (const segment& s : f.segments) {
    if (i > s.hi) continue;
    if (i < s.lo) break;
    const linear_map& m = (i % 2 != 0) ? s.odd_map : s.even_map;
    const auto mod = static_cast<std::int64_t>(f.n) + 1;
    return static_cast<int>((static_cast<std::int64_t>(m.a) * i + m.b) % mod);
  }
  throw error(errc::invalid_input, "row index not covered by any segment");
}

/// Row-by-row evaluation into an arrangement; nullopt when some value is 0
/// or two rows collide.
inline std::optional<arrangement> try_materialize(const queen_function& f) {
  if (!well_formed(f)) return std::nullopt;
  arrangement a{f.n, std::vector<int>(static_cast<std::size_t>(f.n))};
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(f.n) + 1, 0);
  for (int i = 1; i <= f.n; ++i) {
    const int v = eval(f, i);
    if (v == 0 || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = 1;
    a.perm[static_cast<std::size_t>(i) - 1] = v;
  }
  return a;
}

/// As try_materialize, but failures are reported: a zero value throws
/// value_out_of_range, a duplicate throws not_a_permutation.
inline arrangement materialize(const queen_function& f) {
  if (!well_formed(f))
    throw error(errc::invalid_input, "malformed queen function");
  arrangement a{f.n, std::vector<int>(static_cast<std::size_t>(f.n))};
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(f.n) + 1, 0);
  for (int i = 1; i <= f.n; ++i) {
    const int v = eval(f, i);
    if (v == 0)
      throw error(errc::value_out_of_range, "queen function evaluates to 0");
    if (seen[static_cast<std::size_t>(v)])
      throw error(errc::not_a_permutation, "queen function repeats a value");
    seen[static_cast<std::size_t>(v)] = 1;
    a.perm[static_cast<std::size_t>(i) - 1] = v;
  }
  return a;
}

}  // namespace queens
