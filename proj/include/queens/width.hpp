#pragma once

/**
 * @file width.hpp
 * @brief Minimal-width queen-function decomposition of a permutation.
 *
 * fit_segment decides whether one segment can be linear (per parity class)
 * on [lo,hi] and produces witness maps; min_width finds the least number of
 * segments over all queen functions materializing to a given permutation.
 * Feasibility of a segment is downward-closed (a restriction of a linear map
 * is linear), so the greedy maximal-extension partition is minimum; an exact
 * dynamic program over interval partitions backs this up in the tests.
 *
 * The per-class fit searches every multiplier a in [1,n] with the offset b
 * pinned by the class's first point. No modular inversion is attempted:
 * parity classes step by 2 and n+1 may be even, so gcd(step, n+1) can exceed
 * 1 and the exhaustive scan is the exact check. Fine for analysis scales
 * (mass runs use n <= ~20).
 */

#include <optional>
#include <utility>
#include <vector>

#include "queens/arrangement.hpp"
#include "queens/error.hpp"
#include "queens/queen_function.hpp"
#include "queens/symmetry.hpp"

namespace queens {

struct segment_maps {
  linear_map odd_map;
  linear_map even_map;
};

namespace detail {

// Incremental fit of one parity class within one segment. Keeps the set of
// multipliers a whose map (a, b) matches all points seen so far, where b is
// pinned by the first point: b = (v0 - a*i0) mod m. A failing add leaves
// the state untouched.
//
// The default modulus m = n+1 treats columns 1..n as distinct residues: the
// queen-function reading every public width routine uses. A caller may pass
// m = n instead, which compares columns as residues of Z_n (column n reads
// as 0); the conjecture check uses that ring as a second chance, because an
// even modulus can never bridge an odd column difference inside a parity
// class (2a = odd has no solution) while exactly one of n, n+1 is odd.
class parity_fitter {
 public:
  explicit parity_fitter(int n, int modulus = 0)
      : n_(n), mod_(modulus > 0 ? modulus : n + 1) {}

  void reset() {
    anchored_ = false;
    full_ = false;
    live_.clear();
  }

  bool add(int i, int v) {
    v %= mod_;  // no-op for the default modulus n+1; folds column n in Z_n
    if (!anchored_) {
      anchored_ = true;
      full_ = true;
      anchor_i_ = i;
      anchor_v_ = v;
      return true;
    }
    scratch_.clear();
    if (full_) {
      for (int a = 1; a <= n_; ++a)
        if (value_at(a, i) == v) scratch_.push_back(a);
    } else {
      for (int a : live_)
        if (value_at(a, i) == v) scratch_.push_back(a);
    }
    if (scratch_.empty()) return false;
    full_ = false;
    live_.swap(scratch_);
    return true;
  }

  // Deterministic witness: smallest surviving multiplier; classes without a
  // point get the identity-like default (1, 0), singletons (1, b).
  linear_map chosen() const {
    if (!anchored_) return {1, 0};
    const int a = full_ ? 1 : live_.front();
    return {a, offset_for(a)};
  }

  bool anchored() const { return anchored_; }

  // Candidate (multiplier, value) pairs at row i under the surviving maps.
  template <class F>
  void for_each_candidate(int i, F&& fn) const {
    if (full_) {
      for (int a = 1; a <= n_; ++a) fn(a, value_at(a, i));
    } else {
      for (int a : live_) fn(a, value_at(a, i));
    }
  }

 private:
  int offset_for(int a) const {
    const long long b =
        (static_cast<long long>(anchor_v_) - static_cast<long long>(a) * anchor_i_) % mod_;
    return static_cast<int>(b < 0 ? b + mod_ : b);
  }

  int value_at(int a, int i) const {
    return static_cast<int>(
        (static_cast<long long>(a) * i + offset_for(a)) % mod_);
  }

  int n_;
  int mod_;
  int anchor_i_ = 0;
  int anchor_v_ = 0;
  bool anchored_ = false;
  bool full_ = false;           // anchored and every a in [1,n] still live
  std::vector<int> live_;       // ascending
  std::vector<int> scratch_;
};

// Validation-free greedy width for enumeration-scale sweeps: perm is a
// 0-based array of n 1-based values, already known to be a permutation.
// The caller owns the fitters so their buffers survive across calls.
inline int min_width_raw(const int* perm, int n, parity_fitter& odd,
                         parity_fitter& even) {
  odd.reset();
  even.reset();
  int width = 1;
  for (int i = 1; i <= n; ++i) {
    parity_fitter& ft = (i % 2 != 0) ? odd : even;
    if (!ft.add(i, perm[i - 1])) {
      ++width;
      odd.reset();
      even.reset();
      ft.add(i, perm[i - 1]);
    }
  }
  return width;
}

}  // namespace detail

/// Maps making one segment of a queen function agree with `a` on [lo,hi]
/// for both parity classes, or nullopt when no such maps exist. The scan
/// over multipliers is the brute-force check itself, so the verdict is
/// exact.
inline std::optional<segment_maps> fit_segment(const arrangement& a, int lo,
                                               int hi) {
  require_shape(a);
  if (lo < 1 || hi < lo || hi > a.n)
    throw error(errc::invalid_input, "segment bounds outside [1,n]");
  detail::parity_fitter odd(a.n), even(a.n);
  for (int i = lo; i <= hi; ++i) {
    detail::parity_fitter& f = (i % 2 != 0) ? odd : even;
    if (!f.add(i, a(i))) return std::nullopt;
  }
  return segment_maps{odd.chosen(), even.chosen()};
}

struct width_decomposition {
  int width = 0;
  queen_function function;  // materializes back to the input
};

/// Minimum queen-function width of a permutation (solutions not required),
/// with one witness function. Greedy maximal extension; optimal because
/// segment feasibility is downward-closed.
inline width_decomposition min_width(const arrangement& a) {
  require_permutation(a);
  if (a.n == 0) throw error(errc::invalid_input, "empty arrangement");
  queen_function f;
  f.n = a.n;
  detail::parity_fitter odd(a.n), even(a.n);
  int lo = 1;
  for (int i = 1; i <= a.n; ++i) {
    detail::parity_fitter& ft = (i % 2 != 0) ? odd : even;
    if (!ft.add(i, a(i))) {
      f.segments.push_back({lo, i - 1, odd.chosen(), even.chosen()});
      odd.reset();
      even.reset();
      lo = i;
      ft.add(i, a(i));
    }
  }
  f.segments.push_back({lo, a.n, odd.chosen(), even.chosen()});
  return {f.width(), std::move(f)};
}

/// Width only, no witness function; same greedy.
inline int min_width_value(const arrangement& a) {
  require_permutation(a);
  if (a.n == 0) throw error(errc::invalid_input, "empty arrangement");
  detail::parity_fitter odd(a.n), even(a.n);
  int width = 1;
  for (int i = 1; i <= a.n; ++i) {
    detail::parity_fitter& ft = (i % 2 != 0) ? odd : even;
    if (!ft.add(i, a(i))) {
      ++width;
      odd.reset();
      even.reset();
      ft.add(i, a(i));
    }
  }
  return width;
}

/// Least min_width over the 8 symmetry images of a solution. Rotation does
/// not preserve width, so this can be strictly below min_width(a).
inline int orbit_min_width(const arrangement& a) {
  if (!validate(a))
    throw error(errc::invalid_input, "orbit width is defined for solutions");
  int best = a.n + 1;
  for (const arrangement& img : orbit(a))
    best = std::min(best, min_width_value(img));
  return best;
}

}  // namespace queens
