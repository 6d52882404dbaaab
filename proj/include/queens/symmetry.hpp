#pragma once

/**
 * @file symmetry.hpp
 * @brief Dihedral symmetries of the board acting on arrangements.
 *
 * The eight board symmetries (four rotations, each optionally followed by a
 * column reflection) map solutions to solutions. Each element is encoded as
 * reflect^f . rot90^k: rotate k quarter-turns first, then reflect if f.
 */

#include <algorithm>
#include <array>
#include <vector>

#include "queens/arrangement.hpp"

namespace queens {

enum class symmetry_op : int {
  identity = 0,
  rot90 = 1,
  rot180 = 2,
  rot270 = 3,
  reflect = 4,        // columns flipped: perm'(i) = n+1 - perm(i)
  reflect_rot90 = 5,  // rot90 first, then reflect
  reflect_rot180 = 6,
  reflect_rot270 = 7,
};

inline constexpr std::array<symmetry_op, 8> all_symmetries = {
    symmetry_op::identity,      symmetry_op::rot90,
    symmetry_op::rot180,        symmetry_op::rot270,
    symmetry_op::reflect,       symmetry_op::reflect_rot90,
    symmetry_op::reflect_rot180, symmetry_op::reflect_rot270,
};

inline const char* to_string(symmetry_op s) noexcept {
  switch (s) {
    case symmetry_op::identity: return "identity";
    case symmetry_op::rot90: return "rot90";
    case symmetry_op::rot180: return "rot180";
    case symmetry_op::rot270: return "rot270";
    case symmetry_op::reflect: return "reflect";
    case symmetry_op::reflect_rot90: return "reflect*rot90";
    case symmetry_op::reflect_rot180: return "reflect*rot180";
    case symmetry_op::reflect_rot270: return "reflect*rot270";
  }
  return "?";
}

namespace detail {
inline int rot_count(symmetry_op s) { return static_cast<int>(s) & 3; }
inline bool reflects(symmetry_op s) { return static_cast<int>(s) >= 4; }
inline symmetry_op make_op(int k, bool f) {
  return static_cast<symmetry_op>(((k % 4 + 4) % 4) + (f ? 4 : 0));
}

// Allocation-free closed forms of the eight images, for enumeration-scale
// work. p and pinv are 0-based arrays of 1-based values; out receives the
// image of op index `op` (same numbering as symmetry_op).
inline void fill_image(int op, const int* p, const int* pinv, int n, int* out) {
  switch (op) {
    case 0:  // identity
      for (int j = 0; j < n; ++j) out[j] = p[j];
      break;
    case 1:  // rot90: j -> n+1 - inv(j)
      for (int j = 0; j < n; ++j) out[j] = n + 1 - pinv[j];
      break;
    case 2:  // rot180: j -> n+1 - p(n+1-j)
      for (int j = 0; j < n; ++j) out[j] = n + 1 - p[n - 1 - j];
      break;
    case 3:  // rot270: j -> inv(n+1-j)
      for (int j = 0; j < n; ++j) out[j] = pinv[n - 1 - j];
      break;
    case 4:  // reflect
      for (int j = 0; j < n; ++j) out[j] = n + 1 - p[j];
      break;
    case 5:  // reflect*rot90 = transpose
      for (int j = 0; j < n; ++j) out[j] = pinv[j];
      break;
    case 6:  // reflect*rot180
      for (int j = 0; j < n; ++j) out[j] = p[n - 1 - j];
      break;
    case 7:  // reflect*rot270
      for (int j = 0; j < n; ++j) out[j] = n + 1 - pinv[n - 1 - j];
      break;
  }
}
}  // namespace detail

// Group composition: compose(s, t) applies t first, then s.
// With r = rot90 and f = reflect, the defining relation is r*f = f*r^-1.
inline symmetry_op compose(symmetry_op s, symmetry_op t) {
  const int k2 = detail::rot_count(s), k1 = detail::rot_count(t);
  const bool f2 = detail::reflects(s), f1 = detail::reflects(t);
  if (!f1) return detail::make_op(k1 + k2, f2);
  return detail::make_op(k1 - k2, !f2);
}

inline symmetry_op inverse(symmetry_op s) {
  if (detail::reflects(s)) return s;  // reflections are involutions
  return detail::make_op(-detail::rot_count(s), false);
}

/// Image of an arrangement under one board symmetry. Solutions map to
/// solutions. rot90 sends perm to j -> n+1 - inverse(perm)(j); reflect sends
/// perm(i) to n+1 - perm(i).
inline arrangement apply_symmetry(const arrangement& a, symmetry_op s) {
  require_permutation(a);
  arrangement r = a;
  for (int step = 0; step < detail::rot_count(s); ++step) {
    const arrangement inv = inverse(r);
    for (int j = 1; j <= r.n; ++j)
      r.perm[static_cast<std::size_t>(j) - 1] = r.n + 1 - inv(j);
  }
  if (detail::reflects(s))
    for (int& v : r.perm) v = r.n + 1 - v;
  return r;
}

/// Lexicographically least image over the 8 symmetries: idempotent and
/// constant on dihedral orbits.
inline arrangement canonical_form(const arrangement& a) {
  arrangement best = apply_symmetry(a, symmetry_op::identity);
  for (std::size_t k = 1; k < all_symmetries.size(); ++k) {
    arrangement img = apply_symmetry(a, all_symmetries[k]);
    if (img.perm < best.perm) best = std::move(img);
  }
  return best;
}

// Distinct symmetry images, sorted lexicographically.
inline std::vector<arrangement> orbit(const arrangement& a) {
  std::vector<arrangement> images;
  images.reserve(8);
  for (symmetry_op s : all_symmetries) images.push_back(apply_symmetry(a, s));
  std::sort(images.begin(), images.end(),
            [](const arrangement& x, const arrangement& y) { return x.perm < y.perm; });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

// Always a divisor of 8.
inline int orbit_size(const arrangement& a) {
  return static_cast<int>(orbit(a).size());
}

}  // namespace queens
