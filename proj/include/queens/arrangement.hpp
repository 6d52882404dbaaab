#pragma once

/**
 * @file arrangement.hpp
 * @brief Queen arrangements as permutations and the solution test.
 *
 * An arrangement places one queen per row and per column of an n x n board,
 * so it is encoded as a permutation: perm[i-1] is the column of the queen in
 * row i, with rows, columns and values all 1-indexed. A permutation is a
 * solution exactly when no two queens share a diagonal, i.e. for all i < j,
 * |i - j| != |perm(i) - perm(j)|. Ascending diagonals have constant
 * perm(i) - i, descending ones constant perm(i) + i, which gives the O(n)
 * occupancy test below.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "queens/error.hpp"

namespace queens {

struct arrangement {
  int n = 0;
  std::vector<int> perm;  // perm[i-1] in [1,n]: column of the queen in row i

  // 1-indexed access: a(i) is the column of the queen in row i.
  int operator()(int i) const { return perm[static_cast<std::size_t>(i) - 1]; }

  friend bool operator==(const arrangement&, const arrangement&) = default;
  friend auto operator<=>(const arrangement& x, const arrangement& y) {
    return x.perm <=> y.perm;
  }
};

// Throws invalid_input unless perm has length n with entries in [1,n].
inline void require_shape(const arrangement& a) {
  if (a.n < 0 || a.perm.size() != static_cast<std::size_t>(a.n))
    throw error(errc::invalid_input, "arrangement length does not match n");
  for (int v : a.perm)
    if (v < 1 || v > a.n)
      throw error(errc::invalid_input, "arrangement entry out of [1,n]");
}

// Shape must already hold; true iff every value occurs exactly once.
inline bool is_permutation(const arrangement& a) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(a.n) + 1, 0);
  for (int v : a.perm) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline void require_permutation(const arrangement& a) {
  require_shape(a);
  if (!is_permutation(a))
    throw error(errc::not_a_permutation, "arrangement is not a permutation");
}

// inv(a)(c) = the row whose queen sits in column c. Requires a permutation.
inline arrangement inverse(const arrangement& a) {
  arrangement r{a.n, std::vector<int>(static_cast<std::size_t>(a.n))};
  for (int i = 1; i <= a.n; ++i) r.perm[static_cast<std::size_t>(a(i)) - 1] = i;
  return r;
}

/// True iff `a` is a permutation with no two queens on a common diagonal.
/// Shape violations (wrong length, out-of-range entry) throw invalid_input;
/// duplicate values merely yield false.
inline bool validate(const arrangement& a) {
  require_shape(a);
  const auto n = static_cast<std::size_t>(a.n);
  std::vector<std::uint8_t> cols(n + 1, 0), up(2 * n, 0), down(2 * n, 0);
  for (int i = 1; i <= a.n; ++i) {
    const int v = a(i);
    const auto c = static_cast<std::size_t>(v);
    const auto u = static_cast<std::size_t>(v - i + a.n);  // perm(i)-i shifted
    const auto d = static_cast<std::size_t>(v + i - 2);    // perm(i)+i shifted
    if (cols[c] || up[u] || down[d]) return false;
    cols[c] = up[u] = down[d] = 1;
  }
  return true;
}

}  // namespace queens
