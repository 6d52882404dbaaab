#pragma once

/**
 * @file compose.hpp
 * @brief Composition of arrangements, its validity criterion, and
 *        Q-irreducibility of board sizes.
 *
 * Composition inserts one board into every queen cell of another:
 * C(|B|(i-1) + j) = |B|(A_j(i) - 1) + B(j). For solutions A, B the result is
 * a solution exactly when both residue families {B(i) - i mod |B|} and
 * {B(i) + i mod |B|} are all of Z_|B|; such a B exists iff gcd(|B|, 6) = 1.
 * A board size is Q-irreducible when none of its solutions arises as a
 * composition of smaller boards; the sizes with that property are exactly
 * p, 2p, 3p and 2^k 3^l.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "queens/arrangement.hpp"
#include "queens/error.hpp"

namespace queens {

struct criterion_report {
  int n = 0;
  std::vector<int> diff_residues;  // (B(i) - i) mod n, i = 1..n
  std::vector<int> sum_residues;   // (B(i) + i) mod n
  bool diff_complete = false;      // diff residues = Z_n
  bool sum_complete = false;
  bool passes = false;             // both complete
};

/// Residue report for the composition criterion; O(n).
inline criterion_report criterion(const arrangement& b) {
  require_permutation(b);
  criterion_report r;
  r.n = b.n;
  r.diff_residues.reserve(static_cast<std::size_t>(b.n));
  r.sum_residues.reserve(static_cast<std::size_t>(b.n));
  std::vector<std::uint8_t> dseen(static_cast<std::size_t>(b.n), 0),
      sseen(static_cast<std::size_t>(b.n), 0);
  for (int i = 1; i <= b.n; ++i) {
    const int d = ((b(i) - i) % b.n + b.n) % b.n;
    const int s = (b(i) + i) % b.n;
    r.diff_residues.push_back(d);
    r.sum_residues.push_back(s);
    dseen[static_cast<std::size_t>(d)] = 1;
    sseen[static_cast<std::size_t>(s)] = 1;
  }
  r.diff_complete = std::all_of(dseen.begin(), dseen.end(),
                                [](std::uint8_t x) { return x != 0; });
  r.sum_complete = std::all_of(sseen.begin(), sseen.end(),
                               [](std::uint8_t x) { return x != 0; });
  r.passes = r.diff_complete && r.sum_complete;
  return r;
}

/// Generalized composition: block row i of the result takes its queens from
/// A_j at block column j. Requires |As| = |B| and all A_j of equal size.
/// Total on permutations; whether the result is a solution is governed by
/// criterion(B).
inline arrangement generalized_compose(const std::vector<arrangement>& as,
                                       const arrangement& b) {
  require_permutation(b);
  if (as.size() != static_cast<std::size_t>(b.n))
    throw error(errc::size_mismatch, "need exactly |B| left-hand arrangements");
  for (const arrangement& a : as) {
    require_permutation(a);
    if (a.n != as.front().n)
      throw error(errc::size_mismatch, "left-hand arrangements differ in size");
  }
  const int an = as.front().n, bn = b.n;
  const std::int64_t size = static_cast<std::int64_t>(an) * bn;
  if (size > (std::int64_t{1} << 30))
    throw error(errc::limit_exceeded, "composed board too large");
  arrangement c{static_cast<int>(size),
                std::vector<int>(static_cast<std::size_t>(size))};
  for (int i = 1; i <= an; ++i)
    for (int j = 1; j <= bn; ++j) {
      const std::int64_t row = static_cast<std::int64_t>(bn) * (i - 1) + j;
      const arrangement& aj = as[static_cast<std::size_t>(j) - 1];
      c.perm[static_cast<std::size_t>(row) - 1] =
          bn * (aj(i) - 1) + b(j);
    }
  return c;
}

/// Composition A (x) B, size |A|*|B|: the generalized form with every
/// A_j = A.
inline arrangement compose(const arrangement& a, const arrangement& b) {
  require_permutation(a);
  require_permutation(b);
  // Reject oversized results before materializing |B| copies of A.
  if (static_cast<std::int64_t>(a.n) * b.n > (std::int64_t{1} << 30))
    throw error(errc::limit_exceeded, "composed board too large");
  return generalized_compose(
      std::vector<arrangement>(static_cast<std::size_t>(b.n), a), b);
}

/// True iff a criterion-satisfying permutation of size n exists,
/// i.e. gcd(n, 6) = 1.
inline bool hedayat_exists(long long n) {
  if (n < 1) throw error(errc::invalid_input, "size must be positive");
  return std::gcd(n, 6LL) == 1;
}

/// Constructive side of the existence statement: the doubling permutation
/// B(i) = 2i mod n (residue 0 mapped to n) satisfies both criterion
/// conditions whenever gcd(n, 6) = 1. The conditions are rechecked at
/// runtime.
inline arrangement witness(int n) {
  if (n < 1) throw error(errc::invalid_input, "size must be positive");
  if (std::gcd(n, 6) != 1)
    throw error(errc::no_witness, "no criterion witness when gcd(n,6) != 1");
  arrangement b{n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    const int v = (2 * static_cast<std::int64_t>(i)) % n == 0
                      ? n
                      : static_cast<int>((2 * static_cast<std::int64_t>(i)) % n);
    b.perm[static_cast<std::size_t>(i) - 1] = v;
  }
  if (!criterion(b).passes)
    throw std::logic_error("doubling witness failed its criterion recheck");
  return b;
}

enum class irreducible_form {
  prime,          // n = p
  doubled_prime,  // n = 2p
  tripled_prime,  // n = 3p
  three_smooth,   // n = 2^k 3^l (k, l >= 0)
};

inline const char* to_string(irreducible_form f) noexcept {
  switch (f) {
    case irreducible_form::prime: return "p";
    case irreducible_form::doubled_prime: return "2p";
    case irreducible_form::tripled_prime: return "3p";
    case irreducible_form::three_smooth: return "2^k3^l";
  }
  return "?";
}

struct irreducibility_class {
  long long n = 0;
  bool q_irreducible = false;
  // Set iff q_irreducible: the first matching closed form in the order
  // p, 2p, 3p, 2^k 3^l.
  std::optional<irreducible_form> form;
  // Set iff reducible: (a, b) with a*b = n, a >= 4, b >= 5, gcd(b, 6) = 1
  // and smallest such b, so compose(solve(a), witness(b)) is a valid n-board.
  std::optional<std::pair<long long, long long>> factor_witness;
};

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_three_smooth(long long n) {
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

}  // namespace detail

/// Q-irreducibility of a board size, by the closed form {p, 2p, 3p, 2^k 3^l};
/// reducible sizes come with the smallest-b composition witness.
inline irreducibility_class classify(long long n) {
  if (n < 1) throw error(errc::invalid_input, "size must be positive");
  irreducibility_class r;
  r.n = n;
  if (detail::is_prime(n)) {
    r.q_irreducible = true;
    r.form = irreducible_form::prime;
  } else if (n % 2 == 0 && detail::is_prime(n / 2)) {
    r.q_irreducible = true;
    r.form = irreducible_form::doubled_prime;
  } else if (n % 3 == 0 && detail::is_prime(n / 3)) {
    r.q_irreducible = true;
    r.form = irreducible_form::tripled_prime;
  } else if (detail::is_three_smooth(n)) {
    r.q_irreducible = true;
    r.form = irreducible_form::three_smooth;
  } else {
    r.q_irreducible = false;
    // Smallest divisor b >= 5 with gcd(b,6) = 1 and cofactor a >= 4. Both
    // factors then carry solutions (sizes 2 and 3 are excluded), so the
    // composed board certifies reducibility. Walking divisor pairs keeps
    // this O(sqrt n) even when the only valid b is n/4.
    long long best_b = 0;
    auto consider = [&](long long b) {
      if (b >= 5 && std::gcd(b, 6LL) == 1 && n / b >= 4 &&
          (best_b == 0 || b < best_b))
        best_b = b;
    };
    for (long long d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      consider(d);
      consider(n / d);
    }
    if (best_b == 0)
      throw std::logic_error("reducible size without a factor witness");
    r.factor_witness = {n / best_b, best_b};
  }
  return r;
}

/// True iff both n and n-1 are Q-irreducible (the conjecture's hypothesis).
inline bool conjecture_applicable(long long n) {
  if (n < 2) throw error(errc::invalid_input, "needs n >= 2");
  return classify(n).q_irreducible && classify(n - 1).q_irreducible;
}

}  // namespace queens
