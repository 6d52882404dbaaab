// Walks through the composition pipeline: check the residue criterion on a
// small solution, blow it up to a 25-queens board, and classify some sizes
// by whether composition could ever produce them.

#include <iostream>

#include "queens/queens.hpp"

int main() {
  const queens::arrangement b = queens::solve(5);
  const queens::criterion_report r = queens::criterion(b);
  std::cout << "base solution: " << queens::format_perm_text(b) << '\n'
            << "criterion passes: " << (r.passes ? "yes" : "no") << '\n';

  const queens::arrangement big = queens::compose(b, b);
  std::cout << "composed " << b.n << " x " << b.n << " -> " << big.n
            << " queens, valid: " << (queens::validate(big) ? "yes" : "no")
            << "\n\n";

  for (long long n : {31, 62, 93, 144, 2019, 20}) {
    const auto c = queens::classify(n);
    std::cout << n << ": "
              << (c.q_irreducible ? "Q-irreducible" : "Q-reducible");
    if (c.form) std::cout << " (form " << queens::to_string(*c.form) << ")";
    if (c.factor_witness)
      std::cout << " (splits as " << c.factor_witness->first << " * "
                << c.factor_witness->second << ")";
    std::cout << '\n';
  }
  return 0;
}
