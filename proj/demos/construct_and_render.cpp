// Builds closed-form solutions for a handful of board sizes and shows the
// piecewise-linear queen function behind each one.

#include <iostream>

#include "queens/queens.hpp"

int main() {
  for (int n : {8, 9, 14, 15, 27}) {
    const queens::queen_function f = queens::build_queen_function(n);
    const queens::arrangement a = queens::materialize(f);
    std::cout << "n = " << n << "  (width " << f.width() << ")\n";
    for (const auto& s : f.segments)
      std::cout << "  rows [" << s.lo << ", " << s.hi << "]: odd i -> "
                << s.odd_map.a << "*i+" << s.odd_map.b << ", even i -> "
                << s.even_map.a << "*i+" << s.even_map.b << "  (mod "
                << n + 1 << ")\n";
    std::cout << queens::format_perm_text(a) << '\n';
    if (n <= 9) std::cout << queens::render_board(a);
    std::cout << "valid: " << (queens::validate(a) ? "yes" : "no") << "\n\n";
  }
  return 0;
}
