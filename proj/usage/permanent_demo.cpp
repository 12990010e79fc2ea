// Permanent of a banded matrix through the tree-decomposition DP, compared with
// Ryser's formula where that is still affordable.

#include <chrono>
#include <iostream>

#include "polyzoo/polyzoo.hpp"

int main() {
  using namespace polyzoo;
  for (std::size_t n : {10u, 20u, 200u}) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i >= 2 ? i - 2 : 0; j < std::min(n, i + 3); ++j) m(i, j) = 1 + (i + 2 * j) % 3;
    const auto td = greedy_tree_decomposition(support_graph(m));
    const auto start = std::chrono::steady_clock::now();
    const auto value = permanent_tw(m, td);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << "n=" << n << " width=" << td.width() << " per=" << value << " (" << ms << " ms)";
    if (n <= 20) std::cout << (permanent_ryser(m) == value ? "  ryser agrees" : "  RYSER DISAGREES");
    std::cout << "\n";
  }
}
