// Prints chromatic, Tutte and matching polynomials for a few small families,
// and checks the chromatic polynomial against brute-force colour counts.

#include <iostream>

#include "polyzoo/polyzoo.hpp"

int main() {
  using namespace polyzoo;
  const std::pair<const char*, Graph> families[] = {
      {"P4", path_graph(4)},
      {"C5", cycle_graph(5)},
      {"K4", complete_graph(4)},
      {"Petersen", parse_graph6("IheA@GUAo")},
  };
  for (const auto& [name, g] : families) {
    const auto chi = chromatic_dc(g);
    std::cout << name << "\n"
              << "  chromatic:  " << format_text(chi) << "\n"
              << "  ff basis:   " << format_text(chromatic_ff(g)) << "\n"
              << "  tutte:      " << format_text(tutte(g)) << "\n"
              << "  matching:   " << format_text(matching_gen(g), "X") << "\n"
              << "  3-colourings: " << chi.eval(3) << " (brute force " << count_proper_colorings(g, 3) << ")\n";
  }
}
