#ifndef POLYZOO_MT_COUNTING_HPP
#define POLYZOO_MT_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/formula.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

/// The finite model M_k: formula phi over nvars colour variables, counted in
/// a colour sort of size k.
struct CountingInstance {
  ColorFormula formula;
  unsigned nvars = 0;
  unsigned k = 0;
};

inline constexpr unsigned kPartitionVariableLimit = 12;

namespace detail {

inline void check_nvars(const ColorFormula& phi, unsigned nvars) {
  if (phi.max_variable() > nvars) {
    throw std::invalid_argument("formula mentions x" + std::to_string(phi.max_variable()) + " but nvars is " +
                                std::to_string(nvars));
  }
}

}  // namespace detail

/// |phi(M_k)|: the number of tuples in [k]^nvars satisfying phi.
inline Integer count_assignments(const CountingInstance& inst, const Budget& budget = {}) {
  detail::check_nvars(inst.formula, inst.nvars);
  if (saturating_power(inst.k, inst.nvars) > budget.max_nodes) {
    throw BudgetExceeded("budget exceeded: " + std::to_string(inst.k) + "^" + std::to_string(inst.nvars) +
                         " assignments to enumerate");
  }
  const auto n = inst.nvars;
  if (n == 0) return inst.formula.eval(std::vector<unsigned>{}) ? 1 : 0;
  if (inst.k == 0) return 0;
  std::vector<unsigned> colour(n, 0);
  Integer count = 0;
  while (true) {
    if (inst.formula.eval(colour)) ++count;
    std::size_t i = 0;
    while (i < n && ++colour[i] == inst.k) colour[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Sums k_(|pi|) over the set partitions pi of the variables that satisfy phi
/// when "equal" means "same block". Each such pi accounts for exactly the
/// k_(|pi|) injective colourings of its blocks.
inline FFPoly counting_polynomial(const ColorFormula& phi, unsigned nvars, const Budget& budget = {}) {
  detail::check_nvars(phi, nvars);
  if (nvars > kPartitionVariableLimit) {
    throw BudgetExceeded("partition enumeration limited to " + std::to_string(kPartitionVariableLimit) +
                         " variables");
  }
  NodeCounter nodes(budget.max_nodes, "variable partitions");
  std::vector<unsigned> block(nvars, 0);  // restricted growth string
  std::vector<std::uint64_t> counts(nvars + 1, 0);
  auto grow = [&](auto&& self, unsigned i, unsigned used) -> void {
    nodes.tick();
    if (i == nvars) {
      if (phi.eval(block)) ++counts[used];
      return;
    }
    for (unsigned b = 0; b <= used; ++b) {
      block[i] = b;
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  grow(grow, 0, 0);
  return FFPoly(std::vector<Integer>(counts.begin(), counts.end()));
}

/// Second route: count in M_0, ..., M_nvars and interpolate.
inline FFPoly interpolated_polynomial(const ColorFormula& phi, unsigned nvars, const Budget& budget = {}) {
  std::vector<Integer> samples;
  for (unsigned k = 0; k <= nvars; ++k) samples.push_back(count_assignments({phi, nvars, k}, budget));
  return newton_interpolate(samples);
}

}  // namespace polyzoo

#endif  // POLYZOO_MT_COUNTING_HPP
