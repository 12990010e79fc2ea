#ifndef POLYZOO_CORE_HPP
#define POLYZOO_CORE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyzoo {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Malformed textual input (edge lists, graph6, matrices, formulas).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// Character offset of the error, or npos when not meaningful.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exponential computation ran past its configured limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits for the exponential cores. `max_nodes` caps recursion nodes and
/// enumerated objects alike; `max_k` caps the color count of brute-force
/// counters; `max_width` caps the tree-decomposition width of the permanent DP.
struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  unsigned max_k = 64;
  unsigned max_width = 12;
};

/// Counts work units against a budget and throws once it is exhausted.
class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit, const char* what = "recursion")
      : limit_(limit), what_(what) {}

  void tick(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw BudgetExceeded(std::string("budget exceeded: ") + what_ + " needs more than " +
                           std::to_string(limit_) + " nodes");
    }
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* what_;
};

/// Saturating k^n, used to price brute-force enumerations before running them.
inline std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base == 0) return 0;
    if (result > cap / base) return cap;
    result *= base;
  }
  return result;
}

}  // namespace polyzoo

#endif  // POLYZOO_CORE_HPP
