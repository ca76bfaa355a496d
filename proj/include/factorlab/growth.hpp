#ifndef FACTORLAB_GROWTH_HPP_
#define FACTORLAB_GROWTH_HPP_

// dim V^n for the frame V = span{1, generators} of a monoid algebra K[M],
// counted as the number of elements of M of minimal word length <= n.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "factorlab/error.hpp"

namespace factorlab {

  struct GrowthTable {
    std::string                description;
    std::vector<std::uint64_t> dims;  // dims[n] = dim V^n, n = 0, 1, ...
    bool                       truncated = false;
    std::size_t                requested = 0;  // n_max asked for

    std::size_t size() const noexcept {
      return dims.size();
    }

    std::string to_csv() const;      // "n,dim" header, one row per n
    std::string to_gnuplot() const;  // "# n dim" header, whitespace columns
  };

  enum class Baseline { free, free_commutative, monoid_s };

  // "free", "free-commutative" or "S".
  Baseline    parse_baseline(std::string_view text);
  std::string to_string(Baseline b);

  // Counts elements layer by layer: layer n holds the elements first reached
  // by words of length n. Stops with a truncated table once more than
  // element_budget elements have been seen.
  template <typename T, typename Hash = std::hash<T>>
  GrowthTable layered_growth(std::string                                   description,
                             T                                             identity,
                             std::vector<std::function<T(T const&)>> const& generators,
                             std::size_t                                   n_max,
                             std::size_t                                   element_budget) {
    GrowthTable table{std::move(description), {1}, false, n_max};
    std::unordered_set<T, Hash> seen{identity};
    std::vector<T>              layer{identity};
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::vector<T> next;
      for (auto const& x : layer) {
        for (auto const& g : generators) {
          auto y = g(x);
          if (seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      if (seen.size() > element_budget) {
        table.truncated = true;
        break;
      }
      table.dims.push_back(seen.size());
      layer = std::move(next);
    }
    return table;
  }

  // Free and free commutative monoids on k generators by layered search;
  // S by enumerating canonical tuples. Throws InputError for k = 0.
  GrowthTable growth_table(Baseline      kind,
                           std::size_t   n_max,
                           std::size_t   generators = 2,
                           std::uint64_t element_budget = 20'000'000);

  // The table of S computed a second way: layered search over words with
  // elements identified by their image in the group.
  GrowthTable s_growth_by_words(std::size_t n_max, std::uint64_t element_budget = 20'000'000);

  struct GrowthClass {
    enum class Kind { polynomial, exponential, inconclusive };
    Kind   kind = Kind::inconclusive;
    double estimate = 0;  // degree or ratio

    // "polynomial(2)", "exponential(1.76)", "inconclusive"
    std::string to_string() const;
  };

  // Heuristic. Looks at the last four log-log secant slopes
  // log(D_n / D_{n-1}) / log((n+1) / n): within 10% of a common integer d
  // gives polynomial(d). Otherwise four successive ratios D_n / D_{n-1}
  // above 1.05 that agree within 5% give exponential. Throws InputError for
  // fewer than 8 entries.
  GrowthClass classify(GrowthTable const& table);

}  // namespace factorlab

#endif  // FACTORLAB_GROWTH_HPP_
