#include "factorlab/growth.hpp"

#include <cmath>
#include <cstdio>

#include "factorlab/group_oracle.hpp"
#include "factorlab/monoid_s.hpp"

namespace factorlab {

  namespace {
    struct ExponentHash {
      std::size_t operator()(std::vector<std::uint32_t> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h = h * 1'000'003 ^ x;
        }
        return h;
      }
    };

    std::string truncation_note(GrowthTable const& t) {
      return "# truncated: element budget reached, table stops at n="
             + std::to_string(t.dims.size() - 1) + " of " + std::to_string(t.requested)
             + "\n";
    }
  }  // namespace

  std::string GrowthTable::to_csv() const {
    std::string out = "n,dim\n";
    for (std::size_t n = 0; n < dims.size(); ++n) {
      out += std::to_string(n) + "," + std::to_string(dims[n]) + "\n";
    }
    return truncated ? out + truncation_note(*this) : out;
  }

  std::string GrowthTable::to_gnuplot() const {
    std::string out = "# " + description + "\n# n dim\n";
    for (std::size_t n = 0; n < dims.size(); ++n) {
      out += std::to_string(n) + " " + std::to_string(dims[n]) + "\n";
    }
    return truncated ? out + truncation_note(*this) : out;
  }

  Baseline parse_baseline(std::string_view text) {
    if (text == "free") {
      return Baseline::free;
    }
    if (text == "free-commutative") {
      return Baseline::free_commutative;
    }
    if (text == "S") {
      return Baseline::monoid_s;
    }
    throw InputError("unknown monoid '" + std::string(text)
                     + "' (expected free, free-commutative or S)");
  }

  std::string to_string(Baseline b) {
    switch (b) {
      case Baseline::free:
        return "free";
      case Baseline::free_commutative:
        return "free-commutative";
      case Baseline::monoid_s:
        return "S";
    }
    throw InternalError("unknown baseline");
  }

  GrowthTable growth_table(Baseline      kind,
                           std::size_t   n_max,
                           std::size_t   generators,
                           std::uint64_t element_budget) {
    if (generators == 0 || generators > 26) {
      throw InputError("number of generators must be between 1 and 26");
    }
    switch (kind) {
      case Baseline::free: {
        std::vector<std::function<std::string(std::string const&)>> gens;
        for (std::size_t i = 0; i < generators; ++i) {
          gens.emplace_back([c = static_cast<char>('a' + i)](std::string const& w) {
            return w + c;
          });
        }
        return layered_growth<std::string>(
            "free monoid on " + std::to_string(generators) + " generators", std::string(),
            gens, n_max, element_budget);
      }
      case Baseline::free_commutative: {
        using Exponents = std::vector<std::uint32_t>;
        std::vector<std::function<Exponents(Exponents const&)>> gens;
        for (std::size_t i = 0; i < generators; ++i) {
          gens.emplace_back([i](Exponents const& e) {
            auto r = e;
            ++r[i];
            return r;
          });
        }
        return layered_growth<Exponents, ExponentHash>(
            "free commutative monoid on " + std::to_string(generators) + " generators",
            Exponents(generators, 0), gens, n_max, element_budget);
      }
      case Baseline::monoid_s: {
        GrowthTable table{"S = <a, b | b a^2 b = a^2, a^4 b = b a^4>, canonical tuples",
                          {},
                          false,
                          n_max};
        // the counts decide how far the enumeration fits in the budget
        auto          by_length = count_elements_by_length(n_max);
        std::uint64_t total = 0;
        std::size_t   reach = 0;
        for (; reach < by_length.size(); ++reach) {
          if (total + by_length[reach] > element_budget) {
            table.truncated = true;
            break;
          }
          total += by_length[reach];
        }
        if (reach == 0) {
          return table;
        }
        std::vector<std::uint64_t> exact(reach, 0);
        for_each_element(reach - 1, [&exact](NormalFormS const& x) {
          ++exact[static_cast<std::size_t>(x.length())];
        });
        std::uint64_t running = 0;
        for (auto c : exact) {
          running += c;
          table.dims.push_back(running);
        }
        return table;
      }
    }
    throw InternalError("unknown baseline");
  }

  GrowthTable s_growth_by_words(std::size_t n_max, std::uint64_t element_budget) {
    std::vector<std::function<GroupElement(GroupElement const&)>> gens{
        [](GroupElement const& g) { return g_mul(g, GroupElement::gen_a()); },
        [](GroupElement const& g) { return g_mul(g, GroupElement::gen_b()); }};
    return layered_growth<GroupElement, GroupElementHash>(
        "S = <a, b | b a^2 b = a^2, a^4 b = b a^4>, words modulo the group embedding",
        GroupElement::identity(), gens, n_max, element_budget);
  }

  std::string GrowthClass::to_string() const {
    char buf[64];
    switch (kind) {
      case Kind::polynomial:
        std::snprintf(buf, sizeof buf, "polynomial(%.0f)", estimate);
        return buf;
      case Kind::exponential:
        std::snprintf(buf, sizeof buf, "exponential(%.2f)", estimate);
        return buf;
      case Kind::inconclusive:
        return "inconclusive";
    }
    throw InternalError("unknown growth class");
  }

  GrowthClass classify(GrowthTable const& table) {
    auto const& d = table.dims;
    if (d.size() < 8) {
      throw InputError("classify needs at least 8 entries, got " + std::to_string(d.size()));
    }
    constexpr std::size_t window = 4;
    auto const            last = d.size() - 1;

    std::vector<double> slopes, ratios;
    for (auto n = last + 1 - window; n <= last; ++n) {
      auto const ratio = static_cast<double>(d[n]) / static_cast<double>(d[n - 1]);
      ratios.push_back(ratio);
      slopes.push_back(std::log(ratio) / std::log(static_cast<double>(n + 1) / n));
    }

    auto const degree = std::round(slopes.back());
    bool       polynomial = degree >= 0;
    for (auto s : slopes) {
      polynomial = polynomial && std::abs(s - degree) <= 0.1 * std::max(degree, 1.0);
    }
    if (polynomial) {
      return {GrowthClass::Kind::polynomial, degree};
    }

    bool exponential = true;
    for (auto r : ratios) {
      exponential = exponential && r > 1.05
                    && std::abs(r - ratios.back()) <= 0.05 * ratios.back();
    }
    if (exponential) {
      return {GrowthClass::Kind::exponential, ratios.back()};
    }
    return {};
  }

}  // namespace factorlab
