#include "factorlab/length_functions.hpp"

#include <algorithm>

#include "factorlab/group_oracle.hpp"

namespace factorlab {

  std::string to_string(Flavor f) {
    switch (f) {
      case Flavor::right:
        return "right";
      case Flavor::two_sided:
        return "two_sided";
      case Flavor::superadditive:
        return "superadditive";
    }
    throw InternalError("unknown flavor");
  }

  namespace detail {
    std::vector<std::string> failed_clauses(Flavor       flavor,
                                            std::int64_t la,
                                            std::int64_t lb,
                                            std::int64_t lc,
                                            bool         a_unit,
                                            bool         b_unit,
                                            bool         c_unit) {
      std::vector<std::string> result;
      if (std::min({la, lb, lc}) < 0) {
        result.emplace_back("nonnegative");
      }
      switch (flavor) {
        case Flavor::two_sided:
          if (!b_unit && !(la > lc)) {
            result.emplace_back("left_strict");
          }
          [[fallthrough]];
        case Flavor::right:
          if (!c_unit && !(la > lb)) {
            result.emplace_back("right_strict");
          }
          break;
        case Flavor::superadditive:
          if (la < lb + lc) {
            result.emplace_back("superadditive");
          }
          if ((la == 0 && !a_unit) || (lb == 0 && !b_unit) || (lc == 0 && !c_unit)) {
            result.emplace_back("zero_on_nonunit");
          }
          break;
      }
      return result;
    }
  }  // namespace detail

  bool bf_bound_check(LengthFunctionSpec<NormalFormS> const& spec,
                      LengthSetReport const&                 lengths) {
    return bf_bound_check(spec, lengths.element, lengths.lengths);
  }

  LengthFunctionSpec<NormalFormS>
  s_length_candidate(std::string                                     name,
                     std::function<std::int64_t(NormalFormS const&)> evaluate,
                     Flavor                                          flavor) {
    return {std::move(name),
            std::move(evaluate),
            flavor,
            [](NormalFormS const& x) { return x.is_identity(); },
            [](NormalFormS const& x) { return x.to_string(); }};
  }

  ProductCheck<NormalFormS> s_product_check() {
    return [](NormalFormS const& a, NormalFormS const& b, NormalFormS const& c) {
      return multiply(b, c) == a;
    };
  }

  std::vector<Triple<NormalFormS>> s_refutation_triples(std::int64_t n) {
    if (n < 1) {
      throw InputError("refutation index must be positive");
    }
    auto const a2 = NormalFormS::a_power(2);
    auto const bn_a2 = NormalFormS(n, {}, 2);
    std::vector<Triple<NormalFormS>> triples{{a2, bn_a2, NormalFormS::b_power(n)}};
    // at n = 1 both families give the same triple
    if (n > 1) {
      triples.push_back({NormalFormS(n - 1, {}, 2), bn_a2, NormalFormS::b_power(1)});
    }
    return triples;
  }

  Refutation refute_right_length_function(LengthFunctionSpec<NormalFormS> const& spec) {
    auto right = spec;
    right.flavor = Flavor::right;
    Refutation result;
    result.bound = std::max<std::int64_t>(spec.evaluate(NormalFormS::a_power(2)), 0) + 1;
    auto const check = s_product_check();
    for (std::int64_t n = 1; n <= result.bound; ++n) {
      result.report = check_contract(right, s_refutation_triples(n), check);
      result.n = n;
      if (!result.report.ok()) {
        result.found = true;
        break;
      }
    }
    return result;
  }

  PowerDepthProbe nonunit_power_depth(NormalFormS const& x, std::int64_t max_depth) {
    PowerDepthProbe probe;
    if (x.is_identity()) {
      return probe;
    }
    auto const b = NormalFormS::b_power(1);
    for (std::int64_t n = 1; n <= max_depth; ++n) {
      auto q = left_quotient(NormalFormS::b_power(n - 1), x);
      if (!q.is_in() || q.value().is_identity()) {
        break;
      }
      std::vector<NormalFormS> factors(n - 1, b);
      factors.push_back(q.value());
      NormalFormS product;
      for (auto const& f : factors) {
        product = multiply(product, f);
      }
      if (!(product == x)) {
        throw InternalError("nonunit_power_depth: witness does not multiply out");
      }
      probe.witnesses.push_back(std::move(factors));
      probe.depth_reached = n;
    }
    return probe;
  }

}  // namespace factorlab
