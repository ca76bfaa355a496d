#ifndef FACTORLAB_LENGTH_FUNCTIONS_HPP_
#define FACTORLAB_LENGTH_FUNCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "factorlab/error.hpp"
#include "factorlab/monoid_s.hpp"
#include "factorlab/normal_form.hpp"

namespace factorlab {

  // right:          lambda(a) > lambda(b) if a = bc, c a nonunit
  // two_sided:      right, and lambda(a) > lambda(c) if a = bc, b a nonunit
  // superadditive:  lambda(bc) >= lambda(b) + lambda(c), lambda(x) = 0 only
  //                 for units
  // Every flavor also requires lambda >= 0.
  enum class Flavor { right, two_sided, superadditive };

  std::string to_string(Flavor f);

  template <typename T>
  struct LengthFunctionSpec {
    std::string                           name;
    std::function<std::int64_t(T const&)> evaluate;
    Flavor                                flavor = Flavor::right;
    std::function<bool(T const&)>         is_unit;
    std::function<std::string(T const&)>  show;
  };

  // a = b c, as asserted by the host.
  template <typename T>
  struct Triple {
    T a;
    T b;
    T c;
  };

  template <typename T>
  using ProductCheck = std::function<bool(T const& a, T const& b, T const& c)>;

  template <typename T>
  struct Violation {
    Triple<T>    triple;
    std::int64_t lambda_a;
    std::int64_t lambda_b;
    std::int64_t lambda_c;
    std::string  rule;  // the clause of the contract that fails
  };

  template <typename T>
  struct ViolationReport {
    std::string                contract;
    std::size_t                samples = 0;
    std::vector<Violation<T>>  violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  namespace detail {
    // Appends every clause of the flavor that the values violate.
    std::vector<std::string> failed_clauses(Flavor       flavor,
                                            std::int64_t la,
                                            std::int64_t lb,
                                            std::int64_t lc,
                                            bool         a_unit,
                                            bool         b_unit,
                                            bool         c_unit);
  }  // namespace detail

  // Evaluates the declared contract on every triple, in order. Throws
  // InputError if some triple fails a = bc according to is_product.
  template <typename T>
  ViolationReport<T> check_contract(LengthFunctionSpec<T> const& spec,
                                    std::vector<Triple<T>> const& sample,
                                    ProductCheck<T> const&        is_product) {
    ViolationReport<T> report;
    report.contract = spec.name + ":" + to_string(spec.flavor);
    report.samples = sample.size();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      auto const& t = sample[i];
      if (!is_product(t.a, t.b, t.c)) {
        throw InputError("sample " + std::to_string(i) + " is not a factorization a = bc");
      }
      auto const la = spec.evaluate(t.a);
      auto const lb = spec.evaluate(t.b);
      auto const lc = spec.evaluate(t.c);
      for (auto& rule : detail::failed_clauses(spec.flavor, la, lb, lc,
                                               spec.is_unit(t.a), spec.is_unit(t.b),
                                               spec.is_unit(t.c))) {
        report.violations.push_back({t, la, lb, lc, std::move(rule)});
      }
    }
    return report;
  }

  // {contract, samples, violations: [{a, b, c, lambda_a, lambda_b, lambda_c,
  // rule}]}
  template <typename T>
  nlohmann::json to_json(ViolationReport<T> const&             report,
                         std::function<std::string(T const&)> const& show) {
    auto violations = nlohmann::json::array();
    for (auto const& v : report.violations) {
      violations.push_back({{"a", show(v.triple.a)},
                            {"b", show(v.triple.b)},
                            {"c", show(v.triple.c)},
                            {"lambda_a", v.lambda_a},
                            {"lambda_b", v.lambda_b},
                            {"lambda_c", v.lambda_c},
                            {"rule", v.rule}});
    }
    return {{"contract", report.contract},
            {"samples", report.samples},
            {"violations", violations}};
  }

  // True iff every length in the set is at most lambda(x).
  template <typename T>
  bool bf_bound_check(LengthFunctionSpec<T> const& spec,
                      T const&                     x,
                      std::set<std::int64_t> const& lengths) {
    return lengths.empty() || *lengths.rbegin() <= spec.evaluate(x);
  }

  bool bf_bound_check(LengthFunctionSpec<NormalFormS> const& spec,
                      LengthSetReport const&                 lengths);

  // Candidate length functions on S share is_unit and show.
  LengthFunctionSpec<NormalFormS>
  s_length_candidate(std::string                                     name,
                     std::function<std::int64_t(NormalFormS const&)> evaluate,
                     Flavor flavor = Flavor::right);

  ProductCheck<NormalFormS> s_product_check();

  // The triples (a^2, b^n a^2, b^n) and (b^{n-1} a^2, b^n a^2, b) of S; one triple when n = 1.
  std::vector<Triple<NormalFormS>> s_refutation_triples(std::int64_t n);

  struct Refutation {
    bool                             found = false;
    std::int64_t                     n = 0;        // family index of the hit
    std::int64_t                     bound = 0;    // lambda(a^2) + 1
    ViolationReport<NormalFormS>     report;       // violations at index n
  };

  // Runs the Right check on s_refutation_triples(n) for n = 1, 2, ... up to
  // lambda(a^2) + 1 and stops at the first violation. A candidate that takes
  // a negative value on a^2 is refuted at n = 1.
  Refutation refute_right_length_function(LengthFunctionSpec<NormalFormS> const& spec);

  struct PowerDepthProbe {
    std::int64_t depth_reached = 0;
    // witnesses[n - 1] lists n nonunits whose product is the element
    std::vector<std::vector<NormalFormS>> witnesses;
  };

  // For n = 1..max_depth, looks for x = b^{n-1} y with y a nonunit, which
  // puts x in (S \ {e})^n. Stops at the first n without a witness; never
  // proves that the intersection of all nonunit powers is empty.
  PowerDepthProbe nonunit_power_depth(NormalFormS const& x, std::int64_t max_depth);

}  // namespace factorlab

#endif  // FACTORLAB_LENGTH_FUNCTIONS_HPP_
