#include "catch_amalgamated.hpp"

#include <random>

#include "factorlab/error.hpp"
#include "factorlab/length_functions.hpp"
#include "factorlab/monoid_s.hpp"
#include "factorlab/ore_poly.hpp"

using namespace factorlab;

namespace {
  Field const Q = Field::rationals();

  // The free monoid on {a, b} as plain strings.
  LengthFunctionSpec<std::string> free_length(Flavor flavor) {
    return {"word_length",
            [](std::string const& w) { return static_cast<std::int64_t>(w.size()); },
            flavor,
            [](std::string const& w) { return w.empty(); },
            [](std::string const& w) { return w.empty() ? std::string("e") : w; }};
  }

  ProductCheck<std::string> free_product() {
    return [](std::string const& a, std::string const& b, std::string const& c) {
      return a == b + c;
    };
  }

  std::vector<Triple<std::string>> free_triples(std::mt19937_64& rng, std::size_t n) {
    std::vector<Triple<std::string>> result;
    for (std::size_t i = 0; i < n; ++i) {
      std::string b(rng() % 6, 'a'), c(rng() % 6, 'a');
      for (auto& x : b) {
        x = rng() % 2 ? 'a' : 'b';
      }
      for (auto& x : c) {
        x = rng() % 2 ? 'a' : 'b';
      }
      result.push_back({b + c, b, c});
    }
    return result;
  }

  LengthFunctionSpec<BasePoly> degree_spec(Flavor flavor) {
    return {"deg",
            [](BasePoly const& f) { return *f.degree(); },
            flavor,
            [](BasePoly const& f) { return f.is_unit(); },
            [](BasePoly const& f) { return f.to_string(); }};
  }

  ProductCheck<BasePoly> poly_product() {
    return [](BasePoly const& a, BasePoly const& b, BasePoly const& c) { return a == b * c; };
  }

  std::vector<Triple<BasePoly>> poly_triples(std::mt19937_64& rng, std::size_t n) {
    std::vector<Triple<BasePoly>> result;
    for (std::size_t i = 0; i < n; ++i) {
      auto b = random_base_poly(Q, rng, 4), c = random_base_poly(Q, rng, 4);
      result.push_back({b * c, b, c});
    }
    return result;
  }
}  // namespace

TEST_CASE("additive functions pass every contract", "[length_functions]") {
  std::mt19937_64 rng(1);
  auto const      words = free_triples(rng, 100);
  auto const      polys = poly_triples(rng, 100);
  for (auto flavor : {Flavor::superadditive, Flavor::two_sided, Flavor::right}) {
    auto w = check_contract(free_length(flavor), words, free_product());
    CHECK(w.ok());
    CHECK(w.samples == 100);
    auto p = check_contract(degree_spec(flavor), polys, poly_product());
    CHECK(p.ok());
  }
}

TEST_CASE("the zero function is refuted", "[length_functions]") {
  std::mt19937_64 rng(2);
  auto            triples = free_triples(rng, 50);
  auto            zero = free_length(Flavor::superadditive);
  zero.name = "zero";
  zero.evaluate = [](std::string const&) -> std::int64_t { return 0; };
  auto report = check_contract(zero, triples, free_product());
  REQUIRE(!report.ok());
  for (auto const& v : report.violations) {
    CHECK(v.rule == "zero_on_nonunit");
  }
  zero.flavor = Flavor::right;
  CHECK(!check_contract(zero, triples, free_product()).ok());
}

TEST_CASE("samples must be factorizations", "[length_functions]") {
  std::vector<Triple<std::string>> bad{{"ab", "b", "a"}};
  CHECK_THROWS_AS(check_contract(free_length(Flavor::right), bad, free_product()), InputError);
}

TEST_CASE("superadditive implies two-sided implies right", "[length_functions]") {
  std::mt19937_64 rng(3);
  // word length, deg, and a deliberately weaker function that is only a
  // right length function on the free monoid: |w| + (number of leading a's)
  auto words = free_triples(rng, 300);
  std::vector<LengthFunctionSpec<std::string>> specs{free_length(Flavor::right)};
  auto lead = free_length(Flavor::right);
  lead.name = "length_plus_leading_as";
  lead.evaluate = [](std::string const& w) {
    auto k = w.find_first_not_of('a');
    return static_cast<std::int64_t>(w.size() + (k == std::string::npos ? w.size() : k));
  };
  specs.push_back(lead);
  for (auto spec : specs) {
    spec.flavor = Flavor::superadditive;
    bool const super = check_contract(spec, words, free_product()).ok();
    spec.flavor = Flavor::two_sided;
    bool const two = check_contract(spec, words, free_product()).ok();
    spec.flavor = Flavor::right;
    bool const right = check_contract(spec, words, free_product()).ok();
    CHECK((!super || two));
    CHECK((!two || right));
    if (right) {
      // nonunit positivity
      for (auto const& t : words) {
        if (!t.a.empty()) {
          REQUIRE(spec.evaluate(t.a) > 0);
        }
      }
    }
  }
}

TEST_CASE("violations are re-checkable and serialize", "[length_functions]") {
  auto candidate = s_length_candidate("a_count", [](NormalFormS const& x) { return x.a_count(); });
  auto triples = s_refutation_triples(1);
  CHECK(triples.size() == 1);
  CHECK(s_refutation_triples(2).size() == 2);
  auto report = check_contract(candidate, triples, s_product_check());
  REQUIRE(!report.ok());
  for (auto const& v : report.violations) {
    CHECK(v.lambda_a == candidate.evaluate(v.triple.a));
    CHECK(v.lambda_b == candidate.evaluate(v.triple.b));
    CHECK(!v.triple.c.is_identity());
    CHECK(!(v.lambda_a > v.lambda_b));
  }
  auto j = to_json(report, candidate.show);
  CHECK(j["contract"] == "a_count:right");
  CHECK(j["samples"] == 1);
  CHECK(j["violations"][0]["a"] == "a^2");
  CHECK(j["violations"][0]["b"] == "b^1 a^2");
  CHECK(j["violations"][0]["c"] == "b^1");
  CHECK(j["violations"][0]["lambda_a"] == 2);
  CHECK(j["violations"][0]["lambda_b"] == 2);
  CHECK(j["violations"][0]["lambda_c"] == 0);
}

TEST_CASE("bf_bound_check", "[length_functions]") {
  auto spec = free_length(Flavor::right);
  CHECK(bf_bound_check(spec, std::string("abab"), {4}));
  CHECK(!bf_bound_check(spec, std::string("ab"), {2, 3}));

  // y^2 - 1 = (y - 1)(y + 1) and both factors are atoms
  auto f = parse_base_poly(Q, "y^2 - 1");
  CHECK(parse_base_poly(Q, "y - 1") * parse_base_poly(Q, "y + 1") == f);
  CHECK(bf_bound_check(degree_spec(Flavor::superadditive), f, {2}));

  // no candidate on S can bound the length set of a^2
  auto x = NormalFormS::a_power(2);
  auto lengths = length_set(x, 12);
  auto len = s_length_candidate("nf_length", [](NormalFormS const& s) { return s.length(); });
  CHECK(!bf_bound_check(len, lengths));
  CHECK(bf_bound_check(len, length_set(NormalFormS::b_power(3), 5)));
}

TEST_CASE("a^2 lies in every nonunit power", "[length_functions]") {
  auto probe = nonunit_power_depth(NormalFormS::a_power(2), 10);
  CHECK(probe.depth_reached == 10);
  REQUIRE(probe.witnesses.size() == 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const& factors = probe.witnesses[n - 1];
    REQUIRE(factors.size() == n);
    NormalFormS product;
    for (auto const& f : factors) {
      CHECK(!f.is_identity());
      product = multiply(product, f);
    }
    CHECK(product == NormalFormS::a_power(2));
  }
  // b^3 is only in the first three powers
  CHECK(nonunit_power_depth(NormalFormS::b_power(3), 10).depth_reached == 3);
  CHECK(nonunit_power_depth(NormalFormS(), 10).depth_reached == 0);
}

TEST_CASE("no right length function on S", "[length_functions]") {
  std::vector<LengthFunctionSpec<NormalFormS>> candidates{
      s_length_candidate("nf_length", [](NormalFormS const& x) { return x.length(); }),
      s_length_candidate("a_count", [](NormalFormS const& x) { return x.a_count(); }),
      s_length_candidate("a_plus_b_count",
                         [](NormalFormS const& x) { return x.a_count() + x.b_count(); }),
      s_length_candidate("ten_a_minus_b",
                         [](NormalFormS const& x) {
                           return std::max<std::int64_t>(10 * x.a_count() - x.b_count(), 0);
                         }),
      s_length_candidate("negative", [](NormalFormS const&) -> std::int64_t { return -1; }),
  };
  for (auto const& spec : candidates) {
    auto r = refute_right_length_function(spec);
    INFO(spec.name);
    CHECK(r.found);
    CHECK(r.n <= r.bound);
    CHECK(!r.report.ok());
  }
  CHECK(refute_right_length_function(candidates[3]).n > 1);
  CHECK_THROWS_AS(s_refutation_triples(0), InputError);
}

TEST_CASE("skew length functions as harness samples", "[length_functions]") {
  std::mt19937_64 rng(4);
  auto            sd = SigmaDelta::weyl();
  std::vector<Triple<OrePoly>> triples;
  for (int i = 0; i < 200; ++i) {
    auto b = random_ore_poly(sd, rng, 2, 2), c = random_ore_poly(sd, rng, 2, 2);
    triples.push_back({ore_mul(b, c), b, c});
  }
  LengthFunctionSpec<OrePoly> skew{"lambda_skew", lambda_skew, Flavor::right,
                                   [](OrePoly const& f) { return f.is_unit(); },
                                   [](OrePoly const& f) { return f.to_string(); }};
  ProductCheck<OrePoly> check = [](OrePoly const& a, OrePoly const& b, OrePoly const& c) {
    return a == ore_mul(b, c);
  };
  CHECK(check_contract(skew, triples, check).ok());
  auto filt = skew;
  filt.name = "lambda_filtration";
  filt.evaluate = lambda_filtration;
  filt.flavor = Flavor::superadditive;
  CHECK(check_contract(filt, triples, check).ok());
}
