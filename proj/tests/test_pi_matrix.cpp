#include "catch_amalgamated.hpp"

#include <random>

#include "factorlab/error.hpp"
#include "factorlab/pi_matrix.hpp"

using namespace factorlab;

namespace {
  LaurentPoly2 lp(std::string_view text) {
    return parse_laurent_poly2(text);
  }

  LaurentPoly2 random_poly(std::mt19937_64& rng, bool x_divisible, bool y_nonneg_pure) {
    LaurentPoly2 f;
    auto         terms = rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      std::int64_t i = static_cast<std::int64_t>(rng() % 3) + (x_divisible ? 1 : 0);
      std::int64_t j = static_cast<std::int64_t>(rng() % 5) - 2;
      if (y_nonneg_pure && i == 0 && j < 0) {
        j = -j;
      }
      f.add_term({i, j}, mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 2));
    }
    return f;
  }

  Mat2 random_element_of_R(std::mt19937_64& rng) {
    return {{random_poly(rng, false, false), random_poly(rng, true, false),
             random_poly(rng, false, false), random_poly(rng, false, true)}};
  }
}  // namespace

TEST_CASE("Laurent polynomials in x and y", "[pi_matrix]") {
  auto f = lp("x*y - 2*x + y^-1");
  CHECK(f.to_string() == "x*y - 2*x + y^-1");
  CHECK(lp(f.to_string()) == f);
  CHECK(lp("y * y^-1") == lp("1"));
  CHECK(lp("x - x").is_zero());
  CHECK((lp("x + y") * lp("x - y")) == lp("x^2 - y^2"));
  CHECK(lp("3/2*y^-3").is_unit());
  CHECK(!lp("x").is_unit());
  CHECK(lp("x*y + x^2").divisible_by_x());
  CHECK(!lp("x + 1").divisible_by_x());
  CHECK_THROWS_AS(lp("x^-1"), InputError);
  CHECK_THROWS_AS(lp("z"), InputError);
  CHECK_THROWS_AS(lp("x +"), InputError);
  CHECK_THROWS_AS(LaurentPoly2::monomial(1, -1, 0), InputError);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto g = random_poly(rng, false, false);
    REQUIRE(lp(g.to_string()) == g);
  }
}

TEST_CASE("matrix literals", "[pi_matrix]") {
  auto a = parse_mat2("1; x; 1; x*y");
  CHECK(a.to_string() == "1; x; 1; x*y");
  CHECK(parse_mat2(a.to_string()) == a);
  CHECK(det(a) == lp("x*y - x"));
  CHECK_THROWS_AS(parse_mat2("1; x; 1"), InputError);
  CHECK_THROWS_AS(parse_mat2("1; x; 1; x; 2"), InputError);
  CHECK_THROWS_AS(parse_mat2("1; x; 1; q"), InputError);
}

TEST_CASE("membership in R", "[pi_matrix]") {
  CHECK(in_R(Mat2::diag(lp("1"), lp("y"))));
  CHECK(!in_R(Mat2::diag(lp("1"), lp("y^-1"))));
  CHECK(in_R(Mat2::identity()));
  CHECK(!in_R(parse_mat2("1; 1; 0; 1")));
  CHECK(in_R(parse_mat2("y^-5; x*y^-2; y^-1; 1 + y + x*y^-3")));

  CHECK(is_unit_in_R(Mat2::identity()));
  CHECK(is_unit_in_R(Mat2::diag(lp("y^-1"), lp("2"))));
  CHECK(!is_unit_in_R(Mat2::diag(lp("1"), lp("y"))));
  CHECK(!is_unit_in_R(Mat2::diag(lp("x"), lp("1"))));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element_of_R(rng), b = random_element_of_R(rng);
    REQUIRE(in_R(a));
    REQUIRE(in_R(b));
    REQUIRE(in_R(a + b));
    REQUIRE(in_R(a * b));
    REQUIRE(in_R(b * a));
  }
}

TEST_CASE("special form", "[pi_matrix]") {
  CHECK(is_special_form(parse_mat2("1; x; 1; x*y")));
  CHECK(!is_special_form(Mat2::identity()));
  CHECK(!is_special_form(parse_mat2("1; x; 1; x")));
  CHECK(!is_special_form(parse_mat2("0; 0; 0; 0")));
}

TEST_CASE("peel", "[pi_matrix]") {
  auto a = parse_mat2("1; x; 1; x*y");
  auto p = peel(a);
  CHECK(p.u == Mat2::diag(lp("1"), lp("y")));
  CHECK(p.rest == parse_mat2("1; x; y^-1; x"));
  CHECK(p.u * p.rest == a);
  CHECK(det(p.rest) == lp("y^-1") * det(a));
  CHECK(in_R(p.u));
  CHECK(!is_unit_in_R(p.u));
  CHECK_THROWS_AS(peel(Mat2::identity()), InputError);

  for (auto const& text : {"1; x; 1; x*y", "y; x*y^2; 3 + x; x^2 - x*y^-1",
                           "1/2 + x; x; y^-2; 5*x"}) {
    auto chain = peel_chain(parse_mat2(text), 25);
    REQUIRE(chain.size() == 25);
    for (auto const& step : chain) {
      REQUIRE(step.ok());
    }
  }
}
