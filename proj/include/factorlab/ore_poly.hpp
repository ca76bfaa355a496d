#ifndef FACTORLAB_ORE_POLY_HPP_
#define FACTORLAB_ORE_POLY_HPP_

// Skew polynomials S[x; sigma, delta] and skew Laurent polynomials
// S[x, x^-1; sigma] over S = K[y], written with coefficients on the right:
// f = sum x^i a_i.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "factorlab/scalar.hpp"

namespace factorlab {

  // A polynomial in y over a field. Coefficients are stored by degree with
  // no trailing zeros, so the zero polynomial has no coefficients.
  class BasePoly {
   public:
    explicit BasePoly(Field field = Field::rationals()) : _field(field) {}
    BasePoly(Field field, std::vector<Scalar> coefficients);

    static BasePoly constant(Scalar const& c);
    // c y^k
    static BasePoly monomial(Scalar const& c, std::size_t k);
    static BasePoly y(Field field) {
      return monomial(Scalar::one(field), 1);
    }

    Field const& field() const noexcept {
      return _field;
    }
    std::vector<Scalar> const& coefficients() const noexcept {
      return _coefficients;
    }
    bool is_zero() const noexcept {
      return _coefficients.empty();
    }
    // nullopt stands for -infinity
    std::optional<std::int64_t> degree() const noexcept;
    // The units of K[y] are the nonzero constants.
    bool is_unit() const noexcept {
      return _coefficients.size() == 1;
    }
    Scalar coefficient(std::size_t k) const;
    Scalar leading_coefficient() const;

    // "y^2 - 3/2*y + 1", "0"
    std::string to_string() const;

    bool operator==(BasePoly const&) const = default;

   private:
    void trim();

    Field               _field;
    std::vector<Scalar> _coefficients;
  };

  BasePoly operator+(BasePoly const& f, BasePoly const& g);
  BasePoly operator-(BasePoly const& f, BasePoly const& g);
  BasePoly operator*(BasePoly const& f, BasePoly const& g);
  BasePoly operator*(Scalar const& c, BasePoly const& f);
  BasePoly derivative(BasePoly const& f);

  // Inverse of BasePoly::to_string; terms are "c", "c*y^k", "y^k", "c y".
  BasePoly parse_base_poly(Field field, std::string_view text);

  // sigma is the identity, y -> y + 1, or y -> q y; delta is 0 or d/dy, and
  // d/dy requires sigma to be the identity. Equality compares descriptors.
  struct SigmaDelta {
    enum class Sigma { identity, shift, scale };
    enum class Delta { zero, derivative };

    Field  field = Field::rationals();
    Sigma  sigma = Sigma::identity;
    Scalar q = Scalar::one(Field::rationals());  // used by scale only
    Delta  delta = Delta::zero;

    static SigmaDelta weyl(Field field = Field::rationals());
    static SigmaDelta quantum(Scalar q);
    static SigmaDelta shift(Field field = Field::rationals());

    // Throws InputError for d/dy with a nontrivial sigma or for q = 0.
    void validate() const;

    // sigma^k for any integer k; sigma is an automorphism in every case.
    BasePoly apply_sigma(BasePoly const& f, std::int64_t k = 1) const;
    BasePoly apply_delta(BasePoly const& f) const;

    std::string to_string() const;

    bool operator==(SigmaDelta const& that) const;
  };

  // Configurations accepted on the command line.
  struct OreConfig {
    enum class Kind { polynomial, laurent };
    std::string name;  // "weyl", "qplane:q=2", ...
    Kind        kind = Kind::polynomial;
    SigmaDelta  sd;
  };

  // "weyl", "qplane:q=Q", "qtorus:q=Q", "shift"; Q is a nonzero rational.
  OreConfig parse_ore_config(std::string_view text);

  class OrePoly {
   public:
    explicit OrePoly(SigmaDelta sd) : _sd(std::move(sd)) {}
    OrePoly(SigmaDelta sd, std::vector<BasePoly> coefficients);

    static OrePoly constant(SigmaDelta sd, BasePoly a);
    // x^k a
    static OrePoly monomial(SigmaDelta sd, std::size_t k, BasePoly a);

    SigmaDelta const& sigma_delta() const noexcept {
      return _sd;
    }
    // a_i with f = sum x^i a_i
    std::vector<BasePoly> const& coefficients() const noexcept {
      return _coefficients;
    }
    bool is_zero() const noexcept {
      return _coefficients.empty();
    }
    std::optional<std::int64_t> degree() const noexcept;
    // a_n; throws InputError for f = 0
    BasePoly const& leading_coefficient() const;
    // Units are the nonzero constants of K.
    bool is_unit() const noexcept {
      return _coefficients.size() == 1 && _coefficients[0].is_unit();
    }

    // "x^2*(y + 1) + x*(3) + (1/2)", "0"
    std::string to_string() const;

    bool operator==(OrePoly const&) const = default;

   private:
    void trim();

    SigmaDelta            _sd;
    std::vector<BasePoly> _coefficients;
  };

  // All throw InputError when the descriptors differ.
  OrePoly ore_add(OrePoly const& f, OrePoly const& g);
  OrePoly ore_sub(OrePoly const& f, OrePoly const& g);
  OrePoly ore_mul(OrePoly const& f, OrePoly const& g);

  // deg_x(f) + deg_y(a_n); throws InputError for f = 0.
  std::int64_t lambda_skew(OrePoly const& f);
  // max_i (i + deg_y a_i), the Bernstein filtration degree. Throws
  // InputError for f = 0 or when f does not live in the Weyl algebra.
  std::int64_t lambda_filtration(OrePoly const& f);

  // Parses "x^2*(y+1) + x*(3) + (1/2)": top-level terms "x^k*(p)", "x*(p)",
  // "x^k", "x" or "(p)" with p in the syntax of parse_base_poly.
  OrePoly parse_ore_poly(SigmaDelta const& sd, std::string_view text);

  class LaurentOrePoly {
   public:
    // sigma must be an automorphism and delta must be zero.
    explicit LaurentOrePoly(SigmaDelta sd);
    LaurentOrePoly(SigmaDelta sd, std::map<std::int64_t, BasePoly> coefficients);

    // x^k a
    static LaurentOrePoly monomial(SigmaDelta sd, std::int64_t k, BasePoly a);

    SigmaDelta const& sigma_delta() const noexcept {
      return _sd;
    }
    std::map<std::int64_t, BasePoly> const& coefficients() const noexcept {
      return _coefficients;
    }
    bool is_zero() const noexcept {
      return _coefficients.empty();
    }
    // Units are x^k c with c a nonzero constant.
    bool is_unit() const noexcept {
      return _coefficients.size() == 1 && _coefficients.begin()->second.is_unit();
    }
    // Lowest and highest exponents m <= n; throw InputError for f = 0.
    std::int64_t low_degree() const;
    std::int64_t high_degree() const;

    std::string to_string() const;

    bool operator==(LaurentOrePoly const&) const = default;

   private:
    SigmaDelta                        _sd;
    std::map<std::int64_t, BasePoly> _coefficients;
  };

  LaurentOrePoly laurent_add(LaurentOrePoly const& f, LaurentOrePoly const& g);
  LaurentOrePoly laurent_mul(LaurentOrePoly const& f, LaurentOrePoly const& g);
  // (n - m) + deg_y(a_m); throws InputError for f = 0.
  std::int64_t lambda_laurent(LaurentOrePoly const& f);
  // Same term syntax as parse_ore_poly with integer exponents "x^-2*(y)".
  LaurentOrePoly parse_laurent_ore_poly(SigmaDelta const& sd, std::string_view text);

  // Random elements with small integer coefficients, driven only by raw
  // draws from the engine so that a seed fixes them on every platform.
  BasePoly       random_base_poly(Field field, std::mt19937_64& rng, std::size_t max_degree);
  OrePoly        random_ore_poly(SigmaDelta const& sd,
                                 std::mt19937_64&  rng,
                                 std::size_t       max_x_degree,
                                 std::size_t       max_y_degree);
  LaurentOrePoly random_laurent_ore_poly(SigmaDelta const& sd,
                                         std::mt19937_64&  rng,
                                         std::int64_t      max_abs_exponent,
                                         std::size_t       max_y_degree);

  struct SkewCheckReport {
    std::string config;
    std::size_t samples = 0;
    // lambda(g h) > lambda(g) for nonunit h
    std::size_t right_violations = 0;
    // a_n = sigma^l(b_k) c_l (polynomial) or the lowest-term analogue
    // (Laurent)
    std::size_t lead_violations = 0;
    // k <= lambda(g_1 ... g_k) for products of k nonunits
    std::size_t bf_violations = 0;
    std::vector<std::string> failures;  // first few, for display

    bool ok() const noexcept {
      return right_violations == 0 && lead_violations == 0 && bf_violations == 0;
    }
    nlohmann::json to_json() const;
  };

  // Draws `samples` pairs (g, h) with h a nonunit from the seed and checks
  // the right length law, the leading-coefficient law and the length bound
  // on short products. Samples are drawn sequentially and evaluated on up
  // to `threads` workers; the report does not depend on `threads`.
  SkewCheckReport skew_check(OreConfig const& config,
                             std::size_t      samples,
                             std::uint64_t    seed,
                             std::size_t      threads = 1);

  struct FiltrationCheckReport {
    std::size_t              samples = 0;
    std::size_t              violations = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return violations == 0;
    }
    nlohmann::json to_json() const;
  };

  // lambda_filtration(f g) == lambda_filtration(f) + lambda_filtration(g) on
  // random nonzero Weyl algebra pairs.
  FiltrationCheckReport filtration_check(std::size_t samples, std::uint64_t seed);

}  // namespace factorlab

#endif  // FACTORLAB_ORE_POLY_HPP_
