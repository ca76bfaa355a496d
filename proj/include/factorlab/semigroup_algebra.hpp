#ifndef FACTORLAB_SEMIGROUP_ALGEBRA_HPP_
#define FACTORLAB_SEMIGROUP_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "factorlab/normal_form.hpp"
#include "factorlab/scalar.hpp"

namespace factorlab {

  struct ShortlexOrder {
    bool operator()(NormalFormS const& x, NormalFormS const& y) const {
      return shortlex_less(x, y);
    }
  };

  // An element of the semigroup algebra K[S]. Zero coefficients are never
  // stored; terms are kept in shortlex order of their supports.
  class AlgebraElement {
   public:
    using Terms = std::map<NormalFormS, Scalar, ShortlexOrder>;

    explicit AlgebraElement(Field field = Field::rationals()) : _field(field) {}

    static AlgebraElement monomial(Scalar const& c, NormalFormS s);
    static AlgebraElement monomial(Field field, NormalFormS s);
    static AlgebraElement constant(Scalar const& c);

    Field const& field() const noexcept {
      return _field;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    bool is_monomial() const noexcept {
      return _terms.size() == 1;
    }
    // Coefficient of s, zero if s is not in the support.
    Scalar coefficient(NormalFormS const& s) const;

    // Adds c * s in place.
    void add_term(NormalFormS const& s, Scalar const& c);

    // "3/2 * b^2 a^1 + -1 * e"; "0" for the zero element.
    std::string to_string() const;

    bool operator==(AlgebraElement const&) const = default;

   private:
    Field _field;
    Terms _terms;
  };

  // Both throw InputError if the fields differ.
  AlgebraElement alg_add(AlgebraElement const& f, AlgebraElement const& g);
  AlgebraElement alg_mul(AlgebraElement const& f, AlgebraElement const& g);
  AlgebraElement alg_neg(AlgebraElement const& f);
  AlgebraElement alg_scale(Scalar const& c, AlgebraElement const& f);

  // Maximal a-count over the support; nullopt stands for -infinity (f = 0).
  std::optional<std::int64_t> deg_a(AlgebraElement const& f);

  // Inverse of AlgebraElement::to_string. A term is "c * w", "w" or "c",
  // where w uses the word syntax of parse_word; words are normalized.
  AlgebraElement parse_algebra_element(Field field, std::string_view text);

  struct DivYes {
    AlgebraElement h;
  };
  struct DivNo {};
  struct DivUnknown {};
  using DivVerdict = std::variant<DivYes, DivNo, DivUnknown>;

  std::string to_string(DivVerdict const& v);  // "Yes(1 * b^1)", "No", "Unknown"

  // Searches for h with f h = g and supp(h) among the elements of canonical
  // length <= search_cap, by solving the linear system on that support.
  // Yes carries a verified h. No is returned only when deg_a rules out every
  // h; otherwise a failed search is Unknown. Throws InputError if f = 0 or
  // the fields differ, BudgetExceeded if the system has more than
  // entry_budget entries.
  DivVerdict divides_right(AlgebraElement const& f,
                           AlgebraElement const& g,
                           std::size_t           search_cap,
                           std::size_t           entry_budget = 16'000'000);

  // Exact answer for a monomial f = c s: f h = g forces h = c^-1 u with
  // s u = t, so g must be a monomial d t and u comes from left division in
  // S. Returns nullopt if f is not a monomial.
  std::optional<DivVerdict> divides_right_monomial(AlgebraElement const& f,
                                                   AlgebraElement const& g);

}  // namespace factorlab

#endif  // FACTORLAB_SEMIGROUP_ALGEBRA_HPP_
