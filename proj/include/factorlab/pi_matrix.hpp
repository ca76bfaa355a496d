#ifndef FACTORLAB_PI_MATRIX_HPP_
#define FACTORLAB_PI_MATRIX_HPP_

// The ring R = ( S  xS ; S  Q[y] + xS ) inside M_2(S), S = Q[x, y, y^-1],
// and the peeling A = diag(1, y) A' of special-form matrices.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace factorlab {

  // An element of Q[x, y, y^-1]: exponents (i, j) with i >= 0 mapped to
  // nonzero rational coefficients.
  class LaurentPoly2 {
   public:
    using Exponent = std::pair<std::int64_t, std::int64_t>;

    LaurentPoly2() = default;
    // c x^i y^j; throws InputError for i < 0
    static LaurentPoly2 monomial(mpq_class const& c, std::int64_t i, std::int64_t j);
    static LaurentPoly2 constant(mpq_class const& c) {
      return monomial(c, 0, 0);
    }
    static LaurentPoly2 x() {
      return monomial(1, 1, 0);
    }
    static LaurentPoly2 y(std::int64_t j = 1) {
      return monomial(1, 0, j);
    }

    std::map<Exponent, mpq_class> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    // Every term has positive x-degree.
    bool divisible_by_x() const noexcept;
    // Units of S are c y^j.
    bool is_unit() const noexcept;

    void add_term(Exponent e, mpq_class const& c);

    // "x*y - 2*x + y^-1", "0"
    std::string to_string() const;

    bool operator==(LaurentPoly2 const&) const = default;

   private:
    std::map<Exponent, mpq_class> _terms;
  };

  LaurentPoly2 operator+(LaurentPoly2 const& f, LaurentPoly2 const& g);
  LaurentPoly2 operator-(LaurentPoly2 const& f, LaurentPoly2 const& g);
  LaurentPoly2 operator*(LaurentPoly2 const& f, LaurentPoly2 const& g);

  // Terms joined by + and -; a term is a product of a rational, x^i and y^j
  // factors joined by '*', e.g. "3/2*x^2*y^-1".
  LaurentPoly2 parse_laurent_poly2(std::string_view text);

  struct Mat2 {
    // row-major: (0, 0), (0, 1), (1, 0), (1, 1)
    std::array<LaurentPoly2, 4> e;

    LaurentPoly2 const& operator()(int r, int c) const {
      return e[2 * r + c];
    }

    static Mat2 identity();
    static Mat2 diag(LaurentPoly2 const& a, LaurentPoly2 const& d);

    // "a; b; c; d"
    std::string to_string() const;

    bool operator==(Mat2 const&) const = default;
  };

  Mat2 operator*(Mat2 const& a, Mat2 const& b);
  Mat2 operator+(Mat2 const& a, Mat2 const& b);
  LaurentPoly2 det(Mat2 const& a);

  // Four semicolon-separated entries in row-major order.
  Mat2 parse_mat2(std::string_view text);

  // Entry (0, 1) in xS; entry (1, 1) in Q[y] + xS.
  bool in_R(Mat2 const& a);
  // A has an inverse in M_2(S) that lies in R.
  bool is_unit_in_R(Mat2 const& a);
  // A = (a, xb; c, xd) with det(A) != 0.
  bool is_special_form(Mat2 const& a);

  struct Peel {
    Mat2 u;     // diag(1, y)
    Mat2 rest;  // A' with A = u rest
  };

  // Throws InputError unless is_special_form(a).
  Peel peel(Mat2 const& a);

  struct PeelStep {
    Mat2 before;
    Mat2 after;
    bool product_ok = false;     // u * after == before
    bool u_in_r = false;
    bool u_nonunit = false;      // diag(1, y^-1) is not in R
    bool after_in_r = false;
    bool after_special = false;  // includes det(after) != 0
    bool power_ok = false;       // A = U^k A_k for the chain's start

    bool ok() const noexcept {
      return product_ok && u_in_r && u_nonunit && after_in_r && after_special && power_ok;
    }
  };

  // Peels `steps` times starting from a, recording every check.
  std::vector<PeelStep> peel_chain(Mat2 const& a, std::size_t steps);

}  // namespace factorlab

#endif  // FACTORLAB_PI_MATRIX_HPP_
