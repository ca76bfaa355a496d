#ifndef FACTORLAB_SCALAR_HPP_
#define FACTORLAB_SCALAR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace factorlab {

  // Either the rationals or a prime field F_p with p < 2^31.
  class Field {
   public:
    static Field rationals() {
      return Field(0);
    }
    // Throws InputError unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    bool is_rational() const noexcept {
      return _p == 0;
    }
    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    std::string to_string() const;  // "Q" or "F_7"

    bool operator==(Field const&) const = default;

   private:
    explicit Field(std::uint32_t p) : _p(p) {}
    std::uint32_t _p;
  };

  // Parses "Q", "F_7" or "F7".
  Field parse_field(std::string_view text);

  // An element of a Field. Arithmetic between scalars of different fields
  // throws InputError.
  class Scalar {
   public:
    Scalar() : Scalar(Field::rationals(), 0) {}
    Scalar(Field field, std::int64_t value);
    Scalar(Field field, mpq_class const& value);

    static Scalar zero(Field f) {
      return Scalar(f, 0);
    }
    static Scalar one(Field f) {
      return Scalar(f, 1);
    }

    Field const& field() const noexcept {
      return _field;
    }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Rational value; only valid over Q.
    mpq_class const& rational() const;
    // Residue in [0, p); only valid over F_p.
    std::uint32_t residue() const;

    Scalar inverse() const;
    Scalar operator-() const;

    friend Scalar operator+(Scalar const& x, Scalar const& y);
    friend Scalar operator-(Scalar const& x, Scalar const& y);
    friend Scalar operator*(Scalar const& x, Scalar const& y);
    friend Scalar operator/(Scalar const& x, Scalar const& y);
    Scalar& operator+=(Scalar const& y) {
      return *this = *this + y;
    }
    Scalar& operator-=(Scalar const& y) {
      return *this = *this - y;
    }
    Scalar& operator*=(Scalar const& y) {
      return *this = *this * y;
    }

    bool operator==(Scalar const& that) const;
    bool operator!=(Scalar const& that) const {
      return !(*this == that);
    }

    // "3/2", "-1", "5" (residues are printed in [0, p)).
    std::string to_string() const;

   private:
    Field                                   _field;
    std::variant<mpq_class, std::uint32_t> _value;
  };

  // Parses an integer or fraction "a/b" into the given field.
  Scalar parse_scalar(Field field, std::string_view text);

  // x^e for e >= 0.
  Scalar power(Scalar const& x, std::int64_t e);

}  // namespace factorlab

#endif  // FACTORLAB_SCALAR_HPP_
