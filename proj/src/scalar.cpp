#include "factorlab/scalar.hpp"

#include <charconv>

#include "factorlab/error.hpp"

namespace factorlab {

  namespace {
    bool is_prime(std::uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
      auto r = v % static_cast<std::int64_t>(p);
      return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
      std::uint64_t result = 1;
      base %= p;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>(result);
    }

    void same_field(Scalar const& x, Scalar const& y) {
      if (!(x.field() == y.field())) {
        throw InputError("field mismatch: " + x.field().to_string() + " vs "
                         + y.field().to_string());
      }
    }
  }  // namespace

  Field Field::prime(std::uint32_t p) {
    if (p >= (std::uint32_t(1) << 31) || !is_prime(p)) {
      throw InputError(std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(p);
  }

  std::string Field::to_string() const {
    return is_rational() ? "Q" : "F_" + std::to_string(_p);
  }

  Field parse_field(std::string_view text) {
    if (text == "Q") {
      return Field::rationals();
    }
    if (!text.empty() && text.front() == 'F') {
      auto digits = text.substr(text.size() > 1 && text[1] == '_' ? 2 : 1);
      std::uint32_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) {
        return Field::prime(p);
      }
    }
    throw InputError("unknown field '" + std::string(text)
                     + "' (expected Q or F_p)");
  }

  Scalar::Scalar(Field field, std::int64_t value) : _field(field) {
    if (_field.is_rational()) {
      _value = mpq_class(static_cast<long>(value));
    } else {
      _value = reduce(value, _field.characteristic());
    }
  }

  Scalar::Scalar(Field field, mpq_class const& value) : _field(field) {
    if (_field.is_rational()) {
      _value = value;
      std::get<mpq_class>(_value).canonicalize();
      return;
    }
    auto const    p = _field.characteristic();
    mpz_class     num = value.get_num() % p;
    mpz_class     den = value.get_den() % p;
    if (den == 0) {
      throw InputError("denominator vanishes in " + _field.to_string());
    }
    auto n = reduce(num.get_si(), p);
    auto d = reduce(den.get_si(), p);
    _value = static_cast<std::uint32_t>(
        std::uint64_t(n) * mod_pow(d, p - 2, p) % p);
  }

  bool Scalar::is_zero() const noexcept {
    if (auto const* q = std::get_if<mpq_class>(&_value)) {
      return sgn(*q) == 0;
    }
    return std::get<std::uint32_t>(_value) == 0;
  }

  bool Scalar::is_one() const noexcept {
    if (auto const* q = std::get_if<mpq_class>(&_value)) {
      return *q == 1;
    }
    return std::get<std::uint32_t>(_value) == 1;
  }

  mpq_class const& Scalar::rational() const {
    if (auto const* q = std::get_if<mpq_class>(&_value)) {
      return *q;
    }
    throw InputError("scalar is not rational");
  }

  std::uint32_t Scalar::residue() const {
    if (auto const* r = std::get_if<std::uint32_t>(&_value)) {
      return *r;
    }
    throw InputError("scalar is not a residue");
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw InputError("division by zero");
    }
    if (_field.is_rational()) {
      return Scalar(_field, mpq_class(1) / rational());
    }
    auto p = _field.characteristic();
    Scalar r(_field, 0);
    r._value = mod_pow(residue(), p - 2, p);
    return r;
  }

  Scalar Scalar::operator-() const {
    return Scalar(_field, 0) - *this;
  }

  Scalar operator+(Scalar const& x, Scalar const& y) {
    same_field(x, y);
    Scalar r = x;
    if (x._field.is_rational()) {
      r._value = mpq_class(x.rational() + y.rational());
    } else {
      auto p = x._field.characteristic();
      r._value = static_cast<std::uint32_t>(
          (std::uint64_t(x.residue()) + y.residue()) % p);
    }
    return r;
  }

  Scalar operator-(Scalar const& x, Scalar const& y) {
    same_field(x, y);
    Scalar r = x;
    if (x._field.is_rational()) {
      r._value = mpq_class(x.rational() - y.rational());
    } else {
      auto p = x._field.characteristic();
      r._value = static_cast<std::uint32_t>(
          (std::uint64_t(x.residue()) + p - y.residue()) % p);
    }
    return r;
  }

  Scalar operator*(Scalar const& x, Scalar const& y) {
    same_field(x, y);
    Scalar r = x;
    if (x._field.is_rational()) {
      r._value = mpq_class(x.rational() * y.rational());
    } else {
      auto p = x._field.characteristic();
      r._value = static_cast<std::uint32_t>(
          std::uint64_t(x.residue()) * y.residue() % p);
    }
    return r;
  }

  Scalar operator/(Scalar const& x, Scalar const& y) {
    same_field(x, y);
    return x * y.inverse();
  }

  bool Scalar::operator==(Scalar const& that) const {
    return _field == that._field && _value == that._value;
  }

  std::string Scalar::to_string() const {
    if (_field.is_rational()) {
      return rational().get_str();
    }
    return std::to_string(residue());
  }

  Scalar parse_scalar(Field field, std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') {
      s.erase(0, 1);
    }
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || s.find_first_of(" \t") != std::string::npos) {
      throw InputError("bad scalar literal '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    return Scalar(field, q);
  }

  Scalar power(Scalar const& x, std::int64_t e) {
    if (e < 0) {
      throw InputError("negative exponent");
    }
    Scalar result = Scalar::one(x.field());
    Scalar base = x;
    while (e > 0) {
      if (e & 1) {
        result *= base;
      }
      base *= base;
      e >>= 1;
    }
    return result;
  }

}  // namespace factorlab
