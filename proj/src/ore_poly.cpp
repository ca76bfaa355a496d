#include "factorlab/ore_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <thread>

#include "factorlab/error.hpp"

namespace factorlab {

  ////////////////////////////////////////////////////////////////////////
  // BasePoly
  ////////////////////////////////////////////////////////////////////////

  BasePoly::BasePoly(Field field, std::vector<Scalar> coefficients)
      : _field(field), _coefficients(std::move(coefficients)) {
    for (auto const& c : _coefficients) {
      if (!(c.field() == _field)) {
        throw InputError("field mismatch in polynomial coefficients");
      }
    }
    trim();
  }

  BasePoly BasePoly::constant(Scalar const& c) {
    return BasePoly(c.field(), {c});
  }

  BasePoly BasePoly::monomial(Scalar const& c, std::size_t k) {
    std::vector<Scalar> coefficients(k + 1, Scalar::zero(c.field()));
    coefficients[k] = c;
    return BasePoly(c.field(), std::move(coefficients));
  }

  void BasePoly::trim() {
    while (!_coefficients.empty() && _coefficients.back().is_zero()) {
      _coefficients.pop_back();
    }
  }

  std::optional<std::int64_t> BasePoly::degree() const noexcept {
    if (_coefficients.empty()) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(_coefficients.size()) - 1;
  }

  Scalar BasePoly::coefficient(std::size_t k) const {
    return k < _coefficients.size() ? _coefficients[k] : Scalar::zero(_field);
  }

  Scalar BasePoly::leading_coefficient() const {
    if (is_zero()) {
      throw InputError("the zero polynomial has no leading coefficient");
    }
    return _coefficients.back();
  }

  std::string BasePoly::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string result;
    for (auto k = _coefficients.size(); k-- > 0;) {
      auto const& c = _coefficients[k];
      if (c.is_zero()) {
        continue;
      }
      std::string term;
      auto        text = c.to_string();
      bool const  negative = text.front() == '-';
      auto        magnitude = negative ? text.substr(1) : text;
      if (k == 0) {
        term = magnitude;
      } else {
        auto power = k == 1 ? std::string("y") : "y^" + std::to_string(k);
        term = magnitude == "1" ? power : magnitude + "*" + power;
      }
      if (result.empty()) {
        result = negative ? "-" + term : term;
      } else {
        result += (negative ? " - " : " + ") + term;
      }
    }
    return result;
  }

  namespace {
    void same_field(BasePoly const& f, BasePoly const& g) {
      if (!(f.field() == g.field())) {
        throw InputError("field mismatch: " + f.field().to_string() + " vs "
                         + g.field().to_string());
      }
    }
  }  // namespace

  BasePoly operator+(BasePoly const& f, BasePoly const& g) {
    same_field(f, g);
    auto const n = std::max(f.coefficients().size(), g.coefficients().size());
    std::vector<Scalar> result;
    result.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      result.push_back(f.coefficient(k) + g.coefficient(k));
    }
    return BasePoly(f.field(), std::move(result));
  }

  BasePoly operator-(BasePoly const& f, BasePoly const& g) {
    return f + (-Scalar::one(g.field())) * g;
  }

  BasePoly operator*(BasePoly const& f, BasePoly const& g) {
    same_field(f, g);
    if (f.is_zero() || g.is_zero()) {
      return BasePoly(f.field());
    }
    auto const& a = f.coefficients();
    auto const& b = g.coefficients();
    std::vector<Scalar> result(a.size() + b.size() - 1, Scalar::zero(f.field()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        result[i + j] += a[i] * b[j];
      }
    }
    return BasePoly(f.field(), std::move(result));
  }

  BasePoly operator*(Scalar const& c, BasePoly const& f) {
    if (!(c.field() == f.field())) {
      throw InputError("field mismatch in scalar multiple");
    }
    std::vector<Scalar> result;
    result.reserve(f.coefficients().size());
    for (auto const& x : f.coefficients()) {
      result.push_back(c * x);
    }
    return BasePoly(f.field(), std::move(result));
  }

  BasePoly derivative(BasePoly const& f) {
    std::vector<Scalar> result;
    auto const&         a = f.coefficients();
    for (std::size_t k = 1; k < a.size(); ++k) {
      result.push_back(Scalar(f.field(), static_cast<std::int64_t>(k)) * a[k]);
    }
    return BasePoly(f.field(), std::move(result));
  }

  namespace {
    class Scanner {
     public:
      explicit Scanner(std::string_view text, std::size_t offset = 0)
          : _text(text), _offset(offset) {}

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      bool at_end() {
        skip_space();
        return _pos == _text.size();
      }
      char peek() {
        skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      bool accept(char c) {
        if (peek() == c) {
          ++_pos;
          return true;
        }
        return false;
      }
      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }
      // digits, optionally followed by "/digits"
      std::optional<std::string> number() {
        skip_space();
        auto start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (_pos == start) {
          return std::nullopt;
        }
        if (_pos < _text.size() && _text[_pos] == '/') {
          ++_pos;
          auto den = _pos;
          while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            ++_pos;
          }
          if (_pos == den) {
            fail("expected a denominator");
          }
        }
        return std::string(_text.substr(start, _pos - start));
      }
      std::int64_t integer() {
        skip_space();
        bool negative = false;
        if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
          negative = _text[_pos] == '-';
          ++_pos;
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
        if (ec != std::errc() || value < 0) {
          fail("expected an integer exponent");
        }
        _pos = ptr - _text.data();
        return negative ? -value : value;
      }
      std::size_t position() const noexcept {
        return _pos;
      }
      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("column " + std::to_string(_offset + _pos + 1) + ": " + what);
      }

     private:
      std::string_view _text;
      std::size_t      _offset;
      std::size_t      _pos = 0;
    };

    BasePoly parse_base(Field field, Scanner& in) {
      BasePoly result(field);
      bool     first = true;
      while (true) {
        int sign = 1;
        if (in.accept('-')) {
          sign = -1;
        } else if (!in.accept('+') && !first) {
          break;
        }
        first = false;
        auto   num = in.number();
        Scalar c = num ? parse_scalar(field, *num) : Scalar::one(field);
        if (sign < 0) {
          c = -c;
        }
        std::size_t power = 0;
        bool        has_y = false;
        if (num && in.peek() == '*') {
          in.expect('*');
          if (in.peek() != 'y') {
            in.fail("expected 'y' after '*'");
          }
        }
        if (in.accept('y')) {
          has_y = true;
          power = 1;
          if (in.accept('^')) {
            auto k = in.integer();
            if (k < 0) {
              in.fail("negative power of y");
            }
            power = static_cast<std::size_t>(k);
          }
        }
        if (!num && !has_y) {
          in.fail("expected a coefficient or 'y'");
        }
        result = result + BasePoly::monomial(c, power);
      }
      return result;
    }
  }  // namespace

  BasePoly parse_base_poly(Field field, std::string_view text) {
    Scanner in(text);
    auto    result = parse_base(field, in);
    if (!in.at_end()) {
      in.fail("unexpected character");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // SigmaDelta
  ////////////////////////////////////////////////////////////////////////

  SigmaDelta SigmaDelta::weyl(Field field) {
    return {field, Sigma::identity, Scalar::one(field), Delta::derivative};
  }

  SigmaDelta SigmaDelta::quantum(Scalar q) {
    SigmaDelta sd{q.field(), Sigma::scale, q, Delta::zero};
    sd.validate();
    return sd;
  }

  SigmaDelta SigmaDelta::shift(Field field) {
    return {field, Sigma::shift, Scalar::one(field), Delta::zero};
  }

  void SigmaDelta::validate() const {
    if (delta == Delta::derivative && sigma != Sigma::identity) {
      throw InputError("d/dy is a sigma-derivation only for sigma = id");
    }
    if (sigma == Sigma::scale && (q.is_zero() || !(q.field() == field))) {
      throw InputError("scale factor must be a nonzero element of " + field.to_string());
    }
  }

  BasePoly SigmaDelta::apply_sigma(BasePoly const& f, std::int64_t k) const {
    switch (sigma) {
      case Sigma::identity:
        return f;
      case Sigma::shift: {
        // Horner in y + k
        auto const step = BasePoly(field, {Scalar(field, k), Scalar::one(field)});
        BasePoly   result(field);
        for (auto i = f.coefficients().size(); i-- > 0;) {
          result = result * step + BasePoly::constant(f.coefficients()[i]);
        }
        return result;
      }
      case Sigma::scale: {
        auto const  base = k >= 0 ? power(q, k) : power(q.inverse(), -k);
        auto        factor = Scalar::one(field);
        std::vector<Scalar> result;
        for (auto const& c : f.coefficients()) {
          result.push_back(c * factor);
          factor *= base;
        }
        return BasePoly(field, std::move(result));
      }
    }
    throw InternalError("unknown sigma");
  }

  BasePoly SigmaDelta::apply_delta(BasePoly const& f) const {
    return delta == Delta::derivative ? derivative(f) : BasePoly(field);
  }

  std::string SigmaDelta::to_string() const {
    std::string s;
    switch (sigma) {
      case Sigma::identity:
        s = "sigma=id";
        break;
      case Sigma::shift:
        s = "sigma=(y->y+1)";
        break;
      case Sigma::scale:
        s = "sigma=(y->" + q.to_string() + "y)";
        break;
    }
    return s + (delta == Delta::derivative ? ", delta=d/dy" : ", delta=0") + " over "
           + field.to_string();
  }

  bool SigmaDelta::operator==(SigmaDelta const& that) const {
    return field == that.field && sigma == that.sigma && delta == that.delta
           && (sigma != Sigma::scale || q == that.q);
  }

  OreConfig parse_ore_config(std::string_view text) {
    auto const field = Field::rationals();
    if (text == "weyl") {
      return {std::string(text), OreConfig::Kind::polynomial, SigmaDelta::weyl(field)};
    }
    if (text == "shift") {
      return {std::string(text), OreConfig::Kind::polynomial, SigmaDelta::shift(field)};
    }
    for (auto [prefix, kind] : {std::pair{std::string_view("qplane"), OreConfig::Kind::polynomial},
                                std::pair{std::string_view("qtorus"), OreConfig::Kind::laurent}}) {
      if (text == prefix) {
        return {std::string(prefix) + ":q=2", kind, SigmaDelta::quantum(Scalar(field, 2))};
      }
      auto const head = std::string(prefix) + ":q=";
      if (text.substr(0, head.size()) == head) {
        auto q = parse_scalar(field, text.substr(head.size()));
        if (q.is_zero()) {
          throw InputError("q must be nonzero");
        }
        return {std::string(text), kind, SigmaDelta::quantum(q)};
      }
    }
    throw InputError("unknown configuration '" + std::string(text)
                     + "' (expected weyl, shift, qplane:q=Q or qtorus:q=Q)");
  }

  ////////////////////////////////////////////////////////////////////////
  // OrePoly
  ////////////////////////////////////////////////////////////////////////

  OrePoly::OrePoly(SigmaDelta sd, std::vector<BasePoly> coefficients)
      : _sd(std::move(sd)), _coefficients(std::move(coefficients)) {
    _sd.validate();
    for (auto const& a : _coefficients) {
      if (!(a.field() == _sd.field)) {
        throw InputError("field mismatch in skew polynomial coefficients");
      }
    }
    trim();
  }

  OrePoly OrePoly::constant(SigmaDelta sd, BasePoly a) {
    return monomial(std::move(sd), 0, std::move(a));
  }

  OrePoly OrePoly::monomial(SigmaDelta sd, std::size_t k, BasePoly a) {
    std::vector<BasePoly> coefficients(k + 1, BasePoly(sd.field));
    coefficients[k] = std::move(a);
    return OrePoly(std::move(sd), std::move(coefficients));
  }

  void OrePoly::trim() {
    while (!_coefficients.empty() && _coefficients.back().is_zero()) {
      _coefficients.pop_back();
    }
  }

  std::optional<std::int64_t> OrePoly::degree() const noexcept {
    if (_coefficients.empty()) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(_coefficients.size()) - 1;
  }

  BasePoly const& OrePoly::leading_coefficient() const {
    if (is_zero()) {
      throw InputError("the zero polynomial has no leading coefficient");
    }
    return _coefficients.back();
  }

  namespace {
    std::string x_power(std::int64_t k) {
      return k == 1 ? "x" : "x^" + std::to_string(k);
    }

    std::string term_string(std::int64_t k, BasePoly const& a) {
      auto base = "(" + a.to_string() + ")";
      return k == 0 ? base : x_power(k) + "*" + base;
    }

    void same_sd(SigmaDelta const& x, SigmaDelta const& y) {
      if (!(x == y)) {
        throw InputError("descriptor mismatch: " + x.to_string() + " vs " + y.to_string());
      }
    }

    // p x = sum x^{k+1} sigma(p_k) + x^k delta(p_k)
    std::vector<BasePoly> times_x(SigmaDelta const& sd, std::vector<BasePoly> const& p) {
      std::vector<BasePoly> result(p.size() + 1, BasePoly(sd.field));
      for (std::size_t k = 0; k < p.size(); ++k) {
        result[k + 1] = result[k + 1] + sd.apply_sigma(p[k]);
        if (sd.delta != SigmaDelta::Delta::zero) {
          result[k] = result[k] + sd.apply_delta(p[k]);
        }
      }
      return result;
    }

    // Splits at '+' outside parentheses, reporting the offset of each piece.
    std::vector<std::pair<std::size_t, std::string_view>> split_terms(std::string_view text) {
      std::vector<std::pair<std::size_t, std::string_view>> result;
      int         depth = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == '+' && depth == 0)) {
          result.emplace_back(start, text.substr(start, i - start));
          start = i + 1;
        } else if (text[i] == '(') {
          ++depth;
        } else if (text[i] == ')') {
          if (--depth < 0) {
            throw InputError("column " + std::to_string(i + 1) + ": unbalanced ')'");
          }
        }
      }
      if (depth != 0) {
        throw InputError("unbalanced '('");
      }
      return result;
    }

    // One top-level term: returns the x-exponent and the base coefficient.
    std::pair<std::int64_t, BasePoly> parse_term(Field            field,
                                                 std::string_view term,
                                                 std::size_t      offset,
                                                 bool             allow_negative) {
      Scanner      in(term, offset);
      std::int64_t k = 0;
      BasePoly     a = BasePoly::constant(Scalar::one(field));
      if (in.at_end()) {
        in.fail("empty term");
      }
      if (in.accept('x')) {
        k = 1;
        if (in.accept('^')) {
          k = in.integer();
          if (k < 0 && !allow_negative) {
            in.fail("negative power of x");
          }
        }
        if (in.accept('*')) {
          in.expect('(');
          a = parse_base(field, in);
          in.expect(')');
        }
      } else if (in.accept('(')) {
        a = parse_base(field, in);
        in.expect(')');
      } else {
        in.fail("expected 'x' or '('");
      }
      if (!in.at_end()) {
        in.fail("unexpected character");
      }
      return {k, a};
    }
  }  // namespace

  std::string OrePoly::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string result;
    for (auto k = _coefficients.size(); k-- > 0;) {
      if (_coefficients[k].is_zero()) {
        continue;
      }
      if (!result.empty()) {
        result += " + ";
      }
      result += term_string(static_cast<std::int64_t>(k), _coefficients[k]);
    }
    return result;
  }

  OrePoly ore_add(OrePoly const& f, OrePoly const& g) {
    same_sd(f.sigma_delta(), g.sigma_delta());
    auto const& a = f.coefficients();
    auto const& b = g.coefficients();
    std::vector<BasePoly> result(std::max(a.size(), b.size()), BasePoly(f.sigma_delta().field));
    for (std::size_t k = 0; k < result.size(); ++k) {
      if (k < a.size()) {
        result[k] = result[k] + a[k];
      }
      if (k < b.size()) {
        result[k] = result[k] + b[k];
      }
    }
    return OrePoly(f.sigma_delta(), std::move(result));
  }

  OrePoly ore_sub(OrePoly const& f, OrePoly const& g) {
    auto const minus_one = -Scalar::one(g.sigma_delta().field);
    std::vector<BasePoly> negated;
    for (auto const& b : g.coefficients()) {
      negated.push_back(minus_one * b);
    }
    return ore_add(f, OrePoly(g.sigma_delta(), std::move(negated)));
  }

  OrePoly ore_mul(OrePoly const& f, OrePoly const& g) {
    same_sd(f.sigma_delta(), g.sigma_delta());
    auto const& sd = f.sigma_delta();
    if (f.is_zero() || g.is_zero()) {
      return OrePoly(sd);
    }
    auto const& a = f.coefficients();
    auto const& b = g.coefficients();
    std::vector<BasePoly> result(a.size() + b.size() - 1, BasePoly(sd.field));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) {
        continue;
      }
      // p = a_i x^j, as right coefficients
      std::vector<BasePoly> p{a[i]};
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j > 0) {
          p = times_x(sd, p);
        }
        if (b[j].is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < p.size(); ++k) {
          result[i + k] = result[i + k] + p[k] * b[j];
        }
      }
    }
    return OrePoly(sd, std::move(result));
  }

  std::int64_t lambda_skew(OrePoly const& f) {
    if (f.is_zero()) {
      throw InputError("lambda_skew is undefined at 0");
    }
    return *f.degree() + *f.leading_coefficient().degree();
  }

  std::int64_t lambda_filtration(OrePoly const& f) {
    if (f.is_zero()) {
      throw InputError("lambda_filtration is undefined at 0");
    }
    if (!(f.sigma_delta() == SigmaDelta::weyl(f.sigma_delta().field))) {
      throw InputError("lambda_filtration needs the Weyl algebra, got "
                       + f.sigma_delta().to_string());
    }
    std::int64_t result = 0;
    auto const&  a = f.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero()) {
        result = std::max(result, static_cast<std::int64_t>(i) + *a[i].degree());
      }
    }
    return result;
  }

  OrePoly parse_ore_poly(SigmaDelta const& sd, std::string_view text) {
    OrePoly result(sd);
    for (auto [offset, term] : split_terms(text)) {
      auto [k, a] = parse_term(sd.field, term, offset, false);
      result = ore_add(result, OrePoly::monomial(sd, static_cast<std::size_t>(k), a));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // LaurentOrePoly
  ////////////////////////////////////////////////////////////////////////

  LaurentOrePoly::LaurentOrePoly(SigmaDelta sd) : _sd(std::move(sd)) {
    _sd.validate();
    if (_sd.delta != SigmaDelta::Delta::zero) {
      throw InputError("skew Laurent polynomials need delta = 0");
    }
  }

  LaurentOrePoly::LaurentOrePoly(SigmaDelta sd, std::map<std::int64_t, BasePoly> coefficients)
      : LaurentOrePoly(std::move(sd)) {
    for (auto& [k, a] : coefficients) {
      if (!(a.field() == _sd.field)) {
        throw InputError("field mismatch in skew Laurent coefficients");
      }
      if (!a.is_zero()) {
        _coefficients.emplace(k, std::move(a));
      }
    }
  }

  LaurentOrePoly LaurentOrePoly::monomial(SigmaDelta sd, std::int64_t k, BasePoly a) {
    return LaurentOrePoly(std::move(sd), {{k, std::move(a)}});
  }

  std::int64_t LaurentOrePoly::low_degree() const {
    if (is_zero()) {
      throw InputError("the zero element has no degree");
    }
    return _coefficients.begin()->first;
  }

  std::int64_t LaurentOrePoly::high_degree() const {
    if (is_zero()) {
      throw InputError("the zero element has no degree");
    }
    return _coefficients.rbegin()->first;
  }

  std::string LaurentOrePoly::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string result;
    for (auto it = _coefficients.rbegin(); it != _coefficients.rend(); ++it) {
      if (!result.empty()) {
        result += " + ";
      }
      result += term_string(it->first, it->second);
    }
    return result;
  }

  LaurentOrePoly laurent_add(LaurentOrePoly const& f, LaurentOrePoly const& g) {
    same_sd(f.sigma_delta(), g.sigma_delta());
    auto coefficients = f.coefficients();
    for (auto const& [k, b] : g.coefficients()) {
      auto [it, fresh] = coefficients.emplace(k, b);
      if (!fresh) {
        it->second = it->second + b;
      }
    }
    return LaurentOrePoly(f.sigma_delta(), std::move(coefficients));
  }

  LaurentOrePoly laurent_mul(LaurentOrePoly const& f, LaurentOrePoly const& g) {
    same_sd(f.sigma_delta(), g.sigma_delta());
    auto const&                      sd = f.sigma_delta();
    std::map<std::int64_t, BasePoly> coefficients;
    // x^i a x^j b = x^{i+j} sigma^j(a) b
    for (auto const& [i, a] : f.coefficients()) {
      for (auto const& [j, b] : g.coefficients()) {
        auto term = sd.apply_sigma(a, j) * b;
        auto [it, fresh] = coefficients.emplace(i + j, term);
        if (!fresh) {
          it->second = it->second + term;
        }
      }
    }
    return LaurentOrePoly(sd, std::move(coefficients));
  }

  std::int64_t lambda_laurent(LaurentOrePoly const& f) {
    if (f.is_zero()) {
      throw InputError("lambda_laurent is undefined at 0");
    }
    return f.high_degree() - f.low_degree() + *f.coefficients().begin()->second.degree();
  }

  LaurentOrePoly parse_laurent_ore_poly(SigmaDelta const& sd, std::string_view text) {
    LaurentOrePoly result(sd);
    for (auto [offset, term] : split_terms(text)) {
      auto [k, a] = parse_term(sd.field, term, offset, true);
      result = laurent_add(result, LaurentOrePoly::monomial(sd, k, a));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random elements and checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Scalar small_scalar(Field field, std::mt19937_64& rng, bool nonzero) {
      if (nonzero) {
        auto v = static_cast<std::int64_t>(1 + rng() % 3);
        return Scalar(field, rng() % 2 ? v : -v);
      }
      return Scalar(field, static_cast<std::int64_t>(rng() % 7) - 3);
    }
  }  // namespace

  BasePoly random_base_poly(Field field, std::mt19937_64& rng, std::size_t max_degree) {
    auto const          d = rng() % (max_degree + 1);
    std::vector<Scalar> coefficients;
    for (std::size_t k = 0; k <= d; ++k) {
      coefficients.push_back(small_scalar(field, rng, k == d));
    }
    return BasePoly(field, std::move(coefficients));
  }

  OrePoly random_ore_poly(SigmaDelta const& sd,
                          std::mt19937_64&  rng,
                          std::size_t       max_x_degree,
                          std::size_t       max_y_degree) {
    auto const            n = rng() % (max_x_degree + 1);
    std::vector<BasePoly> coefficients;
    for (std::size_t i = 0; i < n; ++i) {
      coefficients.push_back(rng() % 3 == 0 ? BasePoly(sd.field)
                                            : random_base_poly(sd.field, rng, max_y_degree));
    }
    coefficients.push_back(random_base_poly(sd.field, rng, max_y_degree));
    return OrePoly(sd, std::move(coefficients));
  }

  LaurentOrePoly random_laurent_ore_poly(SigmaDelta const& sd,
                                         std::mt19937_64&  rng,
                                         std::int64_t      max_abs_exponent,
                                         std::size_t       max_y_degree) {
    auto const span = static_cast<std::uint64_t>(2 * max_abs_exponent + 1);
    auto const lo = static_cast<std::int64_t>(rng() % span) - max_abs_exponent;
    auto const hi = lo + static_cast<std::int64_t>(rng() % 3);
    std::map<std::int64_t, BasePoly> coefficients;
    for (auto k = lo; k <= hi; ++k) {
      bool const end = k == lo || k == hi;
      if (end || rng() % 3 != 0) {
        coefficients.emplace(k, random_base_poly(sd.field, rng, max_y_degree));
      }
    }
    return LaurentOrePoly(sd, std::move(coefficients));
  }

  namespace {
    template <typename P>
    struct SkewSample {
      P              g;
      P              h;
      std::vector<P> chain;  // nonunits
    };

    struct SampleVerdict {
      bool        right = true;
      bool        lead = true;
      bool        bf = true;
      std::string detail;
    };

    SampleVerdict check_sample(SkewSample<OrePoly> const& s) {
      SampleVerdict v;
      auto const    gh = ore_mul(s.g, s.h);
      auto const    lg = lambda_skew(s.g);
      auto const    lgh = lambda_skew(gh);
      v.right = lgh > lg;
      auto const& sd = s.g.sigma_delta();
      auto const  l = *s.h.degree();
      v.lead = gh.leading_coefficient()
               == sd.apply_sigma(s.g.leading_coefficient(), l) * s.h.leading_coefficient();
      auto product = s.chain.front();
      for (std::size_t i = 1; i < s.chain.size(); ++i) {
        product = ore_mul(product, s.chain[i]);
      }
      v.bf = lambda_skew(product) >= static_cast<std::int64_t>(s.chain.size());
      if (!(v.right && v.lead && v.bf)) {
        v.detail = "g = " + s.g.to_string() + ", h = " + s.h.to_string() + ", lambda(g) = "
                   + std::to_string(lg) + ", lambda(gh) = " + std::to_string(lgh);
      }
      return v;
    }

    SampleVerdict check_sample(SkewSample<LaurentOrePoly> const& s) {
      SampleVerdict v;
      auto const    gh = laurent_mul(s.g, s.h);
      auto const    lg = lambda_laurent(s.g);
      auto const    lgh = lambda_laurent(gh);
      v.right = lgh > lg;
      auto const& sd = s.g.sigma_delta();
      auto const& gc = s.g.coefficients();
      auto const& hc = s.h.coefficients();
      auto const& fc = gh.coefficients();
      auto const  low = sd.apply_sigma(gc.begin()->second, hc.begin()->first) * hc.begin()->second;
      auto const  high
          = sd.apply_sigma(gc.rbegin()->second, hc.rbegin()->first) * hc.rbegin()->second;
      v.lead = fc.begin()->second == low && fc.rbegin()->second == high;
      auto product = s.chain.front();
      for (std::size_t i = 1; i < s.chain.size(); ++i) {
        product = laurent_mul(product, s.chain[i]);
      }
      v.bf = lambda_laurent(product) >= static_cast<std::int64_t>(s.chain.size());
      if (!(v.right && v.lead && v.bf)) {
        v.detail = "g = " + s.g.to_string() + ", h = " + s.h.to_string() + ", lambda(g) = "
                   + std::to_string(lg) + ", lambda(gh) = " + std::to_string(lgh);
      }
      return v;
    }

    template <typename P, typename Draw>
    SkewCheckReport run_skew(OreConfig const& config,
                             std::size_t      samples,
                             std::uint64_t    seed,
                             std::size_t      threads,
                             Draw&&           draw) {
      std::mt19937_64              rng(seed);
      std::vector<SkewSample<P>>   drawn;
      drawn.reserve(samples);
      auto nonunit = [&](std::size_t size) {
        while (true) {
          auto p = draw(rng, size);
          if (!p.is_zero() && !p.is_unit()) {
            return p;
          }
        }
      };
      for (std::size_t i = 0; i < samples; ++i) {
        SkewSample<P> s{draw(rng, 3), nonunit(3), {}};
        while (s.g.is_zero()) {
          s.g = draw(rng, 3);
        }
        auto const k = 2 + rng() % 3;
        for (std::size_t j = 0; j < k; ++j) {
          s.chain.push_back(nonunit(1));
        }
        drawn.push_back(std::move(s));
      }

      std::vector<SampleVerdict> verdicts(samples);
      threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(samples, 1));
      auto work = [&](std::size_t t) {
        for (std::size_t i = t; i < samples; i += threads) {
          verdicts[i] = check_sample(drawn[i]);
        }
      };
      if (threads == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back(work, t);
        }
      }

      SkewCheckReport report;
      report.config = config.name;
      report.samples = samples;
      for (auto const& v : verdicts) {
        report.right_violations += !v.right;
        report.lead_violations += !v.lead;
        report.bf_violations += !v.bf;
        if (!v.detail.empty() && report.failures.size() < 5) {
          report.failures.push_back(v.detail);
        }
      }
      return report;
    }
  }  // namespace

  nlohmann::json SkewCheckReport::to_json() const {
    return {{"config", config},
            {"samples", samples},
            {"right_violations", right_violations},
            {"lead_violations", lead_violations},
            {"bf_violations", bf_violations},
            {"failures", failures},
            {"mu", "deg_y"}};
  }

  SkewCheckReport skew_check(OreConfig const& config,
                             std::size_t      samples,
                             std::uint64_t    seed,
                             std::size_t      threads) {
    auto const& sd = config.sd;
    if (config.kind == OreConfig::Kind::polynomial) {
      return run_skew<OrePoly>(config, samples, seed, threads,
                               [&sd](std::mt19937_64& rng, std::size_t size) {
                                 return random_ore_poly(sd, rng, size, size);
                               });
    }
    return run_skew<LaurentOrePoly>(
        config, samples, seed, threads, [&sd](std::mt19937_64& rng, std::size_t size) {
          return random_laurent_ore_poly(sd, rng, 2, size);
        });
  }

  nlohmann::json FiltrationCheckReport::to_json() const {
    return {{"config", "weyl"},
            {"samples", samples},
            {"violations", violations},
            {"failures", failures}};
  }

  FiltrationCheckReport filtration_check(std::size_t samples, std::uint64_t seed) {
    auto const            sd = SigmaDelta::weyl();
    std::mt19937_64       rng(seed);
    FiltrationCheckReport report;
    report.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
      auto f = random_ore_poly(sd, rng, 3, 3);
      auto g = random_ore_poly(sd, rng, 3, 3);
      auto lhs = lambda_filtration(ore_mul(f, g));
      auto rhs = lambda_filtration(f) + lambda_filtration(g);
      if (lhs != rhs) {
        ++report.violations;
        if (report.failures.size() < 5) {
          report.failures.push_back("f = " + f.to_string() + ", g = " + g.to_string());
        }
      }
    }
    return report;
  }

}  // namespace factorlab
