#include "factorlab/pi_matrix.hpp"

#include <cctype>
#include <charconv>

#include "factorlab/error.hpp"

namespace factorlab {

  LaurentPoly2 LaurentPoly2::monomial(mpq_class const& c, std::int64_t i, std::int64_t j) {
    if (i < 0) {
      throw InputError("x is not invertible: exponent " + std::to_string(i));
    }
    LaurentPoly2 f;
    f.add_term({i, j}, c);
    return f;
  }

  bool LaurentPoly2::divisible_by_x() const noexcept {
    for (auto const& [e, c] : _terms) {
      if (e.first == 0) {
        return false;
      }
    }
    return true;
  }

  bool LaurentPoly2::is_unit() const noexcept {
    return _terms.size() == 1 && _terms.begin()->first.first == 0;
  }

  void LaurentPoly2::add_term(Exponent e, mpq_class const& value) {
    mpq_class c = value;
    c.canonicalize();
    if (c == 0) {
      return;
    }
    auto [it, fresh] = _terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  std::string LaurentPoly2::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string result;
    // highest x-degree first, then highest y-degree
    for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
      auto const& [e, c] = *it;
      bool const  negative = sgn(c) < 0;
      mpq_class   magnitude = abs(c);
      std::vector<std::string> factors;
      if (magnitude != 1 || (e.first == 0 && e.second == 0)) {
        factors.push_back(magnitude.get_str());
      }
      if (e.first == 1) {
        factors.emplace_back("x");
      } else if (e.first > 1) {
        factors.push_back("x^" + std::to_string(e.first));
      }
      if (e.second == 1) {
        factors.emplace_back("y");
      } else if (e.second != 0) {
        factors.push_back("y^" + std::to_string(e.second));
      }
      std::string term;
      for (auto const& f : factors) {
        term += (term.empty() ? "" : "*") + f;
      }
      if (result.empty()) {
        result = negative ? "-" + term : term;
      } else {
        result += (negative ? " - " : " + ") + term;
      }
    }
    return result;
  }

  LaurentPoly2 operator+(LaurentPoly2 const& f, LaurentPoly2 const& g) {
    auto result = f;
    for (auto const& [e, c] : g.terms()) {
      result.add_term(e, c);
    }
    return result;
  }

  LaurentPoly2 operator-(LaurentPoly2 const& f, LaurentPoly2 const& g) {
    auto result = f;
    for (auto const& [e, c] : g.terms()) {
      result.add_term(e, -c);
    }
    return result;
  }

  LaurentPoly2 operator*(LaurentPoly2 const& f, LaurentPoly2 const& g) {
    LaurentPoly2 result;
    for (auto const& [e, c] : f.terms()) {
      for (auto const& [d, b] : g.terms()) {
        result.add_term({e.first + d.first, e.second + d.second}, c * b);
      }
    }
    return result;
  }

  namespace {
    [[noreturn]] void fail(std::size_t pos, std::string const& what) {
      throw InputError("column " + std::to_string(pos + 1) + ": " + what);
    }

    void skip_space(std::string_view s, std::size_t& pos) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
    }

    std::int64_t exponent(std::string_view s, std::size_t& pos) {
      skip_space(s, pos);
      if (pos >= s.size() || s[pos] != '^') {
        return 1;
      }
      ++pos;
      skip_space(s, pos);
      bool negative = false;
      if (pos < s.size() && s[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::int64_t k = 0;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), k);
      if (ec != std::errc()) {
        fail(pos, "expected an exponent");
      }
      pos = ptr - s.data();
      return negative ? -k : k;
    }

    // term ((+|-) term)*; stops at the first character that cannot continue
    // the expression. Error columns are shifted by offset.
    LaurentPoly2 parse_expression(std::string_view s, std::size_t& pos, std::size_t offset) {
      LaurentPoly2 result;
      bool         first = true;
      while (true) {
        skip_space(s, pos);
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
          sign = s[pos] == '-' ? -1 : 1;
          ++pos;
        } else if (!first) {
          break;
        }
        first = false;
        mpq_class    c = sign;
        std::int64_t i = 0, j = 0;
        bool         any = false;
        while (true) {
          skip_space(s, pos);
          if (pos >= s.size()) {
            break;
          }
          auto const ch = s[pos];
          if (std::isdigit(static_cast<unsigned char>(ch))) {
            auto start = pos;
            while (pos < s.size()
                   && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
              ++pos;
            }
            mpq_class q;
            if (q.set_str(std::string(s.substr(start, pos - start)), 10) != 0 || q.get_den() == 0) {
              fail(offset + start, "bad number");
            }
            q.canonicalize();
            c *= q;
          } else if (ch == 'x') {
            ++pos;
            auto k = exponent(s, pos);
            if (k < 0) {
              fail(offset + pos, "x is not invertible");
            }
            i += k;
          } else if (ch == 'y') {
            ++pos;
            j += exponent(s, pos);
          } else {
            fail(offset + pos, std::string("unexpected '") + ch + "'");
          }
          any = true;
          skip_space(s, pos);
          if (pos < s.size() && s[pos] == '*') {
            ++pos;
            continue;
          }
          break;
        }
        if (!any) {
          fail(offset + pos, "expected a term");
        }
        result.add_term({i, j}, c);
      }
      return result;
    }
  }  // namespace

  LaurentPoly2 parse_laurent_poly2(std::string_view text) {
    std::size_t pos = 0;
    auto        result = parse_expression(text, pos, 0);
    skip_space(text, pos);
    if (pos != text.size()) {
      fail(pos, std::string("unexpected '") + text[pos] + "'");
    }
    return result;
  }

  Mat2 Mat2::identity() {
    return diag(LaurentPoly2::constant(1), LaurentPoly2::constant(1));
  }

  Mat2 Mat2::diag(LaurentPoly2 const& a, LaurentPoly2 const& d) {
    return {{a, LaurentPoly2(), LaurentPoly2(), d}};
  }

  std::string Mat2::to_string() const {
    return e[0].to_string() + "; " + e[1].to_string() + "; " + e[2].to_string() + "; "
           + e[3].to_string();
  }

  Mat2 operator*(Mat2 const& a, Mat2 const& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r.e[2 * i + j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
      }
    }
    return r;
  }

  Mat2 operator+(Mat2 const& a, Mat2 const& b) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) {
      r.e[k] = a.e[k] + b.e[k];
    }
    return r;
  }

  LaurentPoly2 det(Mat2 const& a) {
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  }

  Mat2 parse_mat2(std::string_view text) {
    Mat2        m;
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
      auto end = text.find(';', start);
      if ((k < 3) != (end != std::string_view::npos)) {
        throw InputError("a matrix literal has exactly four ';'-separated entries");
      }
      auto piece = text.substr(start, end == std::string_view::npos ? text.size() - start
                                                                    : end - start);
      std::size_t pos = 0;
      m.e[k] = parse_expression(piece, pos, start);
      skip_space(piece, pos);
      if (pos != piece.size()) {
        fail(start + pos, std::string("unexpected '") + piece[pos] + "'");
      }
      start = end + 1;
    }
    return m;
  }

  bool in_R(Mat2 const& a) {
    if (!a(0, 1).divisible_by_x()) {
      return false;
    }
    for (auto const& [e, c] : a(1, 1).terms()) {
      if (e.first == 0 && e.second < 0) {
        return false;
      }
    }
    return true;
  }

  bool is_unit_in_R(Mat2 const& a) {
    if (!in_R(a)) {
      return false;
    }
    auto const d = det(a);
    if (!d.is_unit()) {
      return false;
    }
    auto const& [e, c] = *d.terms().begin();
    auto const  inv_det = LaurentPoly2::monomial(1 / c, 0, -e.second);
    auto const  zero = LaurentPoly2();
    Mat2 inverse{{inv_det * a(1, 1), inv_det * (zero - a(0, 1)), inv_det * (zero - a(1, 0)),
                  inv_det * a(0, 0)}};
    return in_R(inverse);
  }

  bool is_special_form(Mat2 const& a) {
    return a(0, 1).divisible_by_x() && a(1, 1).divisible_by_x() && !det(a).is_zero();
  }

  Peel peel(Mat2 const& a) {
    if (!is_special_form(a)) {
      throw InputError("peel needs a special-form matrix, got " + a.to_string());
    }
    auto const y_inv = LaurentPoly2::y(-1);
    Peel       p{Mat2::diag(LaurentPoly2::constant(1), LaurentPoly2::y()),
           Mat2{{a(0, 0), a(0, 1), a(1, 0) * y_inv, a(1, 1) * y_inv}}};
    if (!(p.u * p.rest == a)) {
      throw InternalError("peel: U A' != A");
    }
    return p;
  }

  std::vector<PeelStep> peel_chain(Mat2 const& a, std::size_t steps) {
    std::vector<PeelStep> chain;
    auto const            u_inverse = Mat2::diag(LaurentPoly2::constant(1), LaurentPoly2::y(-1));
    Mat2                  current = a;
    Mat2                  u_power = Mat2::identity();
    for (std::size_t k = 0; k < steps; ++k) {
      auto     p = peel(current);
      PeelStep s;
      s.before = current;
      s.after = p.rest;
      s.product_ok = p.u * p.rest == current;
      s.u_in_r = in_R(p.u);
      s.u_nonunit = !in_R(u_inverse) && !is_unit_in_R(p.u);
      s.after_in_r = in_R(p.rest);
      s.after_special = is_special_form(p.rest);
      u_power = u_power * p.u;
      s.power_ok = u_power * p.rest == a;
      chain.push_back(s);
      if (!s.after_special) {
        break;
      }
      current = p.rest;
    }
    return chain;
  }

}  // namespace factorlab
