#include "factorlab/semigroup_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "factorlab/error.hpp"
#include "factorlab/group_oracle.hpp"
#include "factorlab/monoid_s.hpp"

namespace factorlab {

  namespace {
    void same_field(AlgebraElement const& f, AlgebraElement const& g) {
      if (!(f.field() == g.field())) {
        throw InputError("field mismatch: " + f.field().to_string() + " vs "
                         + g.field().to_string());
      }
    }

    std::string trim(std::string_view s) {
      auto first = s.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(" \t");
      return std::string(s.substr(first, last - first + 1));
    }

    bool looks_like_scalar(std::string_view s) {
      return !s.empty()
             && (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '-'
                 || s.front() == '+');
    }

    // Lowest a-count over the support; like deg_a it is additive because the
    // a-grading of K[G] has a domain in each degree.
    std::int64_t low_a(AlgebraElement const& f) {
      std::int64_t result = INT64_MAX;
      for (auto const& [s, c] : f.terms()) {
        result = std::min(result, s.a_count());
      }
      return result;
    }
  }  // namespace

  AlgebraElement AlgebraElement::monomial(Scalar const& c, NormalFormS s) {
    AlgebraElement result(c.field());
    result.add_term(s, c);
    return result;
  }

  AlgebraElement AlgebraElement::monomial(Field field, NormalFormS s) {
    return monomial(Scalar::one(field), std::move(s));
  }

  AlgebraElement AlgebraElement::constant(Scalar const& c) {
    return monomial(c, NormalFormS());
  }

  Scalar AlgebraElement::coefficient(NormalFormS const& s) const {
    auto it = _terms.find(s);
    return it == _terms.end() ? Scalar::zero(_field) : it->second;
  }

  void AlgebraElement::add_term(NormalFormS const& s, Scalar const& c) {
    if (!(c.field() == _field)) {
      throw InputError("field mismatch: " + _field.to_string() + " vs "
                       + c.field().to_string());
    }
    if (c.is_zero()) {
      return;
    }
    auto [it, fresh] = _terms.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  std::string AlgebraElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string result;
    for (auto const& [s, c] : _terms) {
      if (!result.empty()) {
        result += " + ";
      }
      result += c.to_string() + " * " + s.to_string();
    }
    return result;
  }

  AlgebraElement alg_add(AlgebraElement const& f, AlgebraElement const& g) {
    same_field(f, g);
    AlgebraElement result = f;
    for (auto const& [s, c] : g.terms()) {
      result.add_term(s, c);
    }
    return result;
  }

  AlgebraElement alg_neg(AlgebraElement const& f) {
    return alg_scale(-Scalar::one(f.field()), f);
  }

  AlgebraElement alg_scale(Scalar const& c, AlgebraElement const& f) {
    AlgebraElement result(f.field());
    for (auto const& [s, d] : f.terms()) {
      result.add_term(s, c * d);
    }
    return result;
  }

  AlgebraElement alg_mul(AlgebraElement const& f, AlgebraElement const& g) {
    same_field(f, g);
    AlgebraElement result(f.field());
    for (auto const& [s, c] : f.terms()) {
      for (auto const& [t, d] : g.terms()) {
        result.add_term(multiply(s, t), c * d);
      }
    }
    return result;
  }

  std::optional<std::int64_t> deg_a(AlgebraElement const& f) {
    if (f.is_zero()) {
      return std::nullopt;
    }
    std::int64_t result = 0;
    for (auto const& [s, c] : f.terms()) {
      result = std::max(result, s.a_count());
    }
    return result;
  }

  AlgebraElement parse_algebra_element(Field field, std::string_view text) {
    AlgebraElement result(field);
    auto body = trim(text);
    if (body.empty()) {
      throw InputError("empty algebra element");
    }
    if (body == "0") {
      return result;
    }
    std::size_t start = 0;
    while (start <= body.size()) {
      auto plus = body.find('+', start);
      // a '+' directly after '*' or at the start of a term is a sign
      while (plus != std::string::npos && trim(body.substr(start, plus - start)).empty()) {
        plus = body.find('+', plus + 1);
      }
      auto end = plus == std::string::npos ? body.size() : plus;
      auto term = trim(std::string_view(body).substr(start, end - start));
      if (term.empty()) {
        throw InputError("empty term at column " + std::to_string(start + 1));
      }
      auto star = term.find('*');
      Scalar      coeff = Scalar::one(field);
      std::string word_text;
      if (star != std::string::npos) {
        coeff = parse_scalar(field, trim(std::string_view(term).substr(0, star)));
        word_text = trim(std::string_view(term).substr(star + 1));
        if (word_text.empty()) {
          throw InputError("missing word after '*' in '" + term + "'");
        }
      } else if (looks_like_scalar(term)) {
        coeff = parse_scalar(field, term);
        word_text = "e";
      } else {
        word_text = term;
      }
      result.add_term(normalize(parse_word(s_alphabet(), word_text)), coeff);
      if (plus == std::string::npos) {
        break;
      }
      start = plus + 1;
    }
    return result;
  }

  std::string to_string(DivVerdict const& v) {
    if (auto const* yes = std::get_if<DivYes>(&v)) {
      return "Yes(" + yes->h.to_string() + ")";
    }
    return std::holds_alternative<DivNo>(v) ? "No" : "Unknown";
  }

  DivVerdict divides_right(AlgebraElement const& f,
                           AlgebraElement const& g,
                           std::size_t           search_cap,
                           std::size_t           entry_budget) {
    same_field(f, g);
    if (f.is_zero()) {
      throw InputError("divides_right: f must be nonzero");
    }
    auto const field = f.field();
    if (g.is_zero()) {
      return DivYes{AlgebraElement(field)};
    }
    // a-degrees of h are confined to [lo, hi]
    auto const hi = *deg_a(g) - *deg_a(f);
    auto const lo = low_a(g) - low_a(f);
    if (hi < 0 || lo < 0 || lo > hi) {
      return DivNo{};
    }

    std::uint64_t total = 0;
    for (auto n : count_elements_by_length(search_cap)) {
      total += n;
    }
    if (total > entry_budget) {
      throw BudgetExceeded("divides_right: " + std::to_string(total)
                           + " candidate supports exceed the budget");
    }
    std::vector<NormalFormS> candidates;
    for (auto const& u : enumerate_elements(search_cap)) {
      if (u.a_count() >= lo && u.a_count() <= hi) {
        candidates.push_back(u);
      }
    }

    std::map<NormalFormS, std::size_t, ShortlexOrder> row_of;
    for (auto const& [t, d] : g.terms()) {
      row_of.emplace(t, row_of.size());
    }
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    columns.reserve(candidates.size());
    for (auto const& u : candidates) {
      auto const product = alg_mul(f, AlgebraElement::monomial(field, u));
      auto&      col = columns.emplace_back();
      for (auto const& [t, d] : product.terms()) {
        auto [it, fresh] = row_of.emplace(t, row_of.size());
        col.emplace_back(it->second, d);
      }
    }

    auto const rows = row_of.size();
    auto const cols = candidates.size();
    if (rows * (cols + 1) > entry_budget) {
      throw BudgetExceeded("divides_right: linear system of " + std::to_string(rows)
                           + " x " + std::to_string(cols) + " exceeds the budget");
    }
    std::vector<std::vector<Scalar>> m(rows,
                                       std::vector<Scalar>(cols + 1, Scalar::zero(field)));
    for (std::size_t j = 0; j < cols; ++j) {
      for (auto const& [i, d] : columns[j]) {
        m[i][j] = d;
      }
    }
    for (auto const& [t, d] : g.terms()) {
      m[row_of.at(t)][cols] = d;
    }

    // Gauss-Jordan, pivots taken in candidate (shortlex) order
    std::vector<std::size_t> pivot_col;
    std::size_t              r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
      std::size_t p = r;
      while (p < rows && m[p][j].is_zero()) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      std::swap(m[p], m[r]);
      auto const inv = m[r][j].inverse();
      for (std::size_t k = j; k <= cols; ++k) {
        m[r][k] *= inv;
      }
      for (std::size_t i = 0; i < rows; ++i) {
        if (i != r && !m[i][j].is_zero()) {
          auto const factor = m[i][j];
          for (std::size_t k = j; k <= cols; ++k) {
            m[i][k] -= factor * m[r][k];
          }
        }
      }
      pivot_col.push_back(j);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][cols].is_zero()) {
        return DivUnknown{};
      }
    }
    AlgebraElement h(field);
    for (std::size_t i = 0; i < r; ++i) {
      h.add_term(candidates[pivot_col[i]], m[i][cols]);
    }
    if (!(alg_mul(f, h) == g)) {
      throw InternalError("divides_right: certificate fails verification");
    }
    return DivYes{h};
  }

  std::optional<DivVerdict> divides_right_monomial(AlgebraElement const& f,
                                                   AlgebraElement const& g) {
    same_field(f, g);
    if (!f.is_monomial()) {
      return std::nullopt;
    }
    if (g.is_zero()) {
      return DivYes{AlgebraElement(f.field())};
    }
    // s h has as many terms as h since left multiplication by s is injective
    if (!g.is_monomial()) {
      return DivNo{};
    }
    auto const& [s, c] = *f.terms().begin();
    auto const& [t, d] = *g.terms().begin();
    auto q = left_quotient(s, t);
    if (!q.is_in()) {
      return DivNo{};
    }
    return DivYes{AlgebraElement::monomial(d / c, q.value())};
  }

}  // namespace factorlab
