#include "factorlab/group_oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "factorlab/error.hpp"

namespace factorlab {

  namespace {
    // alpha^k(x) = image.letter ^ image.sign, k taken mod 4.
    struct LetterImage {
      FreeLetter letter;
      int        sign;
    };

    int mod4(std::int64_t k) {
      auto r = static_cast<int>(k % 4);
      return r < 0 ? r + 4 : r;
    }

    LetterImage alpha_image(FreeLetter x, std::int64_t k) {
      // b -> c -> b^-1 -> c^-1 -> b
      static constexpr LetterImage b_table[4] = {{FreeLetter::b, 1},
                                                 {FreeLetter::c, 1},
                                                 {FreeLetter::b, -1},
                                                 {FreeLetter::c, -1}};
      // c -> b^-1 -> c^-1 -> b -> c
      static constexpr LetterImage c_table[4] = {{FreeLetter::c, 1},
                                                 {FreeLetter::b, -1},
                                                 {FreeLetter::c, -1},
                                                 {FreeLetter::b, 1}};
      return x == FreeLetter::b ? b_table[mod4(k)] : c_table[mod4(k)];
    }

    char letter_name(FreeLetter x) {
      return x == FreeLetter::b ? 'b' : 'c';
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FreeWord
  ////////////////////////////////////////////////////////////////////////

  FreeWord::FreeWord(std::vector<FreeRun> const& runs) {
    for (auto const& r : runs) {
      push(r);
    }
  }

  FreeWord FreeWord::letter(FreeLetter x, std::int64_t exponent) {
    return FreeWord({{x, exponent}});
  }

  void FreeWord::push(FreeRun run) {
    if (run.exponent == 0) {
      return;
    }
    if (!_runs.empty() && _runs.back().letter == run.letter) {
      _runs.back().exponent
          = detail::checked_add(_runs.back().exponent, run.exponent);
      if (_runs.back().exponent == 0) {
        _runs.pop_back();
      }
      return;
    }
    _runs.push_back(run);
  }

  FreeWord FreeWord::inverse() const {
    FreeWord result;
    result._runs.reserve(_runs.size());
    for (auto it = _runs.rbegin(); it != _runs.rend(); ++it) {
      result._runs.push_back({it->letter, detail::checked_neg(it->exponent)});
    }
    return result;
  }

  std::int64_t FreeWord::length() const {
    std::int64_t total = 0;
    for (auto const& r : _runs) {
      total = detail::checked_add(total, std::abs(r.exponent));
    }
    return total;
  }

  std::string FreeWord::to_string() const {
    if (_runs.empty()) {
      return "e";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < _runs.size(); ++i) {
      out << (i == 0 ? "" : " ") << letter_name(_runs[i].letter) << '^'
          << _runs[i].exponent;
    }
    return out.str();
  }

  FreeWord operator*(FreeWord const& x, FreeWord const& y) {
    FreeWord result = x;
    for (auto const& r : y._runs) {
      result.push(r);
    }
    return result;
  }

  FreeWord alpha(FreeWord const& w, std::int64_t k) {
    // alpha permutes {b, c, b^-1, c^-1}, so a reduced word maps to a reduced
    // word run by run.
    std::vector<FreeRun> runs;
    runs.reserve(w.runs().size());
    for (auto const& r : w.runs()) {
      auto img = alpha_image(r.letter, k);
      runs.push_back({img.letter, img.sign * r.exponent});
    }
    return FreeWord(runs);
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  std::string GroupElement::to_string() const {
    return f.to_string() + " | a^" + std::to_string(t);
  }

  std::size_t GroupElementHash::operator()(GroupElement const& g) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(g.t);
    for (auto const& r : g.f.runs()) {
      h ^= std::hash<std::int64_t>{}(r.exponent * 2 + static_cast<int>(r.letter))
           + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  GroupElement g_mul(GroupElement const& x, GroupElement const& y) {
    return {x.f * alpha(y.f, x.t), detail::checked_add(x.t, y.t)};
  }

  GroupElement g_inv(GroupElement const& x) {
    auto t = detail::checked_neg(x.t);
    return {alpha(x.f.inverse(), t), t};
  }

  GroupElement parse_group_element(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw InputError("group element needs a '|' separating the a-part");
    }
    auto parse_int = [](std::string_view s, std::string const& what) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("bad exponent '" + std::string(s) + "' in " + what);
      }
      return v;
    };
    std::vector<FreeRun> runs;
    std::istringstream   in{std::string(text.substr(0, bar))};
    std::string          tok;
    while (in >> tok) {
      if (tok == "e") {
        continue;
      }
      if (tok.size() < 3 || (tok[0] != 'b' && tok[0] != 'c') || tok[1] != '^') {
        throw InputError("bad free-group run '" + tok + "'");
      }
      runs.push_back({tok[0] == 'b' ? FreeLetter::b : FreeLetter::c,
                      parse_int(std::string_view(tok).substr(2), tok)});
    }
    std::string rest;
    {
      std::istringstream tail{std::string(text.substr(bar + 1))};
      tail >> rest;
      std::string extra;
      if (tail >> extra) {
        throw InputError("trailing input after a-part: '" + extra + "'");
      }
    }
    if (rest.size() < 3 || rest[0] != 'a' || rest[1] != '^') {
      throw InputError("a-part must look like a^N, found '" + rest + "'");
    }
    return {FreeWord(runs), parse_int(std::string_view(rest).substr(2), rest)};
  }

  GroupElement embed(Word const& w) {
    if (!same_alphabet(*w.alphabet(), *s_alphabet())) {
      throw InputError("embed expects a word over {a, b}");
    }
    // Moving every a to the right: (F, t) * b = (F alpha^t(b), t).
    std::vector<FreeRun> runs;
    std::int64_t         t = 0;
    for (auto x : w.letters()) {
      if (x == letter_a) {
        ++t;
      } else {
        auto img = alpha_image(FreeLetter::b, t);
        runs.push_back({img.letter, img.sign});
      }
    }
    return {FreeWord(runs), t};
  }

  GroupElement embed(NormalFormS const& x) {
    std::vector<FreeRun> runs;
    std::int64_t         t = 0;
    runs.push_back({FreeLetter::b, x.leading_b()});
    for (auto const& blk : x.blocks()) {
      t += blk.a_exp;
      auto img = alpha_image(FreeLetter::b, t);
      runs.push_back({img.letter, img.sign * blk.b_exp});
    }
    t = detail::checked_add(t, x.trailing_a());
    return {FreeWord(runs), t};
  }

  ////////////////////////////////////////////////////////////////////////
  // Membership
  ////////////////////////////////////////////////////////////////////////

  NormalFormS const& SMembership::value() const {
    if (!element) {
      throw InputError("membership verdict is NotIn");
    }
    return *element;
  }

  std::string SMembership::to_string() const {
    return element ? "In(" + element->to_string() + ")" : "NotIn";
  }

  SMembership parse_membership(GroupElement const& g) {
    // Write x = b^{m0} a^{n_1} b^{m_1} ... a^{n_k} b^{m_k} a^n and let
    // N_i = n_1 + ... + n_i. In G, x = b^{m0} alpha^{N_1}(b)^{m_1} ...
    // alpha^{N_k}(b)^{m_k} a^{N_k + n}. Each run of g.f therefore fixes m_i
    // (its absolute value) and, through its sign, whether N_i = N_{i-1} + 1
    // or N_{i-1} + 3; the two choices map b to mutually inverse letters.
    // A leading b-run with negative exponent can only come from n_1 = 2,
    // m0 = 0.
    auto const&              runs = g.f.runs();
    std::size_t              idx = 0;
    std::int64_t             m0 = 0;
    std::int64_t             phase = 0;
    std::int64_t             a_used = 0;
    std::vector<NormalBlock> blocks;
    if (!runs.empty() && runs[0].letter == FreeLetter::b) {
      if (runs[0].exponent > 0) {
        m0 = runs[0].exponent;
      } else {
        blocks.push_back({2, -runs[0].exponent});
        phase = 2;
        a_used = 2;
      }
      idx = 1;
    }
    for (; idx < runs.size(); ++idx) {
      auto const& r = runs[idx];
      auto        plus_one = alpha_image(FreeLetter::b, phase + 1);
      if (plus_one.letter != r.letter) {
        return SMembership::not_in();
      }
      int a_exp = (plus_one.sign * r.exponent > 0) ? 1 : 3;
      phase += a_exp;
      a_used += a_exp;
      blocks.push_back({a_exp, std::abs(r.exponent)});
    }
    if (g.t < a_used) {
      return SMembership::not_in();
    }
    NormalFormS nf(m0, std::move(blocks), g.t - a_used);
    if (!(embed(nf) == g)) {
      throw InternalError("membership parse of " + g.to_string()
                          + " does not reproduce the element");
    }
    return SMembership::in(std::move(nf));
  }

  SMembership left_quotient(Word const& u, Word const& x) {
    return parse_membership(g_mul(g_inv(embed(u)), embed(x)));
  }

  SMembership left_quotient(NormalFormS const& u, NormalFormS const& x) {
    return parse_membership(g_mul(g_inv(embed(u)), embed(x)));
  }

  SMembership right_quotient(Word const& x, Word const& v) {
    return parse_membership(g_mul(embed(x), g_inv(embed(v))));
  }

  SMembership right_quotient(NormalFormS const& x, NormalFormS const& v) {
    return parse_membership(g_mul(embed(x), g_inv(embed(v))));
  }

}  // namespace factorlab
