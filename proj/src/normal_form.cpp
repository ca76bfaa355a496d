#include "factorlab/normal_form.hpp"

#include <sstream>

#include "factorlab/error.hpp"

namespace factorlab {

  AlphabetPtr const& s_alphabet() {
    static AlphabetPtr const alphabet = make_alphabet({"a", "b"});
    return alphabet;
  }

  NormalFormS::NormalFormS(std::int64_t             m0,
                           std::vector<NormalBlock> blocks,
                           std::int64_t             n)
      : _m0(m0), _blocks(std::move(blocks)), _n(n) {
    if (_m0 < 0 || _n < 0) {
      throw InputError("normal form exponents m0 and n must be non-negative");
    }
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      auto const& blk = _blocks[i];
      if (blk.b_exp <= 0) {
        throw InputError("normal form block exponents m_i must be positive");
      }
      bool ok = (blk.a_exp == 1 || blk.a_exp == 3)
                || (i == 0 && blk.a_exp == 2);
      if (!ok) {
        throw InputError("normal form block " + std::to_string(i + 1)
                         + " has a-exponent " + std::to_string(blk.a_exp));
      }
    }
    if (!_blocks.empty() && _blocks[0].a_exp == 2 && _m0 != 0) {
      throw InputError("normal form with n_1 = 2 must have m0 = 0");
    }
  }

  NormalFormS NormalFormS::a_power(std::int64_t n) {
    return NormalFormS(0, {}, n);
  }

  NormalFormS NormalFormS::b_power(std::int64_t m) {
    return NormalFormS(m, {}, 0);
  }

  std::int64_t NormalFormS::a_count() const noexcept {
    std::int64_t total = _n;
    for (auto const& blk : _blocks) {
      total += blk.a_exp;
    }
    return total;
  }

  std::int64_t NormalFormS::b_count() const noexcept {
    std::int64_t total = _m0;
    for (auto const& blk : _blocks) {
      total += blk.b_exp;
    }
    return total;
  }

  Word NormalFormS::word() const {
    std::vector<letter_type> letters;
    letters.reserve(static_cast<std::size_t>(length()));
    letters.insert(letters.end(), _m0, letter_b);
    for (auto const& blk : _blocks) {
      letters.insert(letters.end(), blk.a_exp, letter_a);
      letters.insert(letters.end(), blk.b_exp, letter_b);
    }
    letters.insert(letters.end(), _n, letter_a);
    return Word(s_alphabet(), std::move(letters));
  }

  std::string NormalFormS::to_string() const {
    if (is_identity()) {
      return "e";
    }
    std::ostringstream out;
    char const*        sep = "";
    auto               put = [&](char g, std::int64_t e) {
      if (e > 0) {
        out << sep << g << '^' << e;
        sep = " ";
      }
    };
    put('b', _m0);
    for (auto const& blk : _blocks) {
      put('a', blk.a_exp);
      put('b', blk.b_exp);
    }
    put('a', _n);
    return out.str();
  }

  std::size_t NormalFormHash::operator()(NormalFormS const& x) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(x.leading_b());
    auto        mix = [&h](std::int64_t v) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    };
    for (auto const& blk : x.blocks()) {
      mix(blk.a_exp);
      mix(blk.b_exp);
    }
    mix(x.trailing_a());
    mix(static_cast<std::int64_t>(x.blocks().size()));
    return h;
  }

  bool shortlex_less(NormalFormS const& x, NormalFormS const& y) {
    return shortlex_less(x.word(), y.word());
  }

}  // namespace factorlab
