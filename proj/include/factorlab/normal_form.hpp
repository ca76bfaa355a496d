#ifndef FACTORLAB_NORMAL_FORM_HPP_
#define FACTORLAB_NORMAL_FORM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "factorlab/word.hpp"

namespace factorlab {

  // The alphabet {a, b} of the monoid S; a has id 0 and b has id 1.
  AlphabetPtr const& s_alphabet();

  inline constexpr letter_type letter_a = 0;
  inline constexpr letter_type letter_b = 1;

  // One factor a^{n_i} b^{m_i} of the canonical word.
  struct NormalBlock {
    int          a_exp;  // n_i
    std::int64_t b_exp;  // m_i

    auto operator<=>(NormalBlock const&) const = default;
  };

  // Canonical representative
  //
  //   b^{m0} a^{n_1} b^{m_1} ... a^{n_k} b^{m_k} a^{n}
  //
  // of an element of S with k >= 0, m0 >= 0, m_i > 0, n >= 0,
  // n_1 in {1, 2, 3}, n_i in {1, 3} for i >= 2, and m0 = 0 whenever n_1 = 2.
  // The constructor rejects tuples violating these constraints.
  class NormalFormS {
   public:
    NormalFormS() = default;
    NormalFormS(std::int64_t m0, std::vector<NormalBlock> blocks, std::int64_t n);

    // a^n
    static NormalFormS a_power(std::int64_t n);
    // b^m
    static NormalFormS b_power(std::int64_t m);

    std::int64_t leading_b() const noexcept {
      return _m0;
    }
    std::vector<NormalBlock> const& blocks() const noexcept {
      return _blocks;
    }
    std::int64_t trailing_a() const noexcept {
      return _n;
    }

    bool is_identity() const noexcept {
      return _m0 == 0 && _blocks.empty() && _n == 0;
    }

    std::int64_t a_count() const noexcept;
    std::int64_t b_count() const noexcept;
    // Length of the canonical word, which is the minimal length of any word
    // representing the element.
    std::int64_t length() const noexcept {
      return a_count() + b_count();
    }

    Word word() const;

    // e.g. "b^2 a^3 b^1 a^2", "e" for the identity.
    std::string to_string() const;

    auto operator<=>(NormalFormS const&) const = default;
    bool operator==(NormalFormS const&) const = default;

   private:
    std::int64_t             _m0 = 0;
    std::vector<NormalBlock> _blocks;
    std::int64_t             _n = 0;
  };

  struct NormalFormHash {
    std::size_t operator()(NormalFormS const& x) const noexcept;
  };

  // Shortlex order of canonical words.
  bool shortlex_less(NormalFormS const& x, NormalFormS const& y);

}  // namespace factorlab

#endif  // FACTORLAB_NORMAL_FORM_HPP_
