#ifndef FACTORLAB_GROUP_ORACLE_HPP_
#define FACTORLAB_GROUP_ORACLE_HPP_

// Exact arithmetic in G = F x_alpha Z, where F is free on {b, c} and alpha
// is the automorphism b -> c, c -> b^-1. The monoid S generated by
// a = (e, 1) and b = (b, 0) embeds in G, which gives an equality test for S
// independent of any rewriting, and exact division in S.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorlab/normal_form.hpp"
#include "factorlab/word.hpp"

namespace factorlab {

  enum class FreeLetter : std::uint8_t { b = 0, c = 1 };

  struct FreeRun {
    FreeLetter   letter;
    std::int64_t exponent;

    bool operator==(FreeRun const&) const = default;
  };

  // Reduced word in the free group on {b, c}, stored as runs. Adjacent runs
  // have distinct letters and no run has exponent 0.
  class FreeWord {
   public:
    FreeWord() = default;
    // Reduces the given runs.
    explicit FreeWord(std::vector<FreeRun> const& runs);

    static FreeWord letter(FreeLetter x, std::int64_t exponent = 1);

    std::vector<FreeRun> const& runs() const noexcept {
      return _runs;
    }
    bool empty() const noexcept {
      return _runs.empty();
    }

    FreeWord inverse() const;
    // Sum of |exponent| over the runs.
    std::int64_t length() const;

    // "b^3 c^-2 b^1", or "e" for the identity.
    std::string to_string() const;

    bool operator==(FreeWord const&) const = default;

    friend FreeWord operator*(FreeWord const& x, FreeWord const& y);

   private:
    void push(FreeRun run);

    std::vector<FreeRun> _runs;
  };

  // Applies alpha^k.
  FreeWord alpha(FreeWord const& w, std::int64_t k);

  // The pair (f, t) standing for f a^t.
  struct GroupElement {
    FreeWord     f;
    std::int64_t t = 0;

    static GroupElement identity() {
      return {};
    }
    static GroupElement gen_a() {
      return {FreeWord(), 1};
    }
    static GroupElement gen_b() {
      return {FreeWord::letter(FreeLetter::b), 0};
    }
    static GroupElement gen_c() {
      return {FreeWord::letter(FreeLetter::c), 0};
    }

    // "b^3 c^-2 b^1 | a^5"; the free part is "e" when empty.
    std::string to_string() const;

    bool operator==(GroupElement const&) const = default;
  };

  struct GroupElementHash {
    std::size_t operator()(GroupElement const& g) const noexcept;
  };

  // (w1, n1)(w2, n2) = (w1 alpha^{n1}(w2), n1 + n2)
  GroupElement g_mul(GroupElement const& x, GroupElement const& y);
  GroupElement g_inv(GroupElement const& x);

  // Parses the display format "b^3 c^-2 b^1 | a^5".
  GroupElement parse_group_element(std::string_view text);

  // Image of a word over {a, b} in G.
  GroupElement embed(Word const& w);
  GroupElement embed(NormalFormS const& x);

  // Result of asking whether a group element lies in S.
  struct SMembership {
    std::optional<NormalFormS> element;

    static SMembership not_in() {
      return {};
    }
    static SMembership in(NormalFormS x) {
      return {std::move(x)};
    }

    bool is_in() const noexcept {
      return element.has_value();
    }
    NormalFormS const& value() const;
    std::string        to_string() const;

    bool operator==(SMembership const&) const = default;
  };

  // Decides whether g = embed(x) for some x in S and returns its normal
  // form. This is a single left-to-right pass over the runs of g.f; no
  // search is involved.
  SMembership parse_membership(GroupElement const& g);

  // In(v) iff x = u v in S.
  SMembership left_quotient(Word const& u, Word const& x);
  SMembership left_quotient(NormalFormS const& u, NormalFormS const& x);
  // In(u) iff x = u v in S.
  SMembership right_quotient(Word const& x, Word const& v);
  SMembership right_quotient(NormalFormS const& x, NormalFormS const& v);

}  // namespace factorlab

#endif  // FACTORLAB_GROUP_ORACLE_HPP_
