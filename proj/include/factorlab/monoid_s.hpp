#ifndef FACTORLAB_MONOID_S_HPP_
#define FACTORLAB_MONOID_S_HPP_

// The monoid S = < a, b | b a^2 b = a^2, a^4 b = b a^4 >: canonical forms,
// enumeration, atoms, length sets and the non-ACCP witness.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "factorlab/group_oracle.hpp"
#include "factorlab/normal_form.hpp"
#include "factorlab/word.hpp"

namespace factorlab {

  // The defining relations as rewrite rules ba^2b -> a^2 and a^4b -> ba^4,
  // with the certificate (length, #(a before b) pairs).
  RewriteSystem const& s_rewrite_system();

  // The defining relations of S.
  Presentation s_presentation();

  // Reduces w to its normal form by moving a^4 to the right past b's and
  // cancelling b a^2 b to a^2, working on the run-length form of w.
  NormalFormS normalize(Word const& w);
  // Normalizes the word in {a, b} given by the CLI syntax ("b a a b").
  NormalFormS normalize(std::string_view text);

  bool equal(Word const& u, Word const& v);

  // Product in S.
  NormalFormS multiply(NormalFormS const& x, NormalFormS const& y);

  // Calls visit(x) once for every element of S whose canonical word has
  // length <= max_len, by length and then in the order the tuples are
  // generated.
  void for_each_element(std::size_t                                   max_len,
                        std::function<void(NormalFormS const&)> const& visit);
  // Same elements, in shortlex order of their canonical words.
  std::vector<NormalFormS> enumerate_elements(std::size_t max_len);
  // Number of elements with canonical length exactly len, for len = 0..max_len.
  std::vector<std::uint64_t> count_elements_by_length(std::size_t max_len);

  struct AtomVerdict {
    enum class Kind { atom, not_atom, unit };
    Kind kind;
    // For not_atom: two nonunits whose product is the element.
    std::optional<std::pair<NormalFormS, NormalFormS>> split;

    std::string to_string() const;
  };

  // Exact: S has no units besides e and its atoms are exactly a and b.
  AtomVerdict is_atom(NormalFormS const& x);

  struct LengthSetReport {
    NormalFormS         element;
    std::int64_t        cap = 0;
    std::set<std::int64_t> lengths;
    // True iff every length <= cap was found.
    bool        exhausted = false;
    std::size_t words_visited = 0;

    std::string to_string() const;  // "{2,4,6,8}"
  };

  // All lengths <= cap of words representing x (equivalently, of
  // factorizations of x into atoms). Breadth-first closure over the
  // relations applied in both directions, restricted to words of length
  // <= cap. Throws InputError if cap < x.length(). If the closure grows past
  // word_budget words the report is partial and exhausted is false.
  LengthSetReport length_set(NormalFormS const& x,
                             std::int64_t       cap,
                             std::size_t        word_budget = 5'000'000);

  struct AccpLink {
    NormalFormS generator;  // b^k a^2
    NormalFormS cofactor;   // generator = next_generator * cofactor
    bool        inclusion_checked = false;
    bool        strictness_checked = false;
  };

  // Links k = 0..depth of the chain a^2 S, b a^2 S, b^2 a^2 S, ...
  struct AccpWitness {
    std::size_t           depth = 0;
    std::vector<AccpLink> chain;

    // Number of verified strict inclusions, equal to depth.
    std::size_t strict_inclusions() const;
  };

  // Builds g_k = b^k a^2 for k = 0..depth and checks with exact division
  // that g_k = g_{k+1} b and that g_{k+1} is not in g_k S. Throws
  // InputError if depth == 0 and InternalError if a check fails.
  AccpWitness verify_accp_failure(std::size_t depth);

  struct SbnYes {
    std::int64_t i;
    NormalFormS  x_i;  // x = x_i a^2 b^i
  };
  struct SbnNo {
    std::int64_t max_n;  // largest n <= probe with x in S b^n
  };
  using SbnVerdict = std::variant<SbnYes, SbnNo>;

  std::int64_t default_probe(NormalFormS const& x);

  // Decides whether x lies in S b^n for every n by searching for a
  // certificate x = x_i a^2 b^i with i <= probe.
  SbnVerdict in_all_Sbn(NormalFormS const& x, std::int64_t probe);
  std::string to_string(SbnVerdict const& v);

}  // namespace factorlab

#endif  // FACTORLAB_MONOID_S_HPP_
