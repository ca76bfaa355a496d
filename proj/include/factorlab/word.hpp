#ifndef FACTORLAB_WORD_HPP_
#define FACTORLAB_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace factorlab {

  using letter_type = std::uint8_t;

  struct Generator {
    letter_type id;
    std::string name;
  };

  // An ordered list of generator names. Shared between words through a
  // shared_ptr so that concatenation can detect words from different
  // alphabets.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _generators.size();
    }
    Generator const& operator[](letter_type id) const {
      return _generators[id];
    }
    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }
    std::optional<letter_type> find(std::string_view name) const;

    bool operator==(Alphabet const& that) const;

   private:
    std::vector<Generator> _generators;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  AlphabetPtr make_alphabet(std::vector<std::string> names);

  // An immutable finite sequence of generators.
  class Word {
   public:
    explicit Word(AlphabetPtr alphabet, std::vector<letter_type> letters = {});

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<letter_type> const& letters() const& noexcept {
      return _letters;
    }
    std::vector<letter_type> letters() && noexcept {
      return std::move(_letters);
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    // Number of occurrences of the given letter.
    std::size_t count(letter_type x) const;

    // Generator names separated by single spaces, "e" for the empty word.
    std::string to_string() const;
    // Exponent-compressed form, e.g. "b^2 a^3 b^1"; "e" for the empty word.
    std::string to_compressed_string() const;

    bool operator==(Word const& that) const;
    bool operator!=(Word const& that) const {
      return !(*this == that);
    }

   private:
    AlphabetPtr              _alphabet;
    std::vector<letter_type> _letters;
  };

  bool same_alphabet(Alphabet const& x, Alphabet const& y);

  // Juxtaposition uv; throws InputError if u and v use different alphabets.
  Word concat(Word const& u, Word const& v);

  // Shortlex order: shorter first, then lexicographic on letter ids.
  bool shortlex_less(Word const& u, Word const& v);

  // Parses the token syntax "b a a b", "b^2 a^3", "baab" (single-character
  // generator names may be run together) or "e" for the empty word.
  Word parse_word(AlphabetPtr const& alphabet, std::string_view text);

  // Yields every word of length <= max_len exactly once in shortlex order.
  // Single consumer.
  class WordStream {
   public:
    WordStream(AlphabetPtr alphabet, std::size_t max_len);

    std::optional<Word> next();

   private:
    AlphabetPtr              _alphabet;
    std::size_t              _max_len;
    std::vector<letter_type> _current;
    bool                     _done;
  };

  WordStream enumerate_words(AlphabetPtr alphabet, std::size_t max_len);

  // Number of words of length <= max_len over an alphabet of the given size.
  std::uint64_t count_words(std::size_t alphabet_size, std::size_t max_len);

  struct Relation {
    Word lhs;
    Word rhs;
  };

  struct Presentation {
    AlphabetPtr           alphabet;
    std::vector<Relation> relations;
  };

  // Text format:
  //   generators: a b
  //   relation: baab = aa
  // Blank lines and lines starting with '#' are ignored. Errors carry
  // "line:column" diagnostics.
  Presentation parse_presentation(std::string_view text);
  std::string  to_text(Presentation const& p);

  struct RewriteRule {
    Word pattern;
    Word replacement;
  };

  // Lexicographically compared weight that must strictly decrease along
  // every length-preserving rewrite step.
  using TerminationCertificate
      = std::function<std::vector<std::int64_t>(Word const&)>;

  // A string rewriting system applied leftmost-first. Rules must not
  // lengthen words; if any rule preserves length, a termination certificate
  // is required and is checked on every length-preserving step.
  class RewriteSystem {
   public:
    RewriteSystem(AlphabetPtr              alphabet,
                  std::vector<RewriteRule> rules,
                  TerminationCertificate   certificate = nullptr);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<RewriteRule> const& rules() const noexcept {
      return _rules;
    }
    bool has_certificate() const noexcept {
      return static_cast<bool>(_certificate);
    }
    TerminationCertificate const& certificate() const noexcept {
      return _certificate;
    }

    // Applies one rewrite at the leftmost position where some rule matches
    // (ties broken by rule order). Returns false if no rule applies.
    bool rewrite_once(std::vector<letter_type>& letters) const;

   private:
    AlphabetPtr              _alphabet;
    std::vector<RewriteRule> _rules;
    TerminationCertificate   _certificate;
    bool                     _needs_certificate;
  };

  // Rewrites until no rule applies. Throws BudgetExceeded if more than
  // step_budget steps would be needed, InputError if step_budget is 0 or the
  // alphabets differ, and InternalError if the certificate fails to decrease.
  Word rewrite_to_fixpoint(Word const&          w,
                           RewriteSystem const& rs,
                           std::size_t          step_budget);

  // Number of pairs (i, j), i < j, with w[i] == first and w[j] == second.
  std::int64_t inversions(Word const& w, letter_type first, letter_type second);

}  // namespace factorlab

#endif  // FACTORLAB_WORD_HPP_
