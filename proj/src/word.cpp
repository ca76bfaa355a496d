#include "factorlab/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "factorlab/error.hpp"

namespace factorlab {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) {
    if (names.size() > 255) {
      throw InputError("alphabets are limited to 255 generators");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto const& name = names[i];
      if (name.empty()) {
        throw InputError("generator names must be non-empty");
      }
      if (std::any_of(name.begin(), name.end(), [](unsigned char c) {
            return std::isspace(c) || c == '^';
          })) {
        throw InputError("generator name '" + name
                         + "' contains whitespace or '^'");
      }
      if (!seen.insert(name).second) {
        throw InputError("duplicate generator name '" + name + "'");
      }
      _generators.push_back({static_cast<letter_type>(i), name});
    }
  }

  std::optional<letter_type> Alphabet::find(std::string_view name) const {
    for (auto const& g : _generators) {
      if (g.name == name) {
        return g.id;
      }
    }
    return std::nullopt;
  }

  bool Alphabet::operator==(Alphabet const& that) const {
    if (size() != that.size()) {
      return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (_generators[i].name != that._generators[i].name) {
        return false;
      }
    }
    return true;
  }

  AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<Alphabet const>(std::move(names));
  }

  bool same_alphabet(Alphabet const& x, Alphabet const& y) {
    return &x == &y || x == y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet, std::vector<letter_type> letters)
      : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
    if (_alphabet == nullptr) {
      throw InputError("a word needs an alphabet");
    }
    for (auto x : _letters) {
      if (x >= _alphabet->size()) {
        throw InputError("letter " + std::to_string(x)
                         + " is not a generator of the alphabet");
      }
    }
  }

  std::size_t Word::count(letter_type x) const {
    return std::count(_letters.begin(), _letters.end(), x);
  }

  std::string Word::to_string() const {
    if (_letters.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += (*_alphabet)[_letters[i]].name;
    }
    return out;
  }

  std::string Word::to_compressed_string() const {
    if (_letters.empty()) {
      return "e";
    }
    std::ostringstream out;
    std::size_t        i = 0;
    while (i < _letters.size()) {
      std::size_t j = i;
      while (j < _letters.size() && _letters[j] == _letters[i]) {
        ++j;
      }
      if (i != 0) {
        out << ' ';
      }
      out << (*_alphabet)[_letters[i]].name << '^' << (j - i);
      i = j;
    }
    return out.str();
  }

  bool Word::operator==(Word const& that) const {
    return _letters == that._letters
           && same_alphabet(*_alphabet, *that._alphabet);
  }

  Word concat(Word const& u, Word const& v) {
    if (!same_alphabet(*u.alphabet(), *v.alphabet())) {
      throw InputError("cannot concatenate words over different alphabets");
    }
    std::vector<letter_type> letters(u.letters());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.alphabet(), std::move(letters));
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u.letters() < v.letters();
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    [[noreturn]] void parse_fail(std::string const& where,
                                 std::size_t        column,
                                 std::string const& what) {
      throw InputError(where + "column " + std::to_string(column) + ": "
                       + what);
    }

    // Appends the letters of one whitespace-free token.
    void parse_token(Alphabet const&           alphabet,
                     std::string_view          token,
                     std::size_t               column,
                     std::string const&        where,
                     std::vector<letter_type>& out) {
      std::string_view base = token;
      std::size_t      exponent = 1;
      bool             has_exponent = false;
      auto             caret = token.find('^');
      if (caret != std::string_view::npos) {
        base = token.substr(0, caret);
        auto digits = token.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(
            digits.data(), digits.data() + digits.size(), exponent);
        if (digits.empty() || ec != std::errc()
            || ptr != digits.data() + digits.size()) {
          parse_fail(where,
                     column + caret + 1,
                     "expected a non-negative exponent after '^', found '"
                         + std::string(digits) + "'");
        }
        if (exponent > (std::size_t(1) << 24)) {
          parse_fail(where, column + caret + 1, "exponent too large");
        }
        has_exponent = true;
      }
      if (base.empty()) {
        parse_fail(where, column, "missing generator before '^'");
      }
      if (auto id = alphabet.find(base)) {
        out.insert(out.end(), exponent, *id);
        return;
      }
      if ((base == "e" || base == "ε") && !has_exponent) {
        return;
      }
      // Greedy longest-match split of run-together generator names.
      std::vector<letter_type> split;
      std::size_t              pos = 0;
      while (pos < base.size()) {
        std::size_t best = 0;
        letter_type best_id = 0;
        for (auto const& g : alphabet.generators()) {
          if (g.name.size() > best && base.substr(pos, g.name.size()) == g.name) {
            best = g.name.size();
            best_id = g.id;
          }
        }
        if (best == 0) {
          parse_fail(where,
                     column + pos,
                     "unknown generator symbol '" + std::string(base.substr(pos))
                         + "'");
        }
        split.push_back(best_id);
        pos += best;
      }
      if (has_exponent) {
        parse_fail(where,
                   column,
                   "an exponent must follow a single generator, found '"
                       + std::string(base) + "'");
      }
      out.insert(out.end(), split.begin(), split.end());
    }

    std::vector<letter_type> parse_letters(Alphabet const&    alphabet,
                                           std::string_view   text,
                                           std::size_t        first_column,
                                           std::string const& where) {
      std::vector<letter_type> out;
      std::size_t              i = 0;
      while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        parse_token(alphabet, text.substr(i, j - i), first_column + i, where, out);
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Word parse_word(AlphabetPtr const& alphabet, std::string_view text) {
    return Word(alphabet, parse_letters(*alphabet, text, 1, ""));
  }

  Presentation parse_presentation(std::string_view text) {
    Presentation             result;
    std::vector<std::string> lines;
    {
      std::string        s(text);
      std::istringstream in(s);
      std::string        line;
      while (std::getline(in, line)) {
        lines.push_back(line);
      }
    }
    constexpr std::string_view gens_key = "generators:";
    constexpr std::string_view rel_key = "relation:";
    for (std::size_t n = 0; n < lines.size(); ++n) {
      std::string_view line = lines[n];
      std::string      where = "line " + std::to_string(n + 1) + ", ";
      auto             stripped = trim(line);
      if (stripped.empty() || stripped.front() == '#') {
        continue;
      }
      if (line.substr(0, gens_key.size()) == gens_key) {
        if (result.alphabet != nullptr) {
          parse_fail(where, 1, "duplicate 'generators:' line");
        }
        std::vector<std::string> names;
        std::istringstream       in{std::string(line.substr(gens_key.size()))};
        std::string              name;
        while (in >> name) {
          names.push_back(name);
        }
        try {
          result.alphabet = make_alphabet(std::move(names));
        } catch (InputError const& e) {
          parse_fail(where, gens_key.size() + 1, e.what());
        }
      } else if (line.substr(0, rel_key.size()) == rel_key) {
        if (result.alphabet == nullptr) {
          parse_fail(where, 1, "'relation:' before 'generators:'");
        }
        auto body = line.substr(rel_key.size());
        auto eq = body.find('=');
        if (eq == std::string_view::npos
            || body.find('=', eq + 1) != std::string_view::npos) {
          parse_fail(where,
                     rel_key.size() + 1,
                     "a relation needs exactly one '='");
        }
        std::size_t lhs_col = rel_key.size() + 1;
        std::size_t rhs_col = lhs_col + eq + 1;
        auto        lhs = parse_letters(
            *result.alphabet, body.substr(0, eq), lhs_col, where);
        auto rhs = parse_letters(
            *result.alphabet, body.substr(eq + 1), rhs_col, where);
        result.relations.push_back({Word(result.alphabet, std::move(lhs)),
                                    Word(result.alphabet, std::move(rhs))});
      } else {
        parse_fail(where,
                   1,
                   "expected 'generators:' or 'relation:', found '"
                       + std::string(stripped) + "'");
      }
    }
    if (result.alphabet == nullptr) {
      throw InputError("presentation has no 'generators:' line");
    }
    return result;
  }

  std::string to_text(Presentation const& p) {
    std::ostringstream out;
    out << "generators:";
    for (auto const& g : p.alphabet->generators()) {
      out << ' ' << g.name;
    }
    out << '\n';
    for (auto const& r : p.relations) {
      out << "relation: " << r.lhs.to_string() << " = " << r.rhs.to_string()
          << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  WordStream::WordStream(AlphabetPtr alphabet, std::size_t max_len)
      : _alphabet(std::move(alphabet)), _max_len(max_len), _current(), _done(false) {
    if (_alphabet == nullptr) {
      throw InputError("enumerate_words needs an alphabet");
    }
  }

  std::optional<Word> WordStream::next() {
    if (_done) {
      return std::nullopt;
    }
    Word result(_alphabet, _current);
    // Advance the odometer; roll over into the next length.
    auto k = static_cast<letter_type>(_alphabet->size());
    std::size_t i = _current.size();
    while (i > 0) {
      --i;
      if (++_current[i] < k) {
        return result;
      }
      _current[i] = 0;
    }
    if (_current.size() == _max_len || k == 0) {
      _done = true;
    } else {
      _current.assign(_current.size() + 1, 0);
    }
    return result;
  }

  WordStream enumerate_words(AlphabetPtr alphabet, std::size_t max_len) {
    return WordStream(std::move(alphabet), max_len);
  }

  std::uint64_t count_words(std::size_t alphabet_size, std::size_t max_len) {
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t n = 0; n <= max_len; ++n) {
      total += layer;
      layer *= alphabet_size;
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem::RewriteSystem(AlphabetPtr              alphabet,
                               std::vector<RewriteRule> rules,
                               TerminationCertificate   certificate)
      : _alphabet(std::move(alphabet)),
        _rules(std::move(rules)),
        _certificate(std::move(certificate)),
        _needs_certificate(false) {
    for (auto const& r : _rules) {
      if (!same_alphabet(*r.pattern.alphabet(), *_alphabet)
          || !same_alphabet(*r.replacement.alphabet(), *_alphabet)) {
        throw InputError("rewrite rule over a foreign alphabet");
      }
      if (r.pattern.empty()) {
        throw InputError("rewrite rule with empty pattern");
      }
      if (r.replacement.size() > r.pattern.size()) {
        throw InputError("rewrite rule " + r.pattern.to_string() + " -> "
                         + r.replacement.to_string() + " lengthens words");
      }
      if (r.replacement.size() == r.pattern.size()) {
        _needs_certificate = true;
      }
    }
    if (_needs_certificate && !_certificate) {
      throw InputError("length-preserving rules require a termination "
                       "certificate");
    }
  }

  bool RewriteSystem::rewrite_once(std::vector<letter_type>& letters) const {
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      for (auto const& r : _rules) {
        auto const& p = r.pattern.letters();
        if (pos + p.size() > letters.size()
            || !std::equal(p.begin(), p.end(), letters.begin() + pos)) {
          continue;
        }
        auto const& q = r.replacement.letters();
        letters.erase(letters.begin() + pos, letters.begin() + pos + p.size());
        letters.insert(letters.begin() + pos, q.begin(), q.end());
        return true;
      }
    }
    return false;
  }

  Word rewrite_to_fixpoint(Word const&          w,
                           RewriteSystem const& rs,
                           std::size_t          step_budget) {
    if (step_budget == 0) {
      throw InputError("step budget must be positive");
    }
    if (!same_alphabet(*w.alphabet(), *rs.alphabet())) {
      throw InputError("word and rewrite system use different alphabets");
    }
    std::vector<letter_type> current = w.letters();
    std::vector<letter_type> previous;
    std::size_t              steps = 0;
    while (true) {
      previous = current;
      if (!rs.rewrite_once(current)) {
        return Word(w.alphabet(), std::move(current));
      }
      if (++steps > step_budget) {
        throw BudgetExceeded("rewrite budget of " + std::to_string(step_budget)
                             + " steps exceeded");
      }
      if (current.size() == previous.size()) {
        auto before = rs.certificate()(Word(w.alphabet(), previous));
        auto after = rs.certificate()(Word(w.alphabet(), current));
        if (!(after < before)) {
          throw InternalError("termination certificate did not decrease");
        }
      }
    }
  }

  std::int64_t inversions(Word const& w, letter_type first, letter_type second) {
    std::int64_t seen = 0;
    std::int64_t total = 0;
    for (auto x : w.letters()) {
      if (x == first) {
        ++seen;
      } else if (x == second) {
        total += seen;
      }
    }
    return total;
  }

}  // namespace factorlab
