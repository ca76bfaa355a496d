#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "factorlab/error.hpp"
#include "factorlab/monoid_s.hpp"
#include "factorlab/word.hpp"

using namespace factorlab;

namespace {
  Word w(std::string_view text) {
    return parse_word(s_alphabet(), text);
  }
}  // namespace

TEST_CASE("concat", "[word_core]") {
  CHECK(concat(w("e"), w("e")).empty());
  CHECK(concat(w("ab"), w("ba")) == w("abba"));
  CHECK(concat(w("b"), w("aab")) == w("baab"));
  CHECK(concat(w("ab"), w("ba")).size() == 4);

  auto other = make_alphabet({"x", "y"});
  CHECK_THROWS_AS(concat(w("a"), parse_word(other, "x")), InputError);

  // structurally equal alphabets are the same alphabet
  auto copy = make_alphabet({"a", "b"});
  CHECK(concat(w("a"), parse_word(copy, "b")) == w("ab"));
}

TEST_CASE("concat is associative with identity", "[word_core]") {
  std::mt19937_64 rng(7);
  auto random_word = [&rng] {
    std::vector<letter_type> letters(rng() % 7);
    for (auto& x : letters) {
      x = static_cast<letter_type>(rng() % 2);
    }
    return Word(s_alphabet(), letters);
  };
  Word const e(s_alphabet());
  for (int i = 0; i < 200; ++i) {
    auto u = random_word(), v = random_word(), x = random_word();
    CHECK(concat(concat(u, v), x) == concat(u, concat(v, x)));
    CHECK(concat(u, e) == u);
    CHECK(concat(e, u) == u);
    CHECK(concat(u, v).size() == u.size() + v.size());
  }
}

TEST_CASE("parse_word syntax", "[word_core]") {
  CHECK(w("b a a b") == w("baab"));
  CHECK(w("b^2 a^3") == w("bbaaa"));
  CHECK(w("a^0") == w("e"));
  CHECK(w("") == w("e"));
  CHECK(w("b^1 a^2").to_compressed_string() == "b^1 a^2");
  CHECK(w("baab").to_string() == "b a a b");

  try {
    w("a b x");
    FAIL("expected an error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
  CHECK_THROWS_AS(w("a^"), InputError);
  CHECK_THROWS_AS(w("a^-1"), InputError);
  CHECK_THROWS_AS(w("ab^2"), InputError);

  // multi-character names
  auto A = make_alphabet({"x1", "x2", "x"});
  CHECK(parse_word(A, "x1x2x").letters() == std::vector<letter_type>{0, 1, 2});
  CHECK(parse_word(A, "x2^3").size() == 3);
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), InputError);
}

TEST_CASE("enumerate_words", "[word_core]") {
  auto collect = [](std::size_t n) {
    std::vector<Word> out;
    auto              s = enumerate_words(s_alphabet(), n);
    while (auto x = s.next()) {
      out.push_back(*x);
    }
    return out;
  };
  auto zero = collect(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto one = collect(1);
  REQUIRE(one.size() == 3);
  CHECK(one[1] == w("a"));
  CHECK(one[2] == w("b"));

  CHECK(collect(2).size() == 7);

  for (std::size_t n = 0; n <= 10; ++n) {
    auto words = collect(n);
    CHECK(words.size() == count_words(2, n));
    CHECK(words.size() == (std::size_t(1) << (n + 1)) - 1);
    for (std::size_t i = 1; i < words.size(); ++i) {
      REQUIRE(shortlex_less(words[i - 1], words[i]));
    }
  }
  // (|S|^{n+1} - 1) / (|S| - 1) for a 3-letter alphabet
  auto         three = make_alphabet({"x", "y", "z"});
  auto         s = enumerate_words(three, 4);
  std::size_t  total = 0;
  while (s.next()) {
    ++total;
  }
  CHECK(total == (81 * 3 - 1) / 2);
}

TEST_CASE("rewrite_to_fixpoint with the relations of S", "[word_core]") {
  auto const& rs = s_rewrite_system();
  CHECK(rewrite_to_fixpoint(w("baab"), rs, 100) == w("aa"));
  CHECK(rewrite_to_fixpoint(w("aaaab"), rs, 100) == w("baaaa"));
  CHECK(rewrite_to_fixpoint(w("e"), rs, 1).empty());

  CHECK_THROWS_AS(rewrite_to_fixpoint(w("bbaabb"), rs, 1), BudgetExceeded);
  CHECK_THROWS_AS(rewrite_to_fixpoint(w("ab"), rs, 0), InputError);
}

TEST_CASE("rewriting is idempotent and never lengthens", "[word_core]") {
  auto const& rs = s_rewrite_system();
  auto        s = enumerate_words(s_alphabet(), 12);
  while (auto x = s.next()) {
    auto once = rewrite_to_fixpoint(*x, rs, 10'000);
    REQUIRE(rewrite_to_fixpoint(once, rs, 10'000) == once);
    REQUIRE(once.size() <= x->size());
    // the fixpoint is the canonical word
    REQUIRE(once == normalize(*x).word());
  }
}

TEST_CASE("rewrite systems reject bad rules", "[word_core]") {
  auto A = s_alphabet();
  CHECK_THROWS_AS(RewriteSystem(A, {{w("a"), w("aa")}}), InputError);
  CHECK_THROWS_AS(RewriteSystem(A, {{w("ab"), w("ba")}}), InputError);
  CHECK_THROWS_AS(RewriteSystem(A, {{w("e"), w("e")}}), InputError);

  // a certificate that does not decrease is caught at rewrite time
  RewriteSystem bad(A, {{w("ab"), w("ba")}}, [](Word const&) {
    return std::vector<std::int64_t>{0};
  });
  CHECK_THROWS_AS(rewrite_to_fixpoint(w("ab"), bad, 10), InternalError);

  // ab -> ba sorts; certificate counts (a before b) pairs
  RewriteSystem sorter(A, {{w("ab"), w("ba")}}, [](Word const& x) {
    return std::vector<std::int64_t>{inversions(x, letter_a, letter_b)};
  });
  CHECK(rewrite_to_fixpoint(w("aabab"), sorter, 100) == w("bbaaa"));
}

TEST_CASE("presentation text format", "[word_core]") {
  auto p = parse_presentation("generators: a b\n"
                              "relation: baab = aa\n"
                              "\n"
                              "# comment\n"
                              "relation: a a a a b = b a a a a\n");
  REQUIRE(p.alphabet->size() == 2);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].lhs.to_string() == "b a a b");
  CHECK(p.relations[1].rhs.to_string() == "b a a a a");

  auto again = parse_presentation(to_text(p));
  CHECK(again.relations[0].lhs == p.relations[0].lhs);
  CHECK(again.relations[1].rhs == p.relations[1].rhs);
  CHECK(to_text(s_presentation()) == to_text(p));

  try {
    parse_presentation("generators: a b\nrelation: bacb = aa\n");
    FAIL("expected an error");
  } catch (InputError const& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("column 13") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation("relation: a = b\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("generators: a b\nrelation: a b\n"),
                  InputError);
  CHECK_THROWS_AS(parse_presentation("generators: a a\n"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: a\n"), InputError);
}
