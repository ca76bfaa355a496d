#ifndef FACTORLAB_TESTS_SUPPORT_ORACLES_HPP_
#define FACTORLAB_TESTS_SUPPORT_ORACLES_HPP_

// Brute-force reference computations used to check the library. Nothing in
// here calls into the library: words are plain strings over "ab", and the
// group G is evaluated letter by letter with alpha applied one step at a
// time.

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

  // Free group letters: b, B = b^-1, c, C = c^-1.
  inline char alpha_once(char x) {
    switch (x) {
      case 'b':
        return 'c';
      case 'c':
        return 'B';
      case 'B':
        return 'C';
      case 'C':
        return 'b';
    }
    return '?';
  }

  inline char inverse_letter(char x) {
    switch (x) {
      case 'b':
        return 'B';
      case 'B':
        return 'b';
      case 'c':
        return 'C';
      case 'C':
        return 'c';
    }
    return '?';
  }

  inline void push_reduced(std::string& w, char x) {
    if (!w.empty() && w.back() == inverse_letter(x)) {
      w.pop_back();
    } else {
      w.push_back(x);
    }
  }

  // (free word as a string over bBcC, exponent of a)
  using Element = std::pair<std::string, std::int64_t>;

  // Image of a word over "ab" in G, by pushing every a to the right one
  // letter at a time: a x = alpha(x) a.
  inline Element evaluate(std::string const& word) {
    std::string  f;
    std::int64_t t = 0;
    for (char x : word) {
      if (x == 'a') {
        ++t;
        continue;
      }
      char y = 'b';
      for (std::int64_t i = 0; i < t; ++i) {
        y = alpha_once(y);
      }
      push_reduced(f, y);
    }
    return {f, t};
  }

  // All words of length <= bound equal to w under the relations
  // baab = aa and aaaab = baaaa, applied in both directions.
  inline std::set<std::string> congruence_class(std::string const& w,
                                                std::size_t        bound) {
    static std::vector<std::pair<std::string, std::string>> const moves
        = {{"baab", "aa"}, {"aa", "baab"}, {"aaaab", "baaaa"}, {"baaaa", "aaaab"}};
    std::set<std::string>   seen{w};
    std::deque<std::string> queue{w};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto const& [from, to] : moves) {
        for (auto pos = u.find(from); pos != std::string::npos;
             pos = u.find(from, pos + 1)) {
          auto v = u;
          v.replace(pos, from.size(), to);
          if (v.size() <= bound && seen.insert(v).second) {
            queue.push_back(v);
          }
        }
      }
    }
    return seen;
  }

  inline std::vector<std::string> all_words(std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t              begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        out.push_back(out[i] + "a");
        out.push_back(out[i] + "b");
      }
      begin = end;
    }
    return out;
  }

  // Some v with |v| <= max_len and u v = x in G, shortest first.
  inline std::vector<std::string> left_cofactors(std::string const& u,
                                                 std::string const& x,
                                                 std::size_t        max_len) {
    std::vector<std::string> out;
    auto                     target = evaluate(x);
    for (auto const& v : all_words(max_len)) {
      if (evaluate(u + v) == target) {
        out.push_back(v);
      }
    }
    return out;
  }

  inline std::vector<std::string> right_cofactors(std::string const& x,
                                                  std::string const& v,
                                                  std::size_t        max_len) {
    std::vector<std::string> out;
    auto                     target = evaluate(x);
    for (auto const& u : all_words(max_len)) {
      if (evaluate(u + v) == target) {
        out.push_back(u);
      }
    }
    return out;
  }

  inline std::string power(char x, std::size_t n) {
    return std::string(n, x);
  }

}  // namespace oracle

#endif  // FACTORLAB_TESTS_SUPPORT_ORACLES_HPP_
