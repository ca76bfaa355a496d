#include "factorlab/monoid_s.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "factorlab/error.hpp"

namespace factorlab {

  RewriteSystem const& s_rewrite_system() {
    static RewriteSystem const rs = [] {
      auto const& A = s_alphabet();
      std::vector<RewriteRule> rules
          = {{parse_word(A, "b a a b"), parse_word(A, "a a")},
             {parse_word(A, "a a a a b"), parse_word(A, "b a a a a")}};
      auto certificate = [](Word const& w) {
        return std::vector<std::int64_t>{static_cast<std::int64_t>(w.size()),
                                         inversions(w, letter_a, letter_b)};
      };
      return RewriteSystem(A, std::move(rules), certificate);
    }();
    return rs;
  }

  Presentation s_presentation() {
    auto const& A = s_alphabet();
    return {A,
            {{parse_word(A, "b a a b"), parse_word(A, "a a")},
             {parse_word(A, "a a a a b"), parse_word(A, "b a a a a")}}};
  }

  ////////////////////////////////////////////////////////////////////////
  // normalize
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Run {
      letter_type  letter;
      std::int64_t count;
    };

    using Runs = std::vector<Run>;

    void push_run(Runs& runs, letter_type x, std::int64_t count) {
      if (count == 0) {
        return;
      }
      if (!runs.empty() && runs.back().letter == x) {
        runs.back().count = detail::checked_add(runs.back().count, count);
      } else {
        runs.push_back({x, count});
      }
    }

    // Drops empty runs and merges neighbours with equal letters.
    void tidy(Runs& runs) {
      Runs out;
      out.reserve(runs.size());
      for (auto const& r : runs) {
        push_run(out, r.letter, r.count);
      }
      runs.swap(out);
    }

    void append_runs(Runs& runs, NormalFormS const& x) {
      push_run(runs, letter_b, x.leading_b());
      for (auto const& blk : x.blocks()) {
        push_run(runs, letter_a, blk.a_exp);
        push_run(runs, letter_b, blk.b_exp);
      }
      push_run(runs, letter_a, x.trailing_a());
    }

    // a^{4q} b^m -> b^m a^{4q} at the leftmost a-run of length >= 4 that is
    // followed by b's.
    bool shift_fourth_powers(Runs& runs) {
      for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i].letter != letter_a || runs[i].count < 4) {
          continue;
        }
        std::int64_t moved = runs[i].count - runs[i].count % 4;
        runs[i].count -= moved;
        if (i + 2 < runs.size()) {
          runs[i + 2].count = detail::checked_add(runs[i + 2].count, moved);
        } else {
          runs.push_back({letter_a, moved});
        }
        tidy(runs);
        return true;
      }
      return false;
    }

    // b^p a^2 b^q -> b^{p-d} a^2 b^{q-d} with d = min(p, q), at the leftmost
    // a^2 run with b's on both sides.
    bool cancel_around_square(Runs& runs) {
      for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
        if (runs[i].letter != letter_a || runs[i].count != 2) {
          continue;
        }
        auto d = std::min(runs[i - 1].count, runs[i + 1].count);
        runs[i - 1].count -= d;
        runs[i + 1].count -= d;
        tidy(runs);
        return true;
      }
      return false;
    }

    NormalFormS to_normal_form(Runs const& runs) {
      std::size_t              i = 0;
      std::int64_t             m0 = 0;
      std::int64_t             n = 0;
      std::vector<NormalBlock> blocks;
      if (i < runs.size() && runs[i].letter == letter_b) {
        m0 = runs[i++].count;
      }
      while (i < runs.size()) {
        if (i + 1 == runs.size()) {
          n = runs[i++].count;
          break;
        }
        blocks.push_back({static_cast<int>(runs[i].count), runs[i + 1].count});
        i += 2;
      }
      try {
        return NormalFormS(m0, std::move(blocks), n);
      } catch (InputError const& e) {
        throw InternalError(std::string("normalize reached a non-canonical "
                                        "fixpoint: ")
                            + e.what());
      }
    }

    NormalFormS normalize_runs(Runs runs) {
      while (shift_fourth_powers(runs) || cancel_around_square(runs)) {
      }
      return to_normal_form(runs);
    }
  }  // namespace

  NormalFormS normalize(Word const& w) {
    if (!same_alphabet(*w.alphabet(), *s_alphabet())) {
      throw InputError("normalize expects a word over {a, b}");
    }
    Runs runs;
    for (auto x : w.letters()) {
      push_run(runs, x, 1);
    }
    return normalize_runs(std::move(runs));
  }

  NormalFormS normalize(std::string_view text) {
    return normalize(parse_word(s_alphabet(), text));
  }

  bool equal(Word const& u, Word const& v) {
    return normalize(u) == normalize(v);
  }

  NormalFormS multiply(NormalFormS const& x, NormalFormS const& y) {
    Runs runs;
    append_runs(runs, x);
    append_runs(runs, y);
    return normalize_runs(std::move(runs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TupleGenerator {
     public:
      explicit TupleGenerator(std::function<void(NormalFormS const&)> const& visit)
          : _visit(visit) {}

      void exact_length(std::int64_t len) {
        for (_m0 = 0; _m0 <= len; ++_m0) {
          extend(len - _m0);
        }
      }

     private:
      void extend(std::int64_t remaining) {
        _visit(NormalFormS(_m0, _blocks, remaining));
        bool first = _blocks.empty();
        for (int a_exp = 1; a_exp <= 3; ++a_exp) {
          if (a_exp == 2 && !(first && _m0 == 0)) {
            continue;
          }
          for (std::int64_t m = 1; a_exp + m <= remaining; ++m) {
            _blocks.push_back({a_exp, m});
            extend(remaining - a_exp - m);
            _blocks.pop_back();
          }
        }
      }

      std::function<void(NormalFormS const&)> const& _visit;
      std::int64_t                                   _m0 = 0;
      std::vector<NormalBlock>                       _blocks;
    };
  }  // namespace

  void for_each_element(std::size_t                                   max_len,
                        std::function<void(NormalFormS const&)> const& visit) {
    TupleGenerator gen(visit);
    for (std::size_t len = 0; len <= max_len; ++len) {
      gen.exact_length(static_cast<std::int64_t>(len));
    }
  }

  std::vector<NormalFormS> enumerate_elements(std::size_t max_len) {
    std::vector<NormalFormS> out;
    for_each_element(max_len, [&out](NormalFormS const& x) { out.push_back(x); });
    std::vector<std::pair<std::vector<letter_type>, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      keys.emplace_back(out[i].word().letters(), i);
    }
    std::sort(keys.begin(), keys.end(), [](auto const& x, auto const& y) {
      if (x.first.size() != y.first.size()) {
        return x.first.size() < y.first.size();
      }
      return x.first < y.first;
    });
    std::vector<NormalFormS> sorted;
    sorted.reserve(out.size());
    for (auto const& [key, i] : keys) {
      sorted.push_back(std::move(out[i]));
    }
    return sorted;
  }

  std::vector<std::uint64_t> count_elements_by_length(std::size_t max_len) {
    auto add = [](std::uint64_t x, std::uint64_t y) {
      std::uint64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw InputError("element count overflows 64 bits");
      }
      return r;
    };
    // tails[r]: ways to write a suffix of exact length r as blocks with
    // a-exponent in {1, 3} followed by the trailing a^n.
    std::vector<std::uint64_t> tails(max_len + 1, 0);
    for (std::size_t r = 0; r <= max_len; ++r) {
      std::uint64_t total = 1;
      for (std::size_t a_exp : {1, 3}) {
        for (std::size_t m = 1; a_exp + m <= r; ++m) {
          total = add(total, tails[r - a_exp - m]);
        }
      }
      tails[r] = total;
    }
    std::vector<std::uint64_t> counts(max_len + 1, 0);
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::uint64_t total = 0;
      for (std::size_t m0 = 0; m0 <= len; ++m0) {
        total = add(total, tails[len - m0]);
      }
      for (std::size_t m1 = 1; 2 + m1 <= len; ++m1) {
        total = add(total, tails[len - 2 - m1]);
      }
      counts[len] = total;
    }
    return counts;
  }

  ////////////////////////////////////////////////////////////////////////
  // Atoms
  ////////////////////////////////////////////////////////////////////////

  std::string AtomVerdict::to_string() const {
    switch (kind) {
      case Kind::atom:
        return "Atom";
      case Kind::unit:
        return "Unit";
      case Kind::not_atom:
        return "NotAtom(" + split->first.to_string() + " * "
               + split->second.to_string() + ")";
    }
    return "";
  }

  AtomVerdict is_atom(NormalFormS const& x) {
    if (x.is_identity()) {
      return {AtomVerdict::Kind::unit, std::nullopt};
    }
    if (x.length() == 1) {
      return {AtomVerdict::Kind::atom, std::nullopt};
    }
    auto const& letters = x.word().letters();
    Word        head(s_alphabet(), {letters.front()});
    Word        tail(s_alphabet(),
              std::vector<letter_type>(letters.begin() + 1, letters.end()));
    return {AtomVerdict::Kind::not_atom,
            std::make_pair(normalize(head), normalize(tail))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Length sets
  ////////////////////////////////////////////////////////////////////////

  std::string LengthSetReport::to_string() const {
    std::ostringstream out;
    out << '{';
    char const* sep = "";
    for (auto l : lengths) {
      out << sep << l;
      sep = ",";
    }
    out << '}';
    return out.str();
  }

  LengthSetReport length_set(NormalFormS const& x,
                             std::int64_t       cap,
                             std::size_t        word_budget) {
    if (cap < x.length()) {
      throw InputError("cap " + std::to_string(cap)
                       + " is below the minimal length "
                       + std::to_string(x.length()) + " of " + x.to_string());
    }
    // Both directions of both relations.
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 4>
        moves = {{{"baab", "aa"},
                  {"aa", "baab"},
                  {"aaaab", "baaaa"},
                  {"baaaa", "aaaab"}}};

    LengthSetReport report;
    report.element = x;
    report.cap = cap;

    std::string start;
    for (auto l : x.word().letters()) {
      start += (l == letter_a ? 'a' : 'b');
    }
    std::unordered_set<std::string> seen{start};
    std::deque<std::string>         queue{start};
    bool                            budget_hit = false;
    while (!queue.empty() && !budget_hit) {
      std::string w = std::move(queue.front());
      queue.pop_front();
      report.lengths.insert(static_cast<std::int64_t>(w.size()));
      for (auto const& [from, to] : moves) {
        auto new_size = static_cast<std::int64_t>(w.size() - from.size()
                                                  + to.size());
        if (new_size > cap) {
          continue;
        }
        for (auto pos = w.find(from); pos != std::string::npos;
             pos = w.find(from, pos + 1)) {
          std::string v = w;
          v.replace(pos, from.size(), to);
          if (seen.insert(v).second) {
            if (seen.size() > word_budget) {
              budget_hit = true;
              break;
            }
            queue.push_back(std::move(v));
          }
        }
        if (budget_hit) {
          break;
        }
      }
    }
    for (auto const& w : queue) {
      report.lengths.insert(static_cast<std::int64_t>(w.size()));
    }
    report.words_visited = seen.size();
    // Every word reduces to its normal form through relation steps that never
    // increase length (see normalize), so every representative of length
    // <= cap is reachable from the normal form inside the cutoff.
    report.exhausted = !budget_hit;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // ACCP
  ////////////////////////////////////////////////////////////////////////

  std::size_t AccpWitness::strict_inclusions() const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < depth && k < chain.size(); ++k) {
      if (chain[k].inclusion_checked && chain[k].strictness_checked) {
        ++total;
      }
    }
    return total;
  }

  AccpWitness verify_accp_failure(std::size_t depth) {
    if (depth == 0) {
      throw InputError("ACCP witness depth must be positive");
    }
    auto generator = [](std::size_t k) {
      return NormalFormS(static_cast<std::int64_t>(k), {}, 2);
    };
    auto const  b = NormalFormS::b_power(1);
    AccpWitness witness;
    witness.depth = depth;
    for (std::size_t k = 0; k <= depth; ++k) {
      auto g = generator(k);
      auto next = generator(k + 1);
      // g_k in g_{k+1} S, with cofactor b.
      auto down = left_quotient(next, g);
      if (!down.is_in() || down.value() != b || multiply(next, b) != g) {
        throw InternalError("inclusion " + g.to_string() + " in "
                            + next.to_string() + " S failed");
      }
      // g_{k+1} not in g_k S.
      if (left_quotient(g, next).is_in()) {
        throw InternalError("inclusion " + g.to_string() + " S in "
                            + next.to_string() + " S is not strict");
      }
      witness.chain.push_back({g, down.value(), true, true});
    }
    return witness;
  }

  ////////////////////////////////////////////////////////////////////////
  // x in S b^n for all n
  ////////////////////////////////////////////////////////////////////////

  std::int64_t default_probe(NormalFormS const& x) {
    return x.b_count() + 4;
  }

  SbnVerdict in_all_Sbn(NormalFormS const& x, std::int64_t probe) {
    if (probe < 0) {
      throw InputError("probe must be non-negative");
    }
    for (std::int64_t i = 0; i <= probe; ++i) {
      auto tail = i == 0 ? NormalFormS::a_power(2)
                         : NormalFormS(0, {{2, i}}, 0);
      auto q = right_quotient(x, tail);
      if (q.is_in()) {
        if (multiply(q.value(), tail) != x) {
          throw InternalError("certificate " + q.value().to_string()
                              + " a^2 b^" + std::to_string(i)
                              + " does not multiply back");
        }
        return SbnYes{i, q.value()};
      }
    }
    std::int64_t max_n = 0;
    for (std::int64_t n = 1; n <= probe; ++n) {
      if (!right_quotient(x, NormalFormS::b_power(n)).is_in()) {
        break;
      }
      max_n = n;
    }
    return SbnNo{max_n};
  }

  std::string to_string(SbnVerdict const& v) {
    if (auto const* yes = std::get_if<SbnYes>(&v)) {
      return "Yes(" + std::to_string(yes->i) + ", " + yes->x_i.to_string() + ")";
    }
    return "No(" + std::to_string(std::get<SbnNo>(v).max_n) + ")";
  }

}  // namespace factorlab
