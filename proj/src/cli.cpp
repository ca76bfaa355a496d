#include "factorlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "factorlab/error.hpp"
#include "factorlab/growth.hpp"
#include "factorlab/length_functions.hpp"
#include "factorlab/monoid_s.hpp"
#include "factorlab/ore_poly.hpp"
#include "factorlab/pi_matrix.hpp"
#include "factorlab/semigroup_algebra.hpp"

namespace factorlab::cli {

  using nlohmann::json;

  std::size_t worker_threads() {
    if (char const* env = std::getenv("FACTORLAB_THREADS")) {
      char* end = nullptr;
      auto  n = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && n > 0) {
        return static_cast<std::size_t>(n);
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  namespace {
    struct Options {
      bool          json = false;
      std::uint64_t seed = 1;
      std::size_t   cap = 12;
      std::size_t   depth = 20;
      std::int64_t  probe = -1;
      std::size_t   samples = 1000;
      std::size_t   steps = 25;
      std::size_t   nmax = 16;
      std::size_t   generators = 2;
      std::string   config = "weyl";
      std::string   field = "Q";
      std::string   monoid = "S";
      std::string   format = "csv";
      std::string   candidate = "nf_length";
      std::string   matrix = "1; x; 1; x*y";
      bool          classify = false;
      std::vector<std::string> positional;
    };

    std::int64_t candidate_value(std::string const& name, NormalFormS const& x) {
      if (name == "nf_length") {
        return x.length();
      }
      if (name == "a_count") {
        return x.a_count();
      }
      if (name == "a_plus_b_count") {
        return x.a_count() + x.b_count();
      }
      throw InputError("unknown candidate '" + name
                       + "' (expected nf_length, a_count or a_plus_b_count)");
    }

    std::string const& positional(Options const& o, std::size_t i, char const* what) {
      if (i >= o.positional.size()) {
        throw InputError(std::string("missing argument: ") + what);
      }
      return o.positional[i];
    }

    int cmd_normalize(Options const& o, std::ostream& out) {
      auto x = normalize(positional(o, 0, "WORD"));
      if (o.json) {
        out << json{{"input", o.positional[0]}, {"normal_form", x.to_string()},
                    {"length", x.length()}}
                   .dump()
            << "\n";
      } else {
        out << x.to_string() << "\n";
      }
      return exit_ok;
    }

    int cmd_equal(Options const& o, std::ostream& out) {
      auto u = normalize(positional(o, 0, "WORD1"));
      auto v = normalize(positional(o, 1, "WORD2"));
      bool same = u == v;
      if (o.json) {
        out << json{{"equal", same}, {"normal_forms", {u.to_string(), v.to_string()}}}.dump()
            << "\n";
      } else {
        out << (same ? "true" : "false") << "\n";
      }
      return exit_ok;
    }

    int cmd_atom(Options const& o, std::ostream& out) {
      auto x = normalize(positional(o, 0, "WORD"));
      auto v = is_atom(x);
      if (o.json) {
        json j{{"element", x.to_string()}, {"verdict", v.to_string()}};
        if (v.split) {
          j["split"] = {v.split->first.to_string(), v.split->second.to_string()};
        }
        out << j.dump() << "\n";
      } else {
        out << v.to_string() << "\n";
      }
      return exit_ok;
    }

    int cmd_lengths(Options const& o, std::ostream& out) {
      auto x = normalize(positional(o, 0, "WORD"));
      auto r = length_set(x, static_cast<std::int64_t>(o.cap));
      if (o.json) {
        out << json{{"element", x.to_string()},
                    {"cap", r.cap},
                    {"lengths", r.lengths},
                    {"exhausted", r.exhausted},
                    {"words_visited", r.words_visited}}
                   .dump()
            << "\n";
      } else {
        out << r.to_string() << (r.exhausted ? "" : " (partial: word budget reached)") << "\n";
      }
      return exit_ok;
    }

    int cmd_accp(Options const& o, std::ostream& out) {
      auto w = verify_accp_failure(o.depth);
      auto strict = w.strict_inclusions();
      if (o.json) {
        auto links = json::array();
        for (auto const& l : w.chain) {
          links.push_back({{"generator", l.generator.to_string()},
                           {"cofactor", l.cofactor.to_string()},
                           {"inclusion_checked", l.inclusion_checked},
                           {"strictness_checked", l.strictness_checked}});
        }
        out << json{{"depth", w.depth}, {"strict_inclusions", strict}, {"chain", links}}.dump()
            << "\n";
      } else {
        for (std::size_t k = 0; k + 1 < w.chain.size(); ++k) {
          out << "(" << w.chain[k].generator.to_string() << ")S  <  ("
              << w.chain[k + 1].generator.to_string() << ")S\n";
        }
        out << strict << " strict inclusions\n";
      }
      return strict == o.depth ? exit_ok : exit_violation;
    }

    int cmd_in_all_sbn(Options const& o, std::ostream& out) {
      auto x = normalize(positional(o, 0, "WORD"));
      auto probe = o.probe >= 0 ? o.probe : default_probe(x);
      auto v = in_all_Sbn(x, probe);
      if (o.json) {
        json j{{"element", x.to_string()}, {"probe", probe}, {"verdict", to_string(v)}};
        if (auto const* yes = std::get_if<SbnYes>(&v)) {
          j["i"] = yes->i;
          j["x_i"] = yes->x_i.to_string();
        } else {
          j["max_n"] = std::get<SbnNo>(v).max_n;
        }
        out << j.dump() << "\n";
      } else {
        out << to_string(v) << "\n";
      }
      return exit_ok;
    }

    int cmd_alg(Options const& o, std::ostream& out) {
      auto const& op = positional(o, 0, "OP");
      auto const  field = parse_field(o.field);
      auto        f = parse_algebra_element(field, positional(o, 1, "F"));
      json        j{{"op", op}, {"field", field.to_string()}, {"f", f.to_string()}};
      std::string text;
      if (op == "deg") {
        auto d = deg_a(f);
        text = d ? std::to_string(*d) : "-inf";
        j["deg_a"] = d ? json(*d) : json("-inf");
      } else if (op == "add" || op == "mul") {
        auto g = parse_algebra_element(field, positional(o, 2, "G"));
        auto r = op == "add" ? alg_add(f, g) : alg_mul(f, g);
        text = r.to_string();
        j["g"] = g.to_string();
        j["result"] = text;
      } else if (op == "divides") {
        auto g = parse_algebra_element(field, positional(o, 2, "G"));
        auto v = divides_right(f, g, o.cap);
        text = to_string(v);
        j["g"] = g.to_string();
        j["cap"] = o.cap;
        j["verdict"] = text;
        if (std::holds_alternative<DivUnknown>(v)) {
          if (auto exact = divides_right_monomial(f, g)) {
            j["monomial_resolution"] = to_string(*exact);
            text += "; monomial resolution: " + to_string(*exact);
          }
        }
      } else {
        throw InputError("unknown alg operation '" + op + "' (expected add, mul, deg, divides)");
      }
      out << (o.json ? j.dump() : text) << "\n";
      return exit_ok;
    }

    int cmd_growth(Options const& o, std::ostream& out) {
      auto kind = parse_baseline(o.monoid);
      auto table = growth_table(kind, o.nmax, o.generators);
      std::optional<GrowthClass> cls;
      if (o.classify) {
        cls = classify(table);
      }
      if (o.json) {
        json j{{"monoid", to_string(kind)},
               {"description", table.description},
               {"dims", table.dims},
               {"truncated", table.truncated}};
        if (cls) {
          j["classification_hint"] = cls->to_string();
        }
        out << j.dump() << "\n";
        return exit_ok;
      }
      if (o.format == "csv") {
        out << table.to_csv();
      } else if (o.format == "gnuplot") {
        out << table.to_gnuplot();
      } else {
        throw InputError("unknown format '" + o.format + "' (expected csv or gnuplot)");
      }
      if (cls) {
        out << "# heuristic classification: " << cls->to_string() << "\n";
      }
      return exit_ok;
    }

    int cmd_skew_check(Options const& o, std::ostream& out) {
      auto config = parse_ore_config(o.config);
      auto report = skew_check(config, o.samples, o.seed, worker_threads());
      if (o.json) {
        out << report.to_json().dump() << "\n";
      } else {
        out << "config " << report.config << ", " << report.samples << " samples, mu = deg_y\n"
            << "right length law violations: " << report.right_violations << "\n"
            << "leading coefficient law violations: " << report.lead_violations << "\n"
            << "length bound violations: " << report.bf_violations << "\n";
        for (auto const& f : report.failures) {
          out << "  " << f << "\n";
        }
      }
      return report.ok() ? exit_ok : exit_violation;
    }

    int cmd_filt_check(Options const& o, std::ostream& out) {
      auto report = filtration_check(o.samples, o.seed);
      if (o.json) {
        out << report.to_json().dump() << "\n";
      } else {
        out << "weyl, " << report.samples
            << " samples, additivity violations: " << report.violations << "\n";
        for (auto const& f : report.failures) {
          out << "  " << f << "\n";
        }
      }
      return report.ok() ? exit_ok : exit_violation;
    }

    int cmd_lenfn_check(Options const& o, std::ostream& out) {
      auto name = o.candidate;
      candidate_value(name, NormalFormS());  // validates the name
      auto spec = s_length_candidate(
          name, [name](NormalFormS const& x) { return candidate_value(name, x); });
      auto r = refute_right_length_function(spec);
      if (o.json) {
        auto j = to_json(r.report, spec.show);
        j["refuted"] = r.found;
        j["n"] = r.n;
        j["bound"] = r.bound;
        out << j.dump() << "\n";
      } else if (r.found) {
        out << "candidate " << name << " violates the right contract at n = " << r.n
            << " (bound " << r.bound << ")\n";
        for (auto const& v : r.report.violations) {
          out << "  " << v.triple.a.to_string() << " = (" << v.triple.b.to_string() << ")("
              << v.triple.c.to_string() << "): lambda = " << v.lambda_a << ", " << v.lambda_b
              << ", " << v.lambda_c << " [" << v.rule << "]\n";
        }
      } else {
        out << "candidate " << name << " not refuted up to n = " << r.bound << "\n";
      }
      return r.found ? exit_violation : exit_ok;
    }

    int cmd_pi_demo(Options const& o, std::ostream& out) {
      auto a = parse_mat2(o.matrix);
      if (!is_special_form(a)) {
        throw InputError("matrix " + a.to_string() + " is not of special form");
      }
      auto chain = peel_chain(a, o.steps);
      bool ok = chain.size() == o.steps
                && std::all_of(chain.begin(), chain.end(), [](auto const& s) { return s.ok(); });
      if (o.json) {
        auto steps = json::array();
        for (auto const& s : chain) {
          steps.push_back({{"after", s.after.to_string()},
                           {"det", det(s.after).to_string()},
                           {"product_ok", s.product_ok},
                           {"u_in_R", s.u_in_r},
                           {"u_nonunit", s.u_nonunit},
                           {"after_in_R", s.after_in_r},
                           {"after_special", s.after_special},
                           {"power_ok", s.power_ok}});
        }
        out << json{{"start", a.to_string()}, {"steps", steps}, {"ok", ok}}.dump() << "\n";
      } else {
        out << "A_0 = [" << a.to_string() << "]\n";
        for (std::size_t k = 0; k < chain.size(); ++k) {
          auto const& s = chain[k];
          out << "A_" << k + 1 << " = [" << s.after.to_string() << "]  det = "
              << det(s.after).to_string() << "  " << (s.ok() ? "ok" : "FAILED") << "\n";
        }
        out << (ok ? "every step: U A' = A, A' in R of special form, U = diag(1, y) a nonunit\n"
                   : "chain check failed\n");
      }
      return ok ? exit_ok : exit_violation;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization experiments in the monoid S = <a, b | b a^2 b = a^2, "
                 "a^4 b = b a^4> and related rings"};
    app.name("factorlab");
    app.require_subcommand(1);
    Options o;

    auto add_json = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
    auto word_cmd = [&](char const* name, char const* help, char const* arg) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option(arg, o.positional, "word, e.g. \"b a a b\" or \"b^2 a^3\"")
          ->required()
          ->expected(1);
      add_json(sub);
      return sub;
    };

    auto* normalize_cmd = word_cmd("normalize", "print the normal form of a word", "WORD");
    auto* equal_cmd = app.add_subcommand("equal", "decide whether two words are equal in S");
    equal_cmd->add_option("WORDS", o.positional, "two words")->required()->expected(2);
    add_json(equal_cmd);
    auto* atom_cmd = word_cmd("atom", "decide whether an element is an atom", "WORD");
    auto* lengths_cmd = word_cmd("lengths", "factorization lengths up to --cap", "WORD");
    lengths_cmd->add_option("--cap", o.cap, "largest length to search")->capture_default_str();
    auto* accp_cmd = app.add_subcommand("accp", "verify the ascending chain b^k a^2 S");
    accp_cmd->add_option("--depth", o.depth, "number of inclusions")->capture_default_str();
    add_json(accp_cmd);
    auto* sbn_cmd = word_cmd("in-all-sbn", "decide whether x lies in S b^n for all n", "WORD");
    sbn_cmd->add_option("--probe", o.probe, "largest i tried for x = x_i a^2 b^i");
    auto* alg_cmd = app.add_subcommand("alg", "arithmetic in K[S]: add, mul, deg, divides");
    alg_cmd->add_option("ARGS", o.positional, "OP F [G], e.g. mul \"1 + a\" \"1 + b\"")
        ->required()
        ->expected(2, 3);
    alg_cmd->add_option("--field", o.field, "Q or F_p")->capture_default_str();
    alg_cmd->add_option("--cap", o.cap, "support length bound for divides")
        ->capture_default_str();
    add_json(alg_cmd);
    auto* growth_cmd = app.add_subcommand("growth", "growth table dim V^n");
    growth_cmd->add_option("--monoid", o.monoid, "free, free-commutative or S")
        ->capture_default_str();
    growth_cmd->add_option("--nmax", o.nmax, "largest n")->capture_default_str();
    growth_cmd->add_option("--generators", o.generators, "generators of the baselines")
        ->capture_default_str();
    growth_cmd->add_option("--format", o.format, "csv or gnuplot")->capture_default_str();
    growth_cmd->add_flag("--classify", o.classify, "append a heuristic growth class");
    add_json(growth_cmd);
    auto* skew_cmd = app.add_subcommand("skew-check", "random checks of skew length functions");
    skew_cmd->add_option("--config", o.config, "weyl, shift, qplane:q=Q or qtorus:q=Q")
        ->capture_default_str();
    skew_cmd->add_option("--samples", o.samples, "number of pairs")->capture_default_str();
    skew_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_json(skew_cmd);
    auto* filt_cmd = app.add_subcommand("filt-check", "additivity of the Weyl filtration degree");
    filt_cmd->add_option("--samples", o.samples, "number of pairs")->default_val(500);
    filt_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_json(filt_cmd);
    auto* lenfn_cmd = app.add_subcommand(
        "lenfn-check", "try to refute a candidate right length function on S");
    lenfn_cmd->add_option("--candidate", o.candidate, "nf_length, a_count or a_plus_b_count")
        ->capture_default_str();
    add_json(lenfn_cmd);
    auto* pi_cmd = app.add_subcommand("pi-demo", "peel chain A = diag(1, y) A' in the PI ring");
    pi_cmd->add_option("--steps", o.steps, "number of peels")->capture_default_str();
    pi_cmd->add_option("--matrix", o.matrix, "\"a; b; c; d\" in x, y, y^-1")
        ->capture_default_str();
    add_json(pi_cmd);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      auto* sub = app.get_subcommands().front();
      if (sub == normalize_cmd) {
        return cmd_normalize(o, out);
      }
      if (sub == equal_cmd) {
        return cmd_equal(o, out);
      }
      if (sub == atom_cmd) {
        return cmd_atom(o, out);
      }
      if (sub == lengths_cmd) {
        return cmd_lengths(o, out);
      }
      if (sub == accp_cmd) {
        return cmd_accp(o, out);
      }
      if (sub == sbn_cmd) {
        return cmd_in_all_sbn(o, out);
      }
      if (sub == alg_cmd) {
        return cmd_alg(o, out);
      }
      if (sub == growth_cmd) {
        return cmd_growth(o, out);
      }
      if (sub == skew_cmd) {
        return cmd_skew_check(o, out);
      }
      if (sub == filt_cmd) {
        return cmd_filt_check(o, out);
      }
      if (sub == lenfn_cmd) {
        return cmd_lenfn_check(o, out);
      }
      if (sub == pi_cmd) {
        return cmd_pi_demo(o, out);
      }
      throw InternalError("unhandled subcommand");
    } catch (InputError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (BudgetExceeded const& e) {
      err << "budget exceeded: " << e.what() << "\n";
      return exit_usage;
    }
  }

}  // namespace factorlab::cli
