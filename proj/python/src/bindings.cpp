#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "factorlab/cli.hpp"
#include "factorlab/error.hpp"
#include "factorlab/group_oracle.hpp"
#include "factorlab/growth.hpp"
#include "factorlab/length_functions.hpp"
#include "factorlab/monoid_s.hpp"
#include "factorlab/ore_poly.hpp"
#include "factorlab/pi_matrix.hpp"
#include "factorlab/semigroup_algebra.hpp"

namespace py = pybind11;
using namespace factorlab;

namespace {
  std::tuple<int, std::string, std::string> run_cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<NormalFormS>(m, "NormalForm")
      .def(py::init(
               [](std::int64_t m0, std::vector<std::pair<int, std::int64_t>> const& blocks,
                  std::int64_t n) {
                 std::vector<NormalBlock> bs;
                 for (auto const& [a, b] : blocks) {
                   bs.push_back({a, b});
                 }
                 return NormalFormS(m0, std::move(bs), n);
               }),
           py::arg("m0") = 0, py::arg("blocks") = std::vector<std::pair<int, std::int64_t>>{},
           py::arg("n") = 0)
      .def_property_readonly("leading_b", &NormalFormS::leading_b)
      .def_property_readonly("trailing_a", &NormalFormS::trailing_a)
      .def_property_readonly("blocks",
                             [](NormalFormS const& x) {
                               std::vector<std::pair<int, std::int64_t>> r;
                               for (auto const& b : x.blocks()) {
                                 r.emplace_back(b.a_exp, b.b_exp);
                               }
                               return r;
                             })
      .def("a_count", &NormalFormS::a_count)
      .def("b_count", &NormalFormS::b_count)
      .def("__len__", [](NormalFormS const& x) { return x.length(); })
      .def("is_identity", &NormalFormS::is_identity)
      .def("__mul__", &multiply)
      .def("__eq__", [](NormalFormS const& x, NormalFormS const& y) { return x == y; })
      .def("__hash__", [](NormalFormS const& x) { return NormalFormHash()(x); })
      .def("__str__", &NormalFormS::to_string)
      .def("__repr__", [](NormalFormS const& x) { return "NormalForm(" + x.to_string() + ")"; });

  m.def("normalize", py::overload_cast<std::string_view>(&normalize), py::arg("word"));
  m.def(
      "equal",
      [](std::string_view u, std::string_view v) { return normalize(u) == normalize(v); },
      py::arg("u"), py::arg("v"));
  m.def(
      "left_quotient",
      [](NormalFormS const& u, NormalFormS const& x) -> std::optional<NormalFormS> {
        auto r = left_quotient(u, x);
        if (!r.is_in()) {
          return std::nullopt;
        }
        return r.value();
      },
      py::arg("u"), py::arg("x"), "z with x = u z, or None");
  m.def("is_atom", [](NormalFormS const& x) { return is_atom(x).to_string(); });
  m.def(
      "length_set",
      [](NormalFormS const& x, std::int64_t cap) {
        auto r = length_set(x, cap);
        return py::make_tuple(r.lengths, r.exhausted);
      },
      py::arg("x"), py::arg("cap"), "(lengths, exhausted)");
  m.def(
      "accp_strict_inclusions",
      [](std::size_t depth) { return verify_accp_failure(depth).strict_inclusions(); },
      py::arg("depth"));
  m.def(
      "in_all_sbn",
      [](NormalFormS const& x, std::optional<std::int64_t> probe) {
        return to_string(in_all_Sbn(x, probe ? *probe : default_probe(x)));
      },
      py::arg("x"), py::arg("probe") = py::none());
  m.def("count_elements_by_length", &count_elements_by_length, py::arg("max_len"));

  m.def(
      "alg",
      [](std::string const& op, std::string const& f, std::optional<std::string> const& g,
         std::string const& field, std::size_t cap) {
        auto const k = parse_field(field);
        auto       x = parse_algebra_element(k, f);
        if (op == "deg") {
          auto d = deg_a(x);
          return d ? std::to_string(*d) : std::string("-inf");
        }
        if (!g) {
          throw InputError("operation '" + op + "' needs two operands");
        }
        auto y = parse_algebra_element(k, *g);
        if (op == "add") {
          return alg_add(x, y).to_string();
        }
        if (op == "mul") {
          return alg_mul(x, y).to_string();
        }
        if (op == "divides") {
          return to_string(divides_right(x, y, cap));
        }
        throw InputError("unknown alg operation '" + op + "'");
      },
      py::arg("op"), py::arg("f"), py::arg("g") = py::none(), py::arg("field") = "Q",
      py::arg("cap") = 12);

  m.def(
      "growth",
      [](std::string const& monoid, std::size_t n_max, std::size_t generators) {
        return growth_table(parse_baseline(monoid), n_max, generators).dims;
      },
      py::arg("monoid"), py::arg("n_max"), py::arg("generators") = 2);
  m.def(
      "s_growth_by_words", [](std::size_t n_max) { return s_growth_by_words(n_max).dims; },
      py::arg("n_max"));
  m.def(
      "classify_growth",
      [](std::vector<std::uint64_t> const& dims) {
        GrowthTable t{"python", dims, false, dims.empty() ? 0 : dims.size() - 1};
        return classify(t).to_string();
      },
      py::arg("dims"));

  m.def(
      "_skew_check_json",
      [](std::string const& config, std::size_t samples, std::uint64_t seed,
         std::size_t threads) {
        py::gil_scoped_release release;
        return skew_check(parse_ore_config(config), samples, seed, threads).to_json().dump();
      },
      py::arg("config"), py::arg("samples"), py::arg("seed"), py::arg("threads"));
  m.def(
      "_filt_check_json",
      [](std::size_t samples, std::uint64_t seed) {
        return filtration_check(samples, seed).to_json().dump();
      },
      py::arg("samples"), py::arg("seed"));
  m.def(
      "ore_mul",
      [](std::string const& config, std::string const& f, std::string const& g) {
        auto c = parse_ore_config(config);
        if (c.kind == OreConfig::Kind::laurent) {
          return laurent_mul(parse_laurent_ore_poly(c.sd, f), parse_laurent_ore_poly(c.sd, g))
              .to_string();
        }
        return ore_mul(parse_ore_poly(c.sd, f), parse_ore_poly(c.sd, g)).to_string();
      },
      py::arg("config"), py::arg("f"), py::arg("g"));

  m.def(
      "pi_peel_chain",
      [](std::string const& matrix, std::size_t steps) {
        std::vector<std::pair<std::string, bool>> r;
        for (auto const& s : peel_chain(parse_mat2(matrix), steps)) {
          r.emplace_back(s.after.to_string(), s.ok());
        }
        return r;
      },
      py::arg("matrix"), py::arg("steps"), "[(A_k as 'a; b; c; d', checks passed)]");

  m.def("run_cli", &run_cli, py::arg("args"), "(exit code, stdout, stderr)");
}
