#include "catch_amalgamated.hpp"

#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "factorlab/cli.hpp"

using factorlab::cli::run;
using nlohmann::json;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("word commands", "[cli]") {
  auto r = call({"normalize", "b a a b"});
  CHECK(r.code == 0);
  CHECK(r.out == "a^2\n");

  r = call({"normalize", "b a a b", "--json"});
  auto j = json::parse(r.out);
  CHECK(j["normal_form"] == "a^2");
  CHECK(j["length"] == 2);

  CHECK(call({"equal", "a^4 b", "b a^4"}).out == "true\n");
  CHECK(call({"equal", "a b", "b a"}).out == "false\n");
  CHECK(call({"atom", "b"}).out == "Atom\n");
  CHECK(call({"atom", "a b"}).out == "NotAtom(a^1 * b^1)\n");
  CHECK(call({"atom", ""}).out == "Unit\n");

  r = call({"lengths", "a a", "--cap", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "{2,4,6,8}\n");
  j = json::parse(call({"lengths", "a^2", "--cap", "12", "--json"}).out);
  CHECK(j["lengths"] == json::array({2, 4, 6, 8, 10, 12}));
  CHECK(j["exhausted"] == true);

  j = json::parse(call({"in-all-sbn", "a^2 b^3", "--json"}).out);
  CHECK(j["x_i"] == "e");
  CHECK(j["i"] == 3);
  CHECK(call({"in-all-sbn", "a b"}).out.starts_with("No"));
}

TEST_CASE("accp", "[cli]") {
  auto r = call({"accp", "--depth", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("20 strict inclusions\n"));
  auto j = json::parse(call({"accp", "--depth", "5", "--json"}).out);
  CHECK(j["strict_inclusions"] == 5);
  CHECK(j["chain"].size() == 6);
  CHECK(call({"accp", "--depth", "0"}).code == 2);
}

TEST_CASE("algebra", "[cli]") {
  CHECK(call({"alg", "mul", "1 + a", "1 + b"}).out
        == "1 * e + 1 * a^1 + 1 * b^1 + 1 * a^1 b^1\n");
  CHECK(call({"alg", "add", "a", "-1 * a"}).out == "0\n");
  CHECK(call({"alg", "deg", "b + a^3 b", "--field", "F_5"}).out == "3\n");
  CHECK(call({"alg", "divides", "1 + b", "b + b^2", "--cap", "6"}).out == "Yes(1 * b^1)\n");
  auto j = json::parse(call({"alg", "divides", "a", "b", "--json"}).out);
  CHECK(j["verdict"] == "No");
  CHECK(call({"alg", "mul", "a"}).code == 2);
  CHECK(call({"alg", "pow", "a", "b"}).code == 2);
  CHECK(call({"alg", "mul", "a", "b", "--field", "F_4"}).code == 2);
}

TEST_CASE("growth", "[cli]") {
  auto r = call({"growth", "--monoid", "free-commutative", "--nmax", "2"});
  CHECK(r.out == "n,dim\n0,1\n1,3\n2,6\n");
  r = call({"growth", "--monoid", "S", "--nmax", "12", "--json", "--classify"});
  auto j = json::parse(r.out);
  CHECK(j["dims"].back() == 3314);
  CHECK(j["classification_hint"].get<std::string>().starts_with("exponential"));
  CHECK(call({"growth", "--format", "gnuplot", "--nmax", "3"}).out.starts_with("#"));
  CHECK(call({"growth", "--format", "svg"}).code == 2);
}

TEST_CASE("checks and exit codes", "[cli]") {
  auto r = call({"skew-check", "--config", "qplane:q=3", "--samples", "100", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["mu"] == "deg_y");
  CHECK(j["samples"] == 100);
  CHECK(call({"skew-check", "--config", "nope"}).code == 2);

  CHECK(call({"filt-check", "--samples", "50"}).code == 0);

  for (auto const* name : {"nf_length", "a_count", "a_plus_b_count"}) {
    r = call({"lenfn-check", "--candidate", name, "--json"});
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["refuted"] == true);
    CHECK(!j["violations"].empty());
  }
  CHECK(call({"lenfn-check", "--candidate", "zero"}).code == 2);
}

TEST_CASE("pi-demo", "[cli]") {
  auto r = call({"pi-demo", "--steps", "25"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A_25 = [1; x; y^-25; x*y^-24]") != std::string::npos);
  auto j = json::parse(call({"pi-demo", "--steps", "2", "--json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["steps"].size() == 2);
  CHECK(call({"pi-demo", "--matrix", "1; 1; 1; 1"}).code == 2);
}

TEST_CASE("usage", "[cli]") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"normalize"}).code == 2);
  CHECK(call({"normalize", "a c"}).code == 2);
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skew-check") != std::string::npos);
}

TEST_CASE("thread count", "[cli]") {
  ::setenv("FACTORLAB_THREADS", "3", 1);
  CHECK(factorlab::cli::worker_threads() == 3);
  ::setenv("FACTORLAB_THREADS", "zero", 1);
  CHECK(factorlab::cli::worker_threads() >= 1);
  ::unsetenv("FACTORLAB_THREADS");
}
