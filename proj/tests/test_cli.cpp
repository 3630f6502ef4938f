#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "klrpoly/cli.hpp"
#include "klrpoly/verify.hpp"

using namespace klrpoly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "klrpoly");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string &hay, const std::string &needle) { return hay.find(needle) != std::string::npos; }

int count_of(const std::string &hay, const std::string &needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

} // namespace

TEST_CASE("rpoly") {
  CHECK(run({"rpoly", "2354167", "3456172", "--kind", "rtilde"}).out == "q^4\n");
  CHECK(run({"rpoly", "123", "123", "--kind", "r"}).out == "1\n");
  CHECK(run({"rpoly", "123", "213", "--kind", "r"}).out == "q-1\n");
  CHECK(run({"rpoly", "123", "321"}).out == "q^3+q\n");

  const auto j = nlohmann::json::parse(run({"rpoly", "123", "321", "--kind", "r", "--json"}).out);
  CHECK(j["schema"] == "kl-rpoly/1");
  CHECK(j["polynomial"] == "q^3-2q^2+2q-1");
  CHECK(j["coefficients"]["0"] == -1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"rpoly", "12x", "123"}).code == kExitUsage);
  CHECK(run({"rpoly", "12", "123"}).code == kExitUsage);
  CHECK(run({"rpoly", "123", "321", "--kind", "s"}).code == kExitUsage);
  CHECK(run({"verify", "bogus", "--all-n", "3"}).code == kExitUsage);
  CHECK(run({"verify", "inversion"}).code == kExitUsage);
  CHECK(run({"verify", "involution", "--interval", "123", "123"}).code == kExitUsage);
  CHECK(run({"graph", "7"}).code == kExitUsage);
  CHECK(run({"table", "0"}).code == kExitUsage);

  const auto over = run({"verify", "dyer", "--all-n", "5"});
  CHECK(over.code == kExitUsage);
  CHECK(contains(over.err, "--max-n"));
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  const auto inv = run({"verify", "inversion", "--all-n", "3"});
  CHECK(inv.code == kExitOk);
  CHECK(contains(inv.out, "pairs_checked: 19"));
  CHECK(contains(inv.out, "status: pass"));

  const auto ref = run({"verify", "refinement", "--interval", "2354167", "3564271", "--k", "3"});
  CHECK(ref.code == kExitOk);
  CHECK(contains(ref.out, "sum: -q^5"));

  const auto eq = run({"verify", "equidist", "--interval", "123", "321", "--json"});
  CHECK(eq.code == kExitOk);
  CHECK(contains(run({"verify", "equidist", "--interval", "123", "321"}).out, "census: (3,3)\n"));
  const auto j = nlohmann::json::parse(eq.out);
  CHECK(j["schema"] == "kl-rpoly/1");
  CHECK(j["status"] == "pass");
  CHECK(j["details"]["census"] == nlohmann::json::array({3, 3}));
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(run({"verify", "dyer", "--interval", "123", "321", "--json", "--timing"}).out)
            .contains("elapsed_ms"));

  for (const char *target : {"dyer", "changevar", "involution", "equidist", "refinement"}) {
    CAPTURE(target);
    CHECK(run({"verify", target, "--all-n", "3"}).code == kExitOk);
  }
}

TEST_CASE("output does not depend on the worker count") {
  setenv("KLRPOLY_THREADS", "1", 1);
  const auto one = run({"verify", "refinement", "--all-n", "4", "--json"});
  setenv("KLRPOLY_THREADS", "4", 1);
  const auto four = run({"verify", "refinement", "--all-n", "4", "--json"});
  unsetenv("KLRPOLY_THREADS");
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
}

TEST_CASE("failures replay through --interval") {
  const Failure f{Target::Refinement, parse_permutation("2354167"), parse_permutation("3564271"), 3, "boom"};
  CHECK(f.replay() == "verify refinement --interval 2354167 3564271 --k 3");
  const Failure g{Target::Dyer, parse_permutation("123"), parse_permutation("321"), std::nullopt, "boom"};
  CHECK(g.replay() == "verify dyer --interval 123 321");

  RunReport rep;
  rep.failures.push_back(f);
  CHECK_FALSE(rep.passed());
  CHECK(contains(rep.to_text(), "counterexample: verify refinement --interval 2354167 3564271 --k 3 : boom"));
  CHECK(contains(rep.to_text(), "status: fail"));
  CHECK(rep.to_json()["status"] == "fail");
}

TEST_CASE("graph") {
  const auto dot = run({"graph", "3", "--format", "dot"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.starts_with("digraph bruhat_S3 {"));
  CHECK(count_of(dot.out, " -> ") == 9);
  CHECK(contains(dot.out, "\"123\" -> \"213\" [label=\"(1,2)\"];"));
  CHECK(contains(dot.out, "\"123\" -> \"321\" [label=\"(1,3)\"];"));

  const auto one = nlohmann::json::parse(run({"graph", "1", "--format", "json"}).out);
  CHECK(one["schema"] == "kl-rpoly/1");
  CHECK(one["nodes"].size() == 1);
  CHECK(one["edges"].empty());

  const auto four = nlohmann::json::parse(run({"graph", "4", "--format", "json"}).out);
  CHECK(four["nodes"].size() == 24);
  CHECK(four["edges"].size() == 24 * 6 / 2);
}

TEST_CASE("paths") {
  const auto inc = run({"paths", "2314", "4312", "--direction", "inc"});
  CHECK(contains(inc.out, "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312\n"));
  CHECK(run({"paths", "123", "123", "--direction", "inc"}).out == "123\n");

  const auto vp = run({"paths", "1234", "4312", "--vpaths"});
  CHECK(vp.code == kExitOk);
  CHECK(contains(vp.out, "+ 1234 -(2,3)-> 1324 -(1,3)-> *2314* -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312\n"
                         "    I: 1234 -(2,3)-> 1324 -(1,3)-> 2314 -(1,2)-> *3214* -(1,4)-> 4213 -(2,4)-> 4312\n"));
  CHECK(count_of(vp.out, "    I: ") == 32);

  const auto j = nlohmann::json::parse(run({"paths", "123", "321", "--json"}).out);
  CHECK(j["schema"] == "kl-rpoly/1");
  CHECK(j["paths"].size() == 2);
}

TEST_CASE("classify") {
  CHECK(run({"classify", "432596178", "453697281"}).out ==
        "s_interval: yes\nD(u,v): {2,3,4,6,7,8,9}\nb: (1,2,3,5,6,7,8)\nm: 2\nj0: 3\n");
  CHECK(contains(run({"classify", "1234", "4321"}).out, "failure: condition-3\n"));
  const auto j = nlohmann::json::parse(run({"classify", "2354167", "3564271", "--json"}).out);
  CHECK(j["schema"] == "kl-rpoly/1");
  CHECK(j["is_s_interval"] == true);
}

TEST_CASE("table") {
  const auto t = run({"table", "3"});
  CHECK(t.out.starts_with("u,v,rtilde\n123,123,1\n"));
  CHECK(contains(t.out, "\n123,321,q^3+q\n"));
  CHECK(count_of(t.out, "\n") == 20);
}
