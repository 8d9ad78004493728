// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdec/cli.hpp"
#include "test_util.hpp"

using namespace symdec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "symdec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tables") {
    const auto e = run({"tables", "--family", "eulerian", "--n", "6"});
    CHECK(e.code == 0);
    CHECK(e.out == "1\n1,1\n1,4,1\n1,11,11,1\n1,26,66,26,1\n1,57,302,302,57,1\n");
    const auto d = run({"tables", "--family", "derangement", "--n", "1"});
    CHECK(d.out == "0\n");
    const auto b = run({"tables", "--family", "typeb", "--n", "2"});
    CHECK(b.out == "1,1\n1,6,1\n");
    const auto latex = run({"tables", "--family", "eulerian", "--n", "3", "--format", "latex"});
    CHECK(latex.out.find("$3$\t&\t$1+4x+x^2$") != std::string::npos);
    const auto csv = run({"tables", "--family", "derangement", "--n", "2", "--format", "csv"});
    CHECK(csv.out == "n,coefficients\n1,\"0\"\n2,\"0,1\"\n");
    CHECK(run({"tables", "--family", "bogus"}).code == kExitUsage);
  }

  TEST_CASE("decompose") {
    const auto r = run({"decompose", "--poly", "1,1018,10678,14498,2933,32", "--degree", "5", "--kind", "I"});
    CHECK(r.code == 0);
    CHECK(r.out == "kind: I\na: 1,987,8732,8732,987,1\nb: 31,1946,5766,1946,31\n");
    const auto z = run({"decompose", "--poly", "0", "--degree", "3"});
    CHECK(z.out == "kind: I\na: 0\nb: 0\n");
    const auto rk = run({"decompose", "--poly", "1,1", "--degree", "1", "--kind", "R"});
    CHECK(rk.out == "kind: R\na: 1,2\nb: -1\n");
    CHECK(run({"decompose", "--poly", "1,x", "--degree", "1"}).code == kExitUsage);
    CHECK(run({"decompose", "--poly", "1,1,1", "--degree", "1"}).code == kExitUsage);
    // 1+x+x^2: parts are real-rooted (b=0) but a is not.
    CHECK(run({"decompose", "--poly", "1,1,1", "--degree", "2", "--expect-real-rooted"}).code == kExitMathFailure);
    CHECK(run({"decompose", "--poly", "1,4,1", "--degree", "2", "--expect-real-rooted", "--expect-interlacing"}).code == 0);
  }

  TEST_CASE("json output parses") {
    const auto r = run({"decompose", "--poly", "1,2,1", "--degree", "2", "--certify", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["a"] == nlohmann::json::array({"1", "2", "1"}));
    CHECK(j["certificates"]["a"]["real_rooted"] == true);
  }

  TEST_CASE("plain output round-trips through the parser") {
    const auto r = run({"op", "einv", "--poly", "0,0,1"});
    CHECK(r.out == "0,-1/2,1/2\n");
    const auto back = run({"op", "e", "--poly", "0,-1/2,1/2"});
    CHECK(back.out == "0,0,1\n");
  }

  TEST_CASE("operators and generators") {
    CHECK(run({"op", "hfromi", "--poly", "1,4,4", "--degree", "2"}).out == "1,6,1\n");
    CHECK(run({"op", "hfromi", "--poly", "1,4,4"}).code == kExitUsage);
    CHECK(run({"op", "diamond", "--poly", "0,1", "--poly2", "0,1"}).out == "0,1,2\n");
    CHECK(run({"op", "tk", "--poly", "0,0,1", "--k", "1"}).out == "0,0,3\n");
    CHECK(run({"op", "dmap", "--poly", "0,0,0,1"}).out == "0,1,1\n");
    CHECK(run({"op", "cone", "--poly", "1,0,1", "--degree", "2"}).out == "1,-2,2\n");
    CHECK(run({"gen", "--family", "derangement", "--n", "4"}).out == "0,1,7,1\n");
    CHECK(run({"gen", "--family", "eulerian", "--n", "3", "--r", "2", "--bruteforce"}).out ==
          run({"gen", "--family", "eulerian", "--n", "3", "--r", "2"}).out);
    CHECK(run({"gen", "--family", "typeb", "--n", "2"}).out == "1,6,1\n");
  }

  TEST_CASE("certificates") {
    CHECK(run({"cert", "--p", "1,4,1", "--q", "0,1,1"}).code == 0);
    CHECK(run({"cert", "--p", "0,1,1", "--q", "1,4,1"}).code == kExitMathFailure);
    CHECK(run({"cert", "--p", "1,0,1"}).code == kExitMathFailure);
    CHECK(run({"cert", "--p", "-1,1", "--q", "1,1"}).code == kExitMathFailure);
    CHECK(run({"cert", "--p", "-1,1", "--q", "1,1", "--signed"}).code == kExitMathFailure);
  }

  TEST_CASE("zonotopes and complexes") {
    const auto z = run({"zono", "hstar", "--matrix", "2,0;0,2", "--bruteforce"});
    CHECK(z.code == 0);
    CHECK(z.out.find("hstar: 1,6,1\n") != std::string::npos);
    CHECK(z.out.find("interior points: 1\n") != std::string::npos);
    const auto s = run({"complex", "sdh", "--facets", "1,2;2,3;1,3"});
    CHECK(s.out.find("h(sd): 1,4,1\n") != std::string::npos);
    const auto h = run({"complex", "sdh", "--hvector", "1,1"});
    CHECK(h.out.find("h(sd): 1,1\n") != std::string::npos);
    const auto m = run({"complex", "matroid", "--uniform", "2,3"});
    CHECK(m.out.find("h: 1,1,1\n") != std::string::npos);
    CHECK(m.out.find("coloop-free: yes\n") != std::string::npos);
    const auto g = run({"complex", "matroid", "--graph", "1,2;2,3"});
    CHECK(g.out.find("coloop-free: no\n") != std::string::npos);
    CHECK(run({"complex", "matroid", "--ground", "4", "--bases", "1,2;3,4"}).code == kExitUsage);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "bogus"}).code == kExitUsage);
    CHECK(run({"verify", "s3", "--nmax", "4"}).code == 0);
    const auto j = run({"verify", "s3", "--nmax", "3", "--seed", "9", "--json", "-"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out.substr(j.out.find('{')));
    CHECK(doc["seed"] == 9);
    CHECK(doc["passed"] == true);
    CHECK(run({"verify", "s3", "--nmax", "12"}).code == kExitUsage);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"--help"}).code == 0);
  }
}
