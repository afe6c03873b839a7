// Copyright 2026 The Matchcount Authors.
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is discarded unless
// `redirect` says otherwise.
RunResult Run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  std::string cmd = std::string(MATCHCOUNT_CLI_PATH) + " " + args + " " + redirect;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// Same, but captures stderr instead of stdout.
RunResult RunStderr(const std::string& args) {
  return Run(args, "2>&1 1>/dev/null");
}

std::string Data(const std::string& name) { return std::string(MATCHCOUNT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("count prints the number of matchings") {
  RunResult r = Run("count --region " + Data("hex222.json") + " --method kasteleyn");
  CHECK(r.status == 0);
  CHECK(r.out == "20\n");
  for (const char* method : {"auto", "brute", "permanent"}) {
    CHECK(Run("count --region " + Data("hex222.json") + " --method " + method).out == "20\n");
  }
  CHECK(Run("count --region " + Data("window23.json") + " --method transfer").out == "16\n");
  CHECK(Run("count --region " + Data("window23.json") + " --method kasteleyn").out == "16\n");
  CHECK(Run("count --region " + Data("cube4.json")).out == "272\n");
}

TEST_CASE("count as JSON") {
  RunResult r = Run("count --region " + Data("punctured.json") + " --format json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == "3");
  CHECK(doc["vertices"] == 12);  // 13 cells minus the hole
  CHECK(Run("count --region " + Data("punctured.json") + " --method brute").out == "3\n");
}

TEST_CASE("ratio at the central rhombus") {
  RunResult r = Run("ratio --region " + Data("hex112.json") + " --edge central");
  CHECK(r.status == 0);
  CHECK(r.out == "1/3\n");
  RunResult touching = Run("ratio --region " + Data("hex222.json") +
                           " --edge center-touching --format json");
  CHECK(touching.status == 0);
  CHECK(nlohmann::json::parse(touching.out)["edges"].size() == 12);
  RunResult explicit_edge =
      Run("ratio --region " + Data("hex112.json") + " --edge -1,1,up:-1,1,down");
  CHECK(explicit_edge.out == "1/3\n");
  CHECK(Run("ratio --region " + Data("hex112.json") + " --edge 0,0,up:5,5,down").status == 2);
}

TEST_CASE("spectrum report") {
  RunResult r = Run("spectrum --region " + Data("hex222.json"));
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dimension"] == 12);
  CHECK(doc["count"] == "20");
  CHECK(doc["constant_term_is_count_squared"] == true);
  CHECK(doc["charpoly"][0] == "400");
  CHECK(doc["singular_value_product"].get<double>() == doctest::Approx(20.0).epsilon(1e-9));
}

TEST_CASE("verify problem1") {
  RunResult r = Run("verify --claim problem1 --n 1");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "PASS");
  CHECK(doc["computed"]["ratio"] == "1/3");
  RunResult control = Run("verify --claim problem1 --n 1 --control");
  CHECK(control.status == 0);
  CHECK(nlohmann::json::parse(control.out)["verdict"] == "REPORT_ONLY");
}

TEST_CASE("verify other claims") {
  CHECK(Run("verify --claim problem14 --w 2 --x-to 6").status == 0);
  CHECK(Run("verify --claim problem19-parity --n-max 4").status == 0);
  CHECK(Run("verify --claim problem19-orbits --n 3").status == 0);
  RunResult asym = Run("verify --claim problem19-asymptotic --n-max 4");
  CHECK(asym.status == 0);
  CHECK(nlohmann::json::parse(asym.out)["verdict"] == "REPORT_ONLY");
  RunResult csv = Run("verify --claim oracles --seed 5 --cases 10 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("claim_id,parameters,computed,expected,verdict,runtime_ms\n", 0) == 0);
}

TEST_CASE("--out writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "matchcount_cli_out.json";
  std::filesystem::remove(path);
  RunResult r = Run("verify --claim problem19-orbits --n 2 --out " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(nlohmann::json::parse(text.str())["computed"]["fixed_point_count"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("errors exit with status 2 and a coded diagnostic") {
  struct Case {
    std::string args;
    std::string code;
  };
  for (const Case& c : {
           Case{"count --region " + Data("bad.json"), "malformed-input"},
           Case{"count --region " + Data("unknown_kind.json"), "malformed-input"},
           Case{"count --region /nonexistent/region.json", "malformed-input"},
           Case{"count --region " + Data("cube4.json") + " --method kasteleyn",
                "missing-embedding"},
           Case{"count --region " + Data("hex222.json") + " --method transfer",
                "invalid-parameters"},
           Case{"verify --claim problem1 --n 9", "size-bound"},
           Case{"verify --claim problem14 --x-to 2", "invalid-parameters"},
       }) {
    CAPTURE(c.args);
    CHECK(Run(c.args).status == 2);
    CHECK(RunStderr(c.args).out.find("error[" + c.code + "]") != std::string::npos);
  }
  CHECK(Run("").status == 2);
  CHECK(Run("verify --claim problem99").status == 2);
  CHECK(Run("count --region " + Data("hex222.json") + " --format xml").status == 2);
}
