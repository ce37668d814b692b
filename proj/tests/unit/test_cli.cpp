// Copyright 2026 The chordset Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chordset/json_io.hpp"
#include "cli.hpp"

using namespace chordset;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Payload after the metadata line.
Json payload(const Run& r) {
  const auto ls = lines(r.out);
  REQUIRE(ls.size() >= 2);
  CHECK(Json::parse(ls.front()).contains("meta"));
  return Json::parse(ls.at(1));
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"hopf-check", "--v", "1/2,1"}).code == cli::kExitOk);
  CHECK(run({"hopf-check", "--v", "1/3,1/2"}).code == cli::kExitDomainError);
  CHECK(run({"hopf-check", "--v", "0.3,0.5"}).code == cli::kExitUsage);
  CHECK(run({"hopf-check"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"no-such-command"}).code == cli::kExitUsage);
  CHECK(run({"hopf-isolate", "--a", "1/3"}).code == cli::kExitDomainError);
  CHECK(run({"hopf-vn", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"int-verify", "--set", "2,4;4"}).code == cli::kExitDomainError);
  CHECK(run({"int-verify", "--set", "2,3;3,4;4", "--allow-touching"}).code == cli::kExitOk);
  CHECK(run({"scan", "--fn", "sine", "--ell-res", "0.3"}).code == cli::kExitUsage);
  CHECK(run({"synth", "--target", "isolate:2/5"}).code == cli::kExitDomainError);
  CHECK(run({"synth", "--target", "vn:3/2"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("domain errors carry a witness") {
  const auto r = run({"hopf-check", "--v", "1/3,1/2"});
  const Json j = payload(r);
  REQUIRE(j.contains("witness"));
  const Rational x = rational_from_json(j.at("witness").at("x"));
  const Rational y = rational_from_json(j.at("witness").at("y"));
  CHECK(x + y <= Rational(1));
  CHECK(x > Rational(1, 3));
  CHECK(y < Rational(1, 2));
}

TEST_CASE("hopf-vn payload") {
  const Json j = payload(run({"hopf-vn", "--n", "3"}));
  CHECK(hopf_from_json(j) == canonical_vn(3));
  const auto bare = run({"hopf-vn", "--n", "3", "--no-meta"});
  CHECK(Json::parse(lines(bare.out).front()).contains("v"));
}

TEST_CASE("output is deterministic across runs and worker counts") {
  const std::vector<std::vector<std::string>> cmds = {
      {"int-enumerate", "--n", "4", "--max", "20"},
      {"scan", "--fn", "sinesum:2", "--probe", "1/3"},
      {"hopf-symmetry", "--v", "2/5,1/2;3/5,1"},
      {"synth", "--target", "picksinwn:2:2/5,1/2"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c.front());
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    auto threaded = c;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    const auto t = run(threaded);
    CHECK(lines(t.out).size() == lines(a.out).size());
    CHECK(lines(t.out).back() == lines(a.out).back());
  }
}

TEST_CASE("census output round trips through int-verify") {
  const auto r = run({"int-enumerate", "--n", "3", "--max", "20", "--no-meta"});
  REQUIRE(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 11);
  for (const auto& line : ls) {
    const auto s = integer_set_from_json(Json::parse(line));
    std::string text;
    for (const auto& [a, b] : s.finite_intervals) text += std::to_string(a) + "," + std::to_string(b) + ";";
    text += std::to_string(s.tail_start);
    CHECK(run({"int-verify", "--set", text}).code == cli::kExitOk);
  }
  const auto csv = run({"int-enumerate", "--n", "3", "--max", "20", "--format", "csv", "--no-meta"});
  CHECK(lines(csv.out).front() == "n,M,count");
}

TEST_CASE("--out and --plot-data write files") {
  const auto dir = std::filesystem::temp_directory_path() / "chordset_cli_test";
  std::filesystem::create_directories(dir);
  const auto out_path = (dir / "scan.json").string();
  const auto plot_path = (dir / "plot.csv").string();
  const auto r = run({"scan", "--fn", "sine", "--out", out_path, "--plot-data", plot_path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto ls = lines(buffer.str());
  REQUIRE(ls.size() == 2);
  CHECK(Json::parse(ls[1]).at("ell_steps") == 1000);
  std::ifstream plot(plot_path);
  std::string header;
  std::getline(plot, header);
  CHECK(header == "ell,presence,multiplicity");
  std::filesystem::remove_all(dir);
}

TEST_CASE("csv formats") {
  const auto r = run({"chord-vector", "--fn", "sine", "--n", "4", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  CHECK(ls.front().rfind("# chordset", 0) == 0);
  CHECK(ls.at(1) == "k,ell,count");
  CHECK(ls.size() == 6);
  CHECK(run({"hopf-vn", "--n", "2", "--format", "csv"}).code == cli::kExitUsage);
}

TEST_CASE("remaining subcommands succeed") {
  CHECK(run({"hopf-extend", "--v", "2/5,1/2"}).code == cli::kExitOk);
  CHECK(run({"hopf-isolate", "--a", "2/5"}).code == cli::kExitOk);
  CHECK(run({"int-n3", "--a-max", "6"}).code == cli::kExitOk);
  CHECK(run({"conjecture-k", "--n", "1"}).code == cli::kExitOk);
  CHECK(run({"invariance", "--fn", "pl:0,0;0.3,1;1,0"}).code == cli::kExitOk);
  CHECK(run({"synth", "--target", "vn:2", "--with-report"}).code == cli::kExitOk);
  CHECK(run({"synth", "--target", "union:3/5,1", "--family", "arch-pair"}).code == cli::kExitOk);
}
