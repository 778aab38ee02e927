// Copyright 2026 The edom Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "edom/serialize.hpp"

namespace fs = std::filesystem;
using edom::Json;

namespace {

const std::string kCli = EDOM_CLI_PATH;
const std::string kCorpus = EDOM_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("edom_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& stdin_text = {}) {
  const fs::path in = scratch() / "stdin.txt";
  const fs::path out = scratch() / "stdout.txt";
  std::ofstream(in) << stdin_text;
  const std::string cmd = kCli + " " + args + " < " + in.string() + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out)};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("invariants verb") {
  Run r = run("invariants Dhc");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gamma"] == 2);
  CHECK(j["alpha"] == 2);
  CHECK(j["gamma_inf"] == 3);
  CHECK(j["theta"] == 3);

  Run many = run("invariants -", ">>graph6<<@\nBw\n");
  REQUIRE(many.code == 0);
  CHECK(lines(many.out).size() == 2);
  CHECK(run("invariants D?").code == 2);
}

TEST_CASE("strategy eval verb") {
  Json scored = Json::parse(run("strategy eval Dhc --guards 0,2 --attacks 1").out);
  CHECK(scored["verdict"] == "winning");
  Json found = Json::parse(run("strategy eval Dhc --guards 0,2").out);
  CHECK(found["status"] == "found");
  CHECK(found["verdict"] == "winning");
  Json safe = Json::parse(run("strategy eval Dhc --guards 0,1,3").out);
  CHECK(safe["status"] == "eternal");
  CHECK(safe["verdict"] == "losing");
}

TEST_CASE("exit codes") {
  CHECK(run("scan --no-timings", "Dhc\nbogus\nC~\n").code == 0);
  Run strict = run("scan --strict --no-timings", "Dhc\nbogus\nC~\n");
  CHECK(strict.code == 2);
  CHECK(lines(strict.out).size() == 1);
  CHECK(run("hunt " + kCorpus + "/connected_le8.g6").code == 0);
  CHECK(run("hunt " + std::string(EDOM_TEST_DATA_DIR) + "/extremal10.g6").code == 1);
  CHECK(run("scan --filter bogus", "Dhc\n").code == 3);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("scan output does not depend on job count") {
  const std::string input = kCorpus + "/all_le6.g6";
  const std::string one = run("scan --no-timings --batch 7 -j 1 " + input).out;
  const std::string three = run("scan --no-timings --batch 7 -j 3 " + input).out;
  CHECK(lines(one).size() == 208);
  CHECK(one == three);
}

TEST_CASE("resume from checkpoint matches an uninterrupted run") {
  const std::string input = kCorpus + "/all_le7.g6";
  const fs::path full = scratch() / "full.jsonl";
  const fs::path part = scratch() / "part.jsonl";
  const fs::path ckpt = scratch() / "part.ckpt";
  fs::remove(ckpt);
  REQUIRE(run("obstruct --batch 50 -o " + full.string() + " " + input).code == 0);
  REQUIRE(run("obstruct --batch 50 --limit 300 --checkpoint " + ckpt.string() + " -o " + part.string() + " " + input)
              .code == 0);
  CHECK(lines(slurp(part)).size() == 300);
  // Garbage past the checkpoint, as after a crash mid-write, is discarded.
  std::ofstream(part, std::ios::app) << "{\"partial\":";
  REQUIRE(run("obstruct --batch 50 --checkpoint " + ckpt.string() + " -o " + part.string() + " " + input).code == 0);
  CHECK(slurp(part) == slurp(full));
  CHECK(lines(slurp(full)).size() == 1252);
  CHECK(run("scan --checkpoint " + ckpt.string() + " -o " + part.string() + " " + input).code == 3);
  fs::remove_all(scratch());
}
