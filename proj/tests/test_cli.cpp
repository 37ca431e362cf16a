// Copyright 2026 The diglines Authors
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

#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "diglines/canonical.hpp"
#include "diglines/search.hpp"
#include "subprocess.hpp"

namespace {

const std::string kCli = DIGLINES_CLI_PATH;

subprocess::Result cli(const std::string& args) { return subprocess::run(kCli + " " + args); }

}  // namespace

TEST_CASE("props reports the structural profile", "[cli]") {
  const auto r = cli("props 3:010001100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("strongly_connected: yes") != std::string::npos);
  CHECK(r.out.find("diameter: 2") != std::string::npos);
  CHECK(r.out.find("directed_girth: 3") != std::string::npos);
  CHECK(r.out.find("oriented: yes") != std::string::npos);
  CHECK(r.out.find("bridgeless: no") != std::string::npos);
}

TEST_CASE("lines prints the distinct lines with a thin verdict", "[cli]") {
  const auto r = cli("lines 3:010001100");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "digraph: 3:010001100\n"
        "{0,1,2}\n"
        "lines: 1\n"
        "universal: 1\n"
        "verdict: THIN\n");

  const auto k4 = cli("lines 4:0111101111011110");
  CHECK(k4.exit_code == 0);
  CHECK(k4.out.find("lines: 6") != std::string::npos);
  CHECK(k4.out.find("verdict: NOT-THIN") != std::string::npos);
}

TEST_CASE("malformed input exits with code 1", "[cli]") {
  CHECK(cli("props 3:010001101").exit_code == 1);   // diagonal bit
  CHECK(cli("lines 2:0100").exit_code == 1);        // not strongly connected
  CHECK(cli("props /no/such/file").exit_code == 1);
  CHECK(cli("definitely-not-a-subcommand").exit_code == 1);
  CHECK(cli("hunt --class nonsense").exit_code == 1);
}

TEST_CASE("digraphs can be read from stdin", "[cli]") {
  const auto r = subprocess::run("printf '# two digraphs\\n3:010001100\\n3:011101110\\n' | " +
                                 kCli + " props -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph: 3:010001100") != std::string::npos);
  CHECK(r.out.find("digraph: 3:011101110") != std::string::npos);
}

TEST_CASE("check runs claim checkers with the documented exit codes", "[cli]") {
  CHECK(cli("check --list").out.find("samestart") != std::string::npos);
  const auto ok = cli("check samestart 3:010001100");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("verdict: holds") != std::string::npos);
  // hypothesis violation: the 4-cycle graph is not oriented
  CHECK(cli("check diam2-claims 4:0101101001011010").exit_code == 1);
  CHECK(cli("check no-such-claim 3:010001100").exit_code == 1);
  CHECK(cli("check samestart").exit_code == 1);
}

TEST_CASE("enumerate emits a deterministic catalog", "[cli]") {
  const auto r = cli("enumerate --n 3 --class oriented");
  CHECK(r.exit_code == 0);
  int classes = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++classes;
  CHECK(classes == 7);
  CHECK(r.out.find("# n=3 class=oriented classes=7") != std::string::npos);
  CHECK(cli("enumerate --n 3 --class oriented").out == r.out);
}

TEST_CASE("hunt prints the level table and witnesses", "[cli]") {
  const std::string args =
      "hunt --n-min 3 --n-max 4 --class oriented --diameter 2 --predicate thin";
  const auto r = cli(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n\tclasses_generated\tpassing_filters\twitnesses") != std::string::npos);
  const std::string key = diglines::canonical_key(diglines::refs::directed_triangle()).bytes;
  CHECK(r.out.find("witness\t" + key) != std::string::npos);
  CHECK(cli(args).out == r.out);  // byte-identical reruns
}

TEST_CASE("hunt writes a witness catalog file", "[cli]") {
  const std::string path = "/tmp/diglines_cli_witnesses.txt";
  std::remove(path.c_str());
  const auto r = cli("hunt --n-min 3 --n-max 4 --class oriented --diameter 2 "
                     "--predicate thin --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first == "# canonical");
  std::string witness;
  std::getline(f, witness);
  CHECK(witness == diglines::canonical_key(diglines::refs::directed_triangle()).bytes);
  std::remove(path.c_str());
}

TEST_CASE("verify reports a holds verdict with the expected witnesses", "[cli]") {
  const auto r = cli("verify oriented-diam2 --n-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("claim: oriented-diam2") != std::string::npos);
  CHECK(r.out.find("verdict: holds") != std::string::npos);
  const std::string key = diglines::canonical_key(diglines::refs::directed_triangle()).bytes;
  CHECK(r.out.find("expected_witness\t" + key) != std::string::npos);
  CHECK(r.out.find("found_witness\t" + key) != std::string::npos);
  CHECK(cli("verify nope").exit_code == 1);
}

TEST_CASE("tsv output is machine readable", "[cli]") {
  const auto props = cli("props --format tsv 3:010001100");
  CHECK(props.exit_code == 0);
  CHECK(props.out.find("digraph\tn\tarcs") != std::string::npos);
  CHECK(props.out.find("3:010001100\t3\t3\tyes\t2\t3\tyes\tno\tno\tno") != std::string::npos);

  const auto lines = cli("lines --format tsv 3:010001100");
  CHECK(lines.out.find("3:010001100\t1\t1\tyes\t{0,1,2}") != std::string::npos);

  const auto check = cli("check --format tsv samestart 3:010001100");
  CHECK(check.out.find("3:010001100\tsamestart\tholds\t0") != std::string::npos);
}
