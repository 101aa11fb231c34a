/*
 * Copyright 2026 The superrec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end exit-code contract of the command line tool:
//   0 all requested checks pass, 1 validation failure,
//   2 residual/mismatch, 3 resource bound.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int failures = 0;

std::string e2e_dir() {
  fs::create_directories(SUPERREC_E2E_DIR);
  return SUPERREC_E2E_DIR;
}

int run(const std::string& args, const std::string& redirect = "") {
  std::string cmd = std::string(SUPERREC_CLI_PATH) + " " + args;
  if (!redirect.empty()) cmd += " > " + redirect + " 2>&1";
  else cmd += " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

void expect(const char* what, bool ok) {
  std::printf("%s: %s\n", what, ok ? "ok" : "FAILED");
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main() {
  const std::string dir = e2e_dir();

  expect("crosscheck on the built-in NS curve exits 0",
         run("crosscheck --curve gaiotto-ns --chi-max 6") == 0);
  {
    const std::string log = dir + "/crosscheck.log";
    run("crosscheck --curve gaiotto-ns --chi-max 6", log);
    expect("crosscheck reports all cells equal",
           slurp(log).find("all cells equal") != std::string::npos);
  }

  {
    const std::string bad = dir + "/malformed.json";
    write(bad, "{ this is not json");
    expect("a malformed curve file exits 1",
           run("validate --curve " + bad) == 1);
  }

  {
    const std::string invalid = dir + "/invalid_r.json";
    write(invalid, R"({"sector":"R","N":1,"tau":[[0,"1"]],
      "psi":[[0,0,"1"]],"D":[[1,"1"]]})");
    expect("an invalid curve exits 1 with the violation list",
           run("validate --curve " + invalid) == 1);
  }

  expect("an insufficient index bound exits 3",
         run("airy --curve gaiotto-ns --chi-max 5 --index-bound 1") == 3);

  {
    const std::string a = dir + "/table_a.json";
    const std::string b = dir + "/table_b.json";
    expect("airy solve exits 0",
           run("airy --curve gaiotto-ns --chi-max 6 --out " + a) == 0);
    run("airy --curve gaiotto-ns --chi-max 6 --out " + b);
    expect("identical configs export byte-identical files",
           !slurp(a).empty() && slurp(a) == slurp(b));
  }

  {
    const std::string curve_file = dir + "/written.json";
    // exercise the file format round trip: N = 2 with phi and psi tails
    write(curve_file, R"({"sector":"NS","N":2,
      "tau":[[-1,"1"],[0,"1/2"]],
      "Q":[[0,"1/3"]],
      "D":[[1,"1"],[2,"-1/2"]],
      "phi":[[1,1,"1/2"]],
      "psi":[[0,1,"1"]]})");
    expect("a written curve file validates",
           run("validate --curve " + curve_file) == 0);
    expect("crosscheck on the file-loaded curve exits 0",
           run("crosscheck --curve " + curve_file +
               " --chi-max 5 --index-bound 10") == 0);
  }

  expect("the norm series command exits 0",
         run("norm --sector R --lambda-order 8 --out " + dir +
             "/norm_r.json") == 0);
  expect("the calibrated partition function command exits 0",
         run("gaiotto --sector NS --mode calibrated --chi-max 6") == 0);
  expect("the virasoro sweep exits 0", run("virasoro --sector NS") == 0);

  if (failures == 0) std::printf("cli end-to-end contract holds\n");
  return failures == 0 ? 0 : 1;
}
