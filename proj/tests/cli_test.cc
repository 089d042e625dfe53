// Copyright 2026 The snacs-hi Authors.
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

#include "snacs/cli.h"

#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"
#include "snacs/json_codec.h"
#include "test_util.h"

namespace snacs {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Gold() { return testing::GoldPath().string(); }

TEST_CASE("validate") {
  auto r = Cli({"validate", Gold()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());

  r = Cli({"validate", "/nonexistent"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/nonexistent") != std::string::npos);

  testing::TempDir dir;
  auto bad = dir.path() / "bad.tsv";
  std::ofstream(bad) << "# newdoc id = b\n\n# sent_id = s\n0\tghar\n1\tmeṁ\n"
                        "@ 1\tmeṁ\tRecipient\tx\tdraft\n";
  r = Cli({"validate", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err == "error\tUNLICENSED_CONSTRUAL\ts@1\tRecipient is not licensed for meṁ\n");

  auto broken = dir.path() / "broken.tsv";
  std::ofstream(broken) << "0\tghar\n";
  r = Cli({"validate", broken.string()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error\t", 0) == 0);
}

TEST_CASE("lookup") {
  auto r = Cli({"lookup", "ke_bāre_meṁ"});
  CHECK(r.code == 0);
  CHECK(r.out.find("license\tTopic\t§Topic") != std::string::npos);
  r = Cli({"lookup", "ke bāre meṁ"});
  CHECK(r.code == 0);
  r = Cli({"lookup", "zzz"});
  CHECK(r.code == 1);
  CHECK(r.err.find("zzz") != std::string::npos);
}

TEST_CASE("translit") {
  auto r = Cli({"translit", "के", "बारे", "में"});
  CHECK(r.code == 0);
  CHECK(r.out == "ke bāre meṁ\n");
  r = Cli({"translit", "घॕ"});
  CHECK(r.code == 0);
  CHECK(r.err.find("U+0955") != std::string::npos);
}

TEST_CASE("match lists every gold target") {
  auto r = Cli({"match", Gold()});
  CHECK(r.code == 0);
  CHECK(r.out.find("s001\t1\tmeṁ\tmeṁ\n") != std::string::npos);

  testing::TempDir dir;
  auto plain = dir.path() / "plain.txt";
  std::ofstream(plain) << "āp binā ovan ke kek banā rahī haiṁ\nघर के बारे में\n";
  r = Cli({"match", plain.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "line1\t1,3\tke_binā\tbinā ke\nline2\t1,2,3\tke_bāre_meṁ\tke bāre meṁ\n");
}

TEST_CASE("stats") {
  auto r = Cli({"stats", Gold()});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["documents"] == 1);
  CHECK(j["records"].get<int>() >= 60);
  CHECK(Cli({"stats", "/nonexistent"}).code == 2);
}

TEST_CASE("usage errors") {
  auto r = Cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"validate"}).code == 2);
  CHECK(Cli({"serve", "--port", "notanumber"}).code == 2);
  r = Cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("validate") != std::string::npos);
}

TEST_CASE("data file flags and environment overrides") {
  testing::TempDir dir;
  auto lex = dir.path() / "lexicon.tsv";
  std::ofstream(lex) << "meṁ\tcase-marker\t-\tLocus\tLocus\t§L\tc\t0\t-\n";
  auto dx = dir.path() / "dx.json";
  std::ofstream(dx) << R"({"checklists":[]})";
  auto r = Cli({"--lexicon", lex.string(), "--diagnostics", dx.string(), "lookup", "ko"});
  CHECK(r.code == 1);
  r = Cli({"--lexicon", lex.string(), "--diagnostics", dx.string(), "lookup", "meṁ"});
  CHECK(r.code == 0);
  CHECK(r.out.find("§L") != std::string::npos);

  ::setenv("SNACS_HI_LEXICON", "/nonexistent/lexicon.tsv", 1);
  r = Cli({"lookup", "ko"});
  ::unsetenv("SNACS_HI_LEXICON");
  CHECK(r.code == 2);
  CHECK(r.err.find("/nonexistent/lexicon.tsv") != std::string::npos);
  CHECK(Cli({"lookup", "ko"}).code == 0);
}

TEST_CASE("serve fails cleanly on a missing store") {
  auto r = Cli({"serve", "--port", "0", "--corpus", "/nonexistent/dir"});
  CHECK(r.code == 2);
}

TEST_CASE("property: exit codes stay within 0..2") {
  const std::vector<std::string> pool = {
      "validate", "match", "stats", "lookup", "translit", "--port", "-x",
      "--help", Gold(), "/nonexistent", "ko", "घर", "--lexicon", "", "--corpus"};
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> len(0, 4), pick(0, pool.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> args;
    for (std::size_t n = len(rng); n > 0; --n) args.push_back(pool[pick(rng)]);
    int code = Cli(args).code;
    CHECK(code >= 0);
    CHECK(code <= 2);
  }
}

}  // namespace
}  // namespace snacs
