/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace eqhp::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json Payload(const std::vector<std::string>& args) {
  std::vector<std::string> with_json = {"--format", "json"};
  with_json.insert(with_json.end(), args.begin(), args.end());
  const CliRun run = Invoke(with_json);
  EXPECT_EQ(run.code, 0) << run.err;
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc.at("schema_version"), 1);
  EXPECT_EQ(doc.at("status"), "ok");
  return doc.at("result");
}

TEST(CliTest, Reps) {
  const auto two = Payload({"reps", "2"});
  EXPECT_EQ(two["complex"].size(), 2u);
  EXPECT_EQ(two["complex"][0]["type"], "real");
  EXPECT_EQ(two["complex"][1]["type"], "real");
  EXPECT_EQ(two["quaternionic"].size(), 2u);

  const auto three = Payload({"reps", "3"});
  EXPECT_EQ(three["complex"][0]["type"], "real");
  EXPECT_EQ(three["complex"][1]["type"], "complex");
  EXPECT_EQ(three["complex"][1]["conjugate"], 2);
  EXPECT_EQ(three["quaternionic"].size(), 2u);

  const auto one = Payload({"reps", "1"});
  EXPECT_EQ(one["complex"].size(), 1u);
  EXPECT_EQ(one["quaternionic"].size(), 1u);

  EXPECT_EQ(Invoke({"reps", "0"}).code, kDomainError);
  EXPECT_EQ(Invoke({"reps", "65"}).code, kDomainError);
  EXPECT_EQ(Invoke({"reps", "65", "--max-n", "80"}).code, kOk);
}

TEST(CliTest, Cells) {
  const auto eight = Payload({"cells", "2", "8", "canonical"});
  EXPECT_EQ(eight["cells"].size(), 8u);
  EXPECT_EQ(eight["verdict"]["pass"], true);
  EXPECT_EQ(eight["cells"][3]["c2_form"]["s"], 8);
  EXPECT_EQ(eight["cells"][3]["profile"]["2"], 12);

  const auto inter = Payload({"cells", "3", "30", "interleaved"});
  EXPECT_EQ(inter["verdict"]["pass"], false);
  EXPECT_EQ(inter["verdict"]["condition"], "b");
  EXPECT_EQ(inter["verdict"]["first_k"], 2);
  EXPECT_EQ(inter["verdict"]["second_k"], 3);

  const auto base = Payload({"cells", "2", "0", "canonical"});
  EXPECT_EQ(base["cells"].size(), 1u);
  EXPECT_EQ(base["cells"][0]["total"], 0);

  EXPECT_EQ(Invoke({"cells", "3", "5", "diagonal"}).code, kUsageError);
  EXPECT_EQ(Invoke({"cells", "3"}).code, kUsageError);
}

TEST(CliTest, Additive) {
  const CliRun plot = Invoke({"additive", "2", "7", "plot"});
  EXPECT_EQ(plot.code, 0);
  EXPECT_EQ(plot.out.rfind("points: (0,0) (0,4) (4,8) (4,12) (8,16) (8,20) (12,24) (12,28)\n",
                           0),
            0u);
  const auto seven = Payload({"additive", "7", "7", "table"});
  std::vector<int> fixed;
  for (const auto& g : seven["generators"]) fixed.push_back(g["fixed"]);
  EXPECT_EQ(fixed, (std::vector<int>{0, 0, 0, 0, 2, 2, 2, 4}));
  EXPECT_EQ(seven["scope"], "formal");

  const CliRun bad = Invoke({"additive", "4", "3"});
  EXPECT_EQ(bad.code, kDomainError);
  EXPECT_NE(bad.err.find("freeness"), std::string::npos);
  EXPECT_EQ(Invoke({"additive", "3", "3", "pie"}).code, kUsageError);

  const CliRun json_mode = Invoke({"additive", "3", "2", "json"});
  EXPECT_EQ(nlohmann::json::parse(json_mode.out)["result"]["points"].size(), 3u);
}

TEST(CliTest, Point) {
  EXPECT_EQ(Payload({"point", "0", "0"})["label"], "A");
  const auto shifted = Payload({"point", "--", "-2", "0"});
  EXPECT_EQ(shifted["position"]["x"], -2);
  EXPECT_EQ(shifted["position"]["y"], -2);
  EXPECT_EQ(shifted["label"], "zero");
  EXPECT_EQ(Payload({"point", "0", "4"})["label"], "braket_Z");
  EXPECT_EQ(Payload({"point", "0", "0", "--p", "3"})["label"], "A[d]");
  EXPECT_EQ(Invoke({"point", "0", "0", "--p", "4"}).code, kDomainError);
}

TEST(CliTest, Group) {
  const auto zero = Payload({"group", "0", "0"});
  ASSERT_EQ(zero["summands"].size(), 2u);
  EXPECT_EQ(zero["summands"][0]["label"], "A");
  EXPECT_EQ(zero["summands"][1]["label"], "braket_Z");
  EXPECT_EQ(zero["top"]["rank"], 3);
  EXPECT_EQ(zero["bottom"]["rank"], 1);
  EXPECT_EQ(Payload({"group", "1", "0"})["summands"].size(), 0u);
  EXPECT_EQ(Invoke({"group", "0", "4", "--cutoff", "0"}).code, kDomainError);
}

TEST(CliTest, Ring) {
  const CliRun normalize = Invoke({"ring", "c*c", "normalize"});
  EXPECT_EQ(normalize.code, 0);
  EXPECT_EQ(normalize.out, "e^4*c + x^2*CC\n");
  EXPECT_EQ(Payload({"ring", "check-relation"})["pass"], true);
  const CliRun mixed = Invoke({"ring", "c + CC", "normalize"});
  EXPECT_EQ(mixed.code, kDomainError);
  EXPECT_NE(mixed.err.find("non-homogeneous"), std::string::npos);

  EXPECT_EQ(Invoke({"ring", "c*c", "eval-fixed1"}).out, "e^8 + x^4*x1^2\n");
  EXPECT_EQ(Invoke({"ring", "CC", "eval-fixed0", "--level", "3"}).out, "e^4*x0\n");
  EXPECT_EQ(Invoke({"ring", "CC^2", "eval-sun", "--level", "4"}).out, "0\n");
  EXPECT_EQ(Payload({"ring", "nu", "3"})["matches"], true);
  EXPECT_EQ(Payload({"ring", "basis", "0", "4"})["basis"].size(), 2u);
  EXPECT_EQ(Payload({"ring", "probe", "4", "4"})["injective"], true);
  EXPECT_EQ(Payload({"ring", "check-relation", "--rhs", "x^2*CC"})["pass"], false);
  EXPECT_EQ(Invoke({"ring", "c", "frobnicate"}).code, kUsageError);
  EXPECT_EQ(Invoke({"ring", "c +"}).code, kDomainError);
  EXPECT_EQ(Invoke({"ring", "nu", "two"}).code, kUsageError);
}

TEST(CliTest, FixedPoints) {
  const auto w4 = Payload({"fixed-points", "2", "4"});
  ASSERT_EQ(w4["components"].size(), 2u);
  EXPECT_EQ(w4["components"][0]["projective_dim"], 1);
  EXPECT_EQ(w4["components"][1]["projective_dim"], 1);
  const auto explicit_rep = Payload({"fixed-points", "3", "--rep", "1,1"});
  EXPECT_EQ(explicit_rep["components"][1]["kind"], "CP");
  EXPECT_EQ(Invoke({"fixed-points", "3", "--rep", "1,x"}).code, kUsageError);
  EXPECT_EQ(Invoke({"fixed-points", "3"}).code, kUsageError);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kUsageError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(Invoke({"reps", "2", "--format", "yaml"}).code, kUsageError);
  const CliRun help = Invoke({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("additive"), std::string::npos);
}

TEST(CliTest, ErrorEnvelopeInJsonMode) {
  const CliRun run = Invoke({"additive", "4", "3", "--format", "json"});
  EXPECT_EQ(run.code, kDomainError);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["status"], "error");
  EXPECT_EQ(doc["error"]["kind"], "domain");
}

TEST(CliTest, DeterministicSortedJson) {
  const std::vector<std::vector<std::string>> commands = {
      {"reps", "6"},           {"cells", "5", "12"},         {"additive", "3", "9"},
      {"point", "3", "-5"},    {"group", "4", "8"},          {"ring", "c^3", "eval-all"},
      {"ring", "nu", "6"},     {"fixed-points", "5", "7"},   {"ring", "probe", "0", "8"}};
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const CliRun a = Invoke(args);
    const CliRun b = Invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    // Re-serializing with sorted keys reproduces the bytes.
    EXPECT_EQ(nlohmann::json::parse(a.out).dump(2) + "\n", a.out);
  }
}

}  // namespace
}  // namespace eqhp::cli
