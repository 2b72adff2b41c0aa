// Copyright 2026 The numsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "numsg/verify.hpp"

namespace numsg {
namespace {

VerifyOptions options(int genus, const char* suite, unsigned threads) {
  VerifyOptions o;
  o.max_genus = genus;
  o.suites = parse_suites(suite);
  o.threads = threads;
  return o;
}

TEST(Verify, GenusOneChecksTwoThree) {
  const VerifyReport r = verify_corpus(options(1, "all", 1));
  ASSERT_EQ(r.lines.size(), 1u);
  EXPECT_NE(r.lines[0].find("\"generators\":[2,3]"), std::string::npos);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.summary["checked"], 1);
}

TEST(Verify, GasMmeSuiteGenusSix) {
  const VerifyReport r = verify_corpus(options(6, "gas-mme", 0));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.summary["counts"]["symmetric"], r.summary["counts"]["type_one"]);
  EXPECT_GT(r.summary["checks"]["gas-mme"].get<Int>(), 0);
}

TEST(Verify, OutputIndependentOfThreadCount) {
  std::ostringstream one;
  std::ostringstream many;
  write_report(one, verify_corpus(options(9, "all", 1)));
  write_report(many, verify_corpus(options(9, "all", 4)));
  EXPECT_EQ(one.str(), many.str());
}

TEST(Verify, ParsesSuiteNames) {
  EXPECT_EQ(parse_suites("all").size(), 6u);
  EXPECT_EQ(parse_suites("counting"), std::vector<Suite>{Suite::kCounting});
  EXPECT_EQ(suite_name(Suite::kGasMme), "gas-mme");
  try {
    parse_suites("everything");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kParse);
  }
}

TEST(Verify, RequiresPositiveGenus) {
  try {
    verify_corpus(options(0, "core", 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPreconditionFailed);
  }
}

}  // namespace
}  // namespace numsg
