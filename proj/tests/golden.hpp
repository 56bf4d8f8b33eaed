// Copyright 2026 The ucgen Authors
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

// Golden files live in tests/golden/. Set UCGEN_UPDATE_GOLDEN=1 to rewrite
// them from the current output.

#pragma once

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "oracles.hpp"

namespace ucgen::testing {

inline void expect_golden(const std::string& name, const std::string& actual) {
  auto path = source_dir() / "tests" / "golden" / name;
  if (std::getenv("UCGEN_UPDATE_GOLDEN")) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << actual;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(actual, read_text(path));
}

}  // namespace ucgen::testing
