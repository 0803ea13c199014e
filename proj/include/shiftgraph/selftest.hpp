// Copyright 2026 The shiftgraph Authors
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

#ifndef SHIFTGRAPH_SELFTEST_HPP_
#define SHIFTGRAPH_SELFTEST_HPP_

#include <string>
#include <vector>

namespace shiftgraph {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;  // first failing check
  double seconds = 0.0;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

struct SelftestOptions {
  bool quick = false;
  // Test hook: flip one adjacency in every graph handed to the
  // reconstruction suite, which must then fail.
  bool corrupt_adjacency = false;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_SELFTEST_HPP_
