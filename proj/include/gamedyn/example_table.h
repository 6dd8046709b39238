// Copyright 2026 The gamedyn Authors.
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

#ifndef GAMEDYN_EXAMPLE_TABLE_H_
#define GAMEDYN_EXAMPLE_TABLE_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gamedyn {

struct CheckResult {
  bool passed = false;
  std::string observed;
};

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string tolerance;
  // Where the expected value comes from.
  std::string provenance;
  // Informational checks are reported but never fail the example.
  bool informational = false;
  std::function<CheckResult()> run;
};

struct ExampleDescriptor {
  std::string id;
  std::string summary;
  std::vector<ExampleCheck> checks;
};

// Built-in reproduction table, in listing order.
const std::vector<ExampleDescriptor>& ExampleTable();

// nullptr for an unknown id.
const ExampleDescriptor* FindExample(std::string_view id);

}  // namespace gamedyn

#endif  // GAMEDYN_EXAMPLE_TABLE_H_
