//------------------------------------------------------------------------------
//
//   Copyright 2026 The contracert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include "contracert/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace contracert {

struct DemoOptions
{
  std::uint64_t seed{42};
  unsigned      threads{1};
};

struct DemoResult
{
  Json report;
  /// The scenario showed what it is meant to show (including expected failures).
  bool passed{false};
};

std::vector<std::string> demo_names();

/// Throws InputError listing the available names when `name` is unknown.
DemoResult run_demo(std::string const &name, DemoOptions const &options = {});

}  // namespace contracert
