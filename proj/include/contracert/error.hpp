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

#include <stdexcept>
#include <string>

namespace contracert {

/// Raised for malformed or out-of-contract input: bad matrices, bad gauge
/// names, parameters outside their admissible range. The C API maps this to
/// CC_ERR_INPUT and the CLI to exit code 2.
class InputError : public std::invalid_argument
{
public:
  explicit InputError(std::string const &what)
    : std::invalid_argument(what)
  {}
};

}  // namespace contracert
