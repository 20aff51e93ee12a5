//
// Copyright 2026 The PACA Authors
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
//

#ifndef PACA_ERRORS_H_
#define PACA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace paca {

// Argument errors use std::invalid_argument. StateError marks requests that
// are well-formed but impossible in the given state (e.g. a full-knowledge
// attack against a target with a hidden neighbor).
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paca

#endif  // PACA_ERRORS_H_
