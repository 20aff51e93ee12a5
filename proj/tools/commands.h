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

#ifndef PACA_TOOLS_COMMANDS_H_
#define PACA_TOOLS_COMMANDS_H_

#include <ostream>

#include "config.h"

namespace paca::tools {

// Experiment drivers behind the CLI subcommands. Each validates its key set
// strictly, writes the primary output plus a run manifest, and prints a
// short summary. Errors surface as ConfigError (exit 2) or StateError
// (exit 3).
void CmdDelta(const Config& config, std::ostream& out);
void CmdSimulate(const Config& config, std::ostream& out);
void CmdEstimate(const Config& config, std::ostream& out);
void CmdAttack(const Config& config, std::ostream& out);
void CmdSweep(const Config& config, std::ostream& out);
void CmdCompare(const Config& config, std::ostream& out);

}  // namespace paca::tools

#endif  // PACA_TOOLS_COMMANDS_H_
