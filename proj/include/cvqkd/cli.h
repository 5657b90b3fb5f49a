// Copyright 2026 The cvqkd Authors
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

#ifndef CVQKD_CLI_H
#define CVQKD_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace cvqkd::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kIo = 3,
    kMalformedInput = 4,
};

/// Runs one command line (args excludes the program name).
/// Subcommands: attack, thresholds, montecarlo, plot.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cvqkd::cli

#endif
