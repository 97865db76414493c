// Copyright 2026 The qwsym Authors
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

#ifndef QWSYM_CLI_HPP
#define QWSYM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qwsym::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadConfig = 2,
  kNumericViolation = 3,
  kFamilyPrecondition = 4,
  kDegenerate = 5,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int main(int argc, char** argv);

}  // namespace qwsym::cli

#endif  // QWSYM_CLI_HPP
