// Copyright 2026 The listpriv Authors
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

#ifndef LISTPRIV_TOOLS_CLI_H_
#define LISTPRIV_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace listpriv::cli {

// Runs one command line (args exclude the program name). Returns the process
// exit code: 0 on success, 1 on any error. Errors are reported on `err` as
// "error[Code]: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace listpriv::cli

#endif  // LISTPRIV_TOOLS_CLI_H_
