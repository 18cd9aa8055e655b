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

#ifndef LISTPRIV_CATALOG_H_
#define LISTPRIV_CATALOG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "listpriv/instance.h"

namespace listpriv {

// Seven symbols, binary f = (0,0,0,1,1,1,1), pmf (.3,.2,.15,.1,.1,.1,.05), l = 3.
Instance fig1_instance();
// Four equiprobable symbols, f = (0,0,1,1), list size l (default 2).
Instance uniform4_instance(int l = 2);

// Names: "fig1", "uniform4", "counterexample".
std::vector<std::string> catalog_names();
std::optional<Instance> catalog_instance(std::string_view name);

}  // namespace listpriv

#endif  // LISTPRIV_CATALOG_H_
