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

#include "listpriv/catalog.h"

#include "listpriv/mechanisms.h"

namespace listpriv {

Instance fig1_instance() {
  return Instance::create({Rational(3, 10), Rational(1, 5), Rational(3, 20), Rational(1, 10), Rational(1, 10),
                           Rational(1, 10), Rational(1, 20)},
                          {0, 0, 0, 1, 1, 1, 1}, 3);
}

Instance uniform4_instance(int l) {
  return Instance::create(std::vector<Rational>(4, Rational(1, 4)), {0, 0, 1, 1}, l);
}

std::vector<std::string> catalog_names() { return {"fig1", "uniform4", "counterexample"}; }

std::optional<Instance> catalog_instance(std::string_view name) {
  if (name == "fig1") return fig1_instance();
  if (name == "uniform4") return uniform4_instance();
  if (name == "counterexample") return counterexample_instance();
  return std::nullopt;
}

}  // namespace listpriv
