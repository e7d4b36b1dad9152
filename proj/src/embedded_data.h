// Copyright 2026 The wolofspell Authors.
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

#ifndef WOLOFSPELL_SRC_EMBEDDED_DATA_H_
#define WOLOFSPELL_SRC_EMBEDDED_DATA_H_

#include <string_view>

// Contents of data/translit_rules.tsv and data/costs.tsv, baked in at
// configure time.
namespace wolofspell::embedded {

extern const std::string_view kTranslitRulesTsv;
extern const std::string_view kCostsTsv;

}  // namespace wolofspell::embedded

#endif  // WOLOFSPELL_SRC_EMBEDDED_DATA_H_
