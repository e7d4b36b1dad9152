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

#ifndef WOLOFSPELL_UTF8_H_
#define WOLOFSPELL_UTF8_H_

#include <string>
#include <string_view>

namespace wolofspell {

// Decodes UTF-8 into Unicode scalars. Ill-formed sequences become U+FFFD.
std::u32string to_scalars(std::string_view utf8);

std::string to_utf8(std::u32string_view scalars);
void append_utf8(std::string& out, char32_t c);

}  // namespace wolofspell

#endif  // WOLOFSPELL_UTF8_H_
