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

#ifndef WOLOFSPELL_ERRORS_H_
#define WOLOFSPELL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wolofspell {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// A data file (lexicon, corpus, rule table, cost table, ...) violates its
// format. `line` is 1-based, 0 when the problem is not tied to a line.
class MalformedInput : public Error {
 public:
  MalformedInput(const std::string& source, std::size_t line,
                 const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) +
              ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MalformedLexicon : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class MalformedCorpus : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

// Word contains a scalar outside the Wolof alphabet.
class Unsegmentable : public Error {
 public:
  Unsegmentable(std::size_t offset, char32_t scalar)
      : Error("unsegmentable: scalar U+" + hex(scalar) + " at offset " +
              std::to_string(offset) + " is not a Wolof letter"),
        offset_(offset),
        scalar_(scalar) {}

  std::size_t offset() const { return offset_; }
  char32_t scalar() const { return scalar_; }

 private:
  static std::string hex(char32_t c) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string s;
    for (int shift = 20; shift >= 0; shift -= 4) {
      if (shift > 12 && ((c >> shift) & 0xF) == 0 && s.empty()) continue;
      s.push_back(kDigits[(c >> shift) & 0xF]);
    }
    return s;
  }

  std::size_t offset_;
  char32_t scalar_;
};

class InputTooLong : public Error {
 public:
  using Error::Error;
};

class EmptyLexicon : public Error {
 public:
  EmptyLexicon() : Error("lexicon contains no words") {}
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus contains no entries") {}
};

}  // namespace wolofspell

#endif  // WOLOFSPELL_ERRORS_H_
