// Copyright 2026 The snacs-hi Authors.
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

#ifndef SNACS_ERROR_H_
#define SNACS_ERROR_H_

#include <stdexcept>
#include <string>

namespace snacs {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data or corpus file failed to load. Line and column are 1-based; 0 means
// the position is unknown.
class LoadError : public Error {
 public:
  LoadError(std::string message, int line, int column = 0,
            std::string code = "LOAD_ERROR")
      : Error(Format(message, line, column)),
        message_(std::move(message)),
        line_(line),
        column_(column),
        code_(std::move(code)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string &code() const { return code_; }
  const std::string &bare_message() const { return message_; }

 private:
  static std::string Format(const std::string &message, int line, int column) {
    if (line <= 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::string message_;
  int line_;
  int column_;
  std::string code_;
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string &label)
      : Error("unknown label: " + label) {}
};

class UnknownLemmaError : public Error {
 public:
  explicit UnknownLemmaError(const std::string &lemma)
      : Error("unknown lemma: " + lemma) {}
};

}  // namespace snacs

#endif  // SNACS_ERROR_H_
