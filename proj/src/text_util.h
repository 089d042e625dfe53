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

// Small string helpers shared by the loaders. Internal to the library.

#ifndef SNACS_SRC_TEXT_UTIL_H_
#define SNACS_SRC_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace snacs::text {

// Splits on '\n'; a trailing '\r' is kept (callers reject it where it matters).
std::vector<std::string_view> SplitLines(std::string_view data);
std::vector<std::string_view> Split(std::string_view s, char sep);
std::string_view Trim(std::string_view s);
// Drops everything from the first '#'.
std::string_view StripComment(std::string_view line);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);
bool IsLabelName(std::string_view s);
bool IsValidUtf8(std::string_view s);
// Byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t FirstInvalidUtf8(std::string_view s);
// Throws snacs::Error if the file cannot be read.
std::string ReadFile(const std::filesystem::path &path);

}  // namespace snacs::text

#endif  // SNACS_SRC_TEXT_UTIL_H_
