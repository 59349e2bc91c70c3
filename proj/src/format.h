// Copyright 2026 The tapcorrect Authors
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

#ifndef TAPCORRECT_SRC_FORMAT_H_
#define TAPCORRECT_SRC_FORMAT_H_

#include <charconv>
#include <string>

namespace tapcorrect::internal {

// Locale-independent fixed-point rendering.
inline std::string format_fixed(double value, int precision) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::fixed, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace tapcorrect::internal

#endif  // TAPCORRECT_SRC_FORMAT_H_
