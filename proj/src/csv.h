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

#ifndef TAPCORRECT_SRC_CSV_H_
#define TAPCORRECT_SRC_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tapcorrect::internal {

struct CsvRow {
  std::size_t line = 0;  // line the row starts on, 1-based
  std::vector<std::string> fields;
  std::string error;     // non-empty if the row could not be tokenized
};

// RFC 4180 reader: quoted fields, doubled quotes, embedded line breaks,
// LF or CRLF endings. A leading UTF-8 BOM is skipped and blank lines are
// dropped.
std::vector<CsvRow> parse_csv(std::string_view text);

}  // namespace tapcorrect::internal

#endif  // TAPCORRECT_SRC_CSV_H_
