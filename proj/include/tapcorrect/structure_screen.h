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

// Structure error between two characters and exhaustive screening for
// candidate duplicates.
//
// Let c_v(beta, z) be the number of beta-edges between character v and entity
// z, and deg(v) the sum of those counts over all subnetworks. Then
//
//   error(x, y) = 1 - 2 * sum_{beta,z} min(c_x(beta,z), c_y(beta,z))
//                     / (deg(x) + deg(y))
//
// i.e. one minus the Dice coefficient of the two neighbor multisets. It is 0
// exactly when x and y have the same (entity, relation type, count)
// neighborhood and 1 when they share nothing (or both have no edges).

#ifndef TAPCORRECT_STRUCTURE_SCREEN_H_
#define TAPCORRECT_STRUCTURE_SCREEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tapcorrect/graph.h"

namespace tapcorrect {

enum class NameFilter {
  kOff,            // every pair
  kSameName,       // only pairs whose display names are equal
  kDifferentName,  // only pairs whose display names differ
};

// Accepts "off", "same", "different".
std::optional<NameFilter> parse_name_filter(std::string_view name);
std::string_view to_string(NameFilter filter);
bool passes(NameFilter filter, std::string_view x_name,
            std::string_view y_name);

struct SubnetworkOverlap {
  std::uint64_t degree_x = 0;
  std::uint64_t degree_y = 0;
  std::uint64_t shared = 0;  // sum of min counts

  auto operator<=>(const SubnetworkOverlap&) const = default;
};

struct StructureError {
  VertexId x;
  VertexId y;
  double value = 1.0;
  // Indexed by RelationTypeIndex.
  std::vector<SubnetworkOverlap> per_relation_type;

  std::uint64_t degree_x() const;
  std::uint64_t degree_y() const;
  std::uint64_t shared() const;
  // Exact integer test: 2 * shared == deg(x) + deg(y) > 0.
  bool is_zero() const;
};

// Throws ValidationError if x == y or either is not a character of `bundle`.
StructureError structure_error(const NetworkBundle& bundle, VertexId x,
                               VertexId y);

// `x` sorts before `y` by vertex key.
struct CandidatePair {
  VertexId x;
  VertexId y;
  double structure_error = 0.0;

  auto operator<=>(const CandidatePair&) const = default;
};

// The set H.
struct CandidateSet {
  NameFilter name_filter = NameFilter::kOff;
  std::vector<CandidatePair> pairs;
};

struct ParallelOptions {
  // 1 runs the serial reference kernels; 0 uses the OpenMP default.
  int workers = 0;
};

// All unordered character pairs passing `filter` whose structure error is
// zero, sorted by (x key, y key).
CandidateSet screen_candidates(const NetworkBundle& bundle, NameFilter filter,
                               const ParallelOptions& parallel = {});

// x_id,x_name,y_id,y_name,structure_error
std::string candidates_to_csv(const NetworkBundle& bundle,
                              const CandidateSet& candidates);

}  // namespace tapcorrect

#endif  // TAPCORRECT_STRUCTURE_SCREEN_H_
