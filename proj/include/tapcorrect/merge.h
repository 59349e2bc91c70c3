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

// Collapsing duplicate characters.
//
// Each group keeps one representative; the other members are absorbed. An
// absorbed edge is dropped when the representative already carries the same
// (entity, relation type, interval) fact, and is re-pointed at the
// representative otherwise. Merging produces a new bundle; the input is left
// untouched.

#ifndef TAPCORRECT_MERGE_H_
#define TAPCORRECT_MERGE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tapcorrect/graph.h"
#include "tapcorrect/structure_screen.h"

namespace tapcorrect {

enum class RepresentativeRule {
  kSmallestId,  // lexicographically smallest vertex key
  kMaxDegree,   // most edges; ties go to the smallest key
};

struct MergePolicy {
  RepresentativeRule representative = RepresentativeRule::kSmallestId;
};

enum class EdgeDisposition { kDropDuplicate, kTransfer };

struct EdgeAction {
  RelationId edge;
  EdgeDisposition disposition = EdgeDisposition::kTransfer;
};

struct AbsorbedVertex {
  VertexId vertex;
  std::vector<EdgeAction> edges;  // global edge order
};

struct GroupPlan {
  VertexId representative;
  std::vector<AbsorbedVertex> absorbed;  // sorted by key
};

struct MergePlan {
  std::uint64_t bundle_fingerprint = 0;
  std::vector<GroupPlan> groups;  // sorted by representative key

  std::size_t removed_vertices() const;
  std::size_t dropped_edges() const;
  std::size_t transferred_edges() const;
};

// Throws ValidationError for overlapping groups or for members that are not
// characters of `bundle`. Groups with fewer than two distinct members are ignored.
MergePlan plan_merge(const NetworkBundle& bundle,
                     std::span<const std::vector<VertexId>> groups,
                     const MergePolicy& policy = {});

struct MergeAudit {
  std::size_t removed_vertices = 0;
  std::size_t dropped_edges = 0;
  std::size_t transferred_edges = 0;
  std::map<std::string, std::string> mapping;  // absorbed key -> kept key

  // { "removed_vertices": n, "dropped_edges": m, "transferred_edges": k,
  //   "mapping": {old: new} }
  std::string to_json() const;
};

struct MergedNetwork {
  NetworkBundle bundle;
  // Every character key of the input -> key of the vertex it survives as.
  std::map<std::string, std::string> provenance;
  MergeAudit audit;
};

// Throws ValidationError if `plan` was made for a different bundle.
MergedNetwork apply_merge(const NetworkBundle& bundle, const MergePlan& plan);

struct VerificationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Re-checks a merge: vertex count drop, absorbed ids gone, untouched
// vertices keep their edges, representatives hold their own edges plus the
// transferred ones, and every entity keeps the distinct (relation type,
// interval) facts it had with the group. `candidates` (ids of `before`) whose
// members both survive must still have a computable structure error.
VerificationReport verify_merge(const NetworkBundle& before,
                                const NetworkBundle& after,
                                const MergePlan& plan,
                                std::span<const CandidatePair> candidates = {});

// Looks up groups given as vertex keys; keys missing from `bundle` are
// skipped.
std::vector<std::vector<VertexId>> surviving_groups(
    const NetworkBundle& bundle,
    const std::vector<std::vector<std::string>>& key_groups);

}  // namespace tapcorrect

#endif  // TAPCORRECT_MERGE_H_
