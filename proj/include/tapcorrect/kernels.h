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

// All-pairs kernels. Each comes as a serial reference and an OpenMP version
// that must produce identical output for any thread count; tests compare
// them and bench/ times them.

#ifndef TAPCORRECT_KERNELS_H_
#define TAPCORRECT_KERNELS_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tapcorrect/graph.h"
#include "tapcorrect/structure_screen.h"
#include "tapcorrect/tap_similarity.h"

namespace tapcorrect::kernels {

struct NeighborCount {
  RelationTypeIndex relation_type = 0;
  VertexId entity;
  std::uint32_t count = 0;
  auto operator<=>(const NeighborCount&) const = default;
};

// (relation type, entity, edge count) for every entity adjacent to
// `character`, sorted.
std::vector<NeighborCount> count_profile(const NetworkBundle& bundle,
                                         VertexId character);

// Per-relation-type degrees and shared counts of two profiles.
std::vector<SubnetworkOverlap> overlap(std::span<const NeighborCount> x,
                                       std::span<const NeighborCount> y,
                                       std::size_t relation_types);

// Zero-error pairs among `characters` (which must be sorted by key), sorted
// by (x key, y key).
std::vector<CandidatePair> screen_serial(const NetworkBundle& bundle,
                                         std::span<const VertexId> characters,
                                         NameFilter filter);
std::vector<CandidatePair> screen_omp(const NetworkBundle& bundle,
                                      std::span<const VertexId> characters,
                                      NameFilter filter, int workers);

std::vector<SimilarityResult> score_serial(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now);
std::vector<SimilarityResult> score_omp(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now,
    int workers);

// Neighbor weight vectors for every vertex appearing in `pairs`, indexed by
// VertexId::value (vectors of other vertices are left empty).
std::vector<NeighborWeightVector> weight_table(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now);

}  // namespace tapcorrect::kernels

#endif  // TAPCORRECT_KERNELS_H_
