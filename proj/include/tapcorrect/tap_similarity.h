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

// Temporal activity path (TAP) similarity.
//
// Each edge gets a temporal weight
//
//   w = (now + 1 - start) * (end + 1 - start)
//
// favouring long activities that started long ago relative to `now`. A TAP
// is a length-2 path character -> entity -> character inside one relation
// type's subnetwork; its weight is the product of its two edge weights.
// Within subnetwork beta
//
//   SimTAP_beta(x, y) = 2 W(P_xy) / (W(P_xx) + W(P_yy))
//
// where W(P_uv) sums path weights over every (shared entity, edge of u,
// edge of v) triple, so W(P_xy) = sum_z s_x(z) s_y(z) with s_v(z) the summed
// weight of v's edges to z. The bundle-level SimTAP is the plain mean over
// all declared relation types, counting subnetworks a character is absent
// from as 0.
//
// Weights and sums are exact integers; only the final ratio is floating
// point, so results do not depend on accumulation order or worker count.

#ifndef TAPCORRECT_TAP_SIMILARITY_H_
#define TAPCORRECT_TAP_SIMILARITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tapcorrect/graph.h"
#include "tapcorrect/structure_screen.h"

namespace tapcorrect {

using Weight = std::int64_t;
// Wide accumulator for sums of weight products.
using WeightSum = __int128;

struct TemporalWeight {
  RelationId relation;
  Weight weight = 0;
};

// Throws ValidationError when the edge starts after `now` or the product
// overflows 64 bits.
TemporalWeight edge_weight(const TemporalEdge& edge, TimePoint now);

struct TapPath {
  VertexId start;
  VertexId entity;
  VertexId end;
  RelationId first_edge;   // start -- entity
  RelationId second_edge;  // entity -- end
  Weight first_weight = 0;
  Weight second_weight = 0;
};

double path_weight(const TapPath& path);

// Every x -> z -> y path in subnetwork `relation_type`: one per shared entity
// z and pair (edge x--z, edge y--z). With x == y this is the full double
// loop, including each edge paired with itself. Ordered by entity id, then
// by edge insertion order.
std::vector<TapPath> enumerate_paths(const NetworkBundle& bundle,
                                     RelationTypeIndex relation_type,
                                     VertexId x, VertexId y, TimePoint now);

// Per subnetwork, the summed temporal weight to each adjacent entity.
struct NeighborWeightVector {
  struct Entry {
    VertexId entity;
    Weight weight = 0;
    auto operator<=>(const Entry&) const = default;
  };
  VertexId character;
  // Indexed by RelationTypeIndex; entries sorted by entity id.
  std::vector<std::vector<Entry>> per_relation_type;
};

NeighborWeightVector neighbor_weights(const NetworkBundle& bundle,
                                      VertexId character, TimePoint now);

// SimTAP_beta over precomputed vectors; 0 when neither has beta-edges.
double simtap_beta(const NeighborWeightVector& x, const NeighborWeightVector& y,
                   RelationTypeIndex relation_type);
double simtap_beta(const NetworkBundle& bundle,
                   RelationTypeIndex relation_type, VertexId x, VertexId y,
                   TimePoint now);

// Arithmetic mean of the per-subnetwork values (0 for an empty span).
double aggregate_simtap(std::span<const double> per_relation_type);

struct SimilarityResult {
  VertexId x;
  VertexId y;
  std::vector<double> per_relation_type;  // in declaration order
  double simtap = 0.0;
  TimePoint now = 0;
};

SimilarityResult simtap(const NeighborWeightVector& x,
                        const NeighborWeightVector& y, std::size_t relation_types,
                        TimePoint now);
// Throws ValidationError for non-character arguments or future-dated edges.
SimilarityResult simtap(const NetworkBundle& bundle, VertexId x, VertexId y,
                        TimePoint now);

// The anchor used for temporal weights: `override` if set, else the
// bundle's declared anchor, else the latest edge end (0 for no edges).
TimePoint resolve_now(const NetworkBundle& bundle,
                      std::optional<TimePoint> override = std::nullopt);

// SimTAP for a batch of pairs, in input order.
std::vector<SimilarityResult> score_pairs(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now,
    const ParallelOptions& parallel = {});

// The set H~: disjoint groups of size >= 2.
struct RedundantGroupSet {
  double theta = 0.0;
  TimePoint now = 0;
  // Each group sorted by key; groups sorted by their first key.
  std::vector<std::vector<VertexId>> groups;
  // Similarity of every candidate pair, in candidate order.
  std::vector<SimilarityResult> scored;
};

// Scores every candidate, keeps pairs with SimTAP >= theta and returns the
// connected components of the kept pairs. Throws ValidationError unless
// 0 < theta <= 1.
RedundantGroupSet threshold_groups(const CandidateSet& candidates,
                                   const NetworkBundle& bundle, double theta,
                                   TimePoint now,
                                   const ParallelOptions& parallel = {});

// Connected components of `edges` over vertex ids, via union-find. Only
// vertices that appear in some edge are reported.
std::vector<std::vector<VertexId>> connected_groups(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> edges);

// x_id,x_name,y_id,y_name,<one column per relation type>,simtap
std::string similarity_to_csv(const NetworkBundle& bundle,
                              std::span<const SimilarityResult> results);
// { "theta": t, "now": n, "groups": [[ids...]] }
std::string groups_to_json(const NetworkBundle& bundle,
                           const RedundantGroupSet& groups);

}  // namespace tapcorrect

#endif  // TAPCORRECT_TAP_SIMILARITY_H_
