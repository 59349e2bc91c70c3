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

// Serial reference kernels. Straight double loops with no pruning; the
// OpenMP versions in kernels_omp.cc are checked against these.

#include <algorithm>

#include "tapcorrect/kernels.h"

namespace tapcorrect::kernels {

std::vector<CandidatePair> screen_serial(const NetworkBundle& bundle,
                                         std::span<const VertexId> characters,
                                         NameFilter filter) {
  const std::size_t relation_types = bundle.relation_types().size();
  std::vector<std::vector<NeighborCount>> profiles;
  profiles.reserve(characters.size());
  for (VertexId v : characters) profiles.push_back(count_profile(bundle, v));

  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < characters.size(); ++i) {
    for (std::size_t j = i + 1; j < characters.size(); ++j) {
      if (!passes(filter, bundle.vertex(characters[i]).display_name,
                  bundle.vertex(characters[j]).display_name)) {
        continue;
      }
      std::uint64_t shared = 0;
      std::uint64_t total = 0;
      for (const SubnetworkOverlap& o :
           overlap(profiles[i], profiles[j], relation_types)) {
        shared += o.shared;
        total += o.degree_x + o.degree_y;
      }
      if (total > 0 && 2 * shared == total) {
        out.push_back(CandidatePair{characters[i], characters[j], 0.0});
      }
    }
  }
  return out;
}

std::vector<NeighborWeightVector> weight_table(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now) {
  std::vector<NeighborWeightVector> table(bundle.vertex_count());
  std::vector<bool> done(bundle.vertex_count(), false);
  for (const auto& [x, y] : pairs) {
    for (VertexId v : {x, y}) {
      bundle.vertex(v);  // throws on an unknown id
      if (done[v.value]) continue;
      table[v.value] = neighbor_weights(bundle, v, now);
      done[v.value] = true;
    }
  }
  return table;
}

std::vector<SimilarityResult> score_serial(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now) {
  const auto table = weight_table(bundle, pairs, now);
  const std::size_t relation_types = bundle.relation_types().size();
  std::vector<SimilarityResult> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    out.push_back(simtap(table[x.value], table[y.value], relation_types, now));
  }
  return out;
}

}  // namespace tapcorrect::kernels
