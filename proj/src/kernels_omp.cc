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

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tapcorrect/kernels.h"

namespace tapcorrect::kernels {
namespace {

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

}  // namespace

std::vector<CandidatePair> screen_omp(const NetworkBundle& bundle,
                                      std::span<const VertexId> characters,
                                      NameFilter filter, int workers) {
  const int threads = thread_count(workers);
  const std::size_t relation_types = bundle.relation_types().size();
  const auto n = static_cast<std::int64_t>(characters.size());

  std::vector<std::vector<NeighborCount>> profiles(characters.size());
  std::vector<std::uint64_t> degree(characters.size(), 0);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    profiles[i] = count_profile(bundle, characters[i]);
    for (const NeighborCount& c : profiles[i]) degree[i] += c.count;
  }

  std::vector<CandidatePair> out;
#pragma omp parallel num_threads(threads)
  {
    std::vector<CandidatePair> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      if (degree[i] == 0) continue;
      const std::string& x_name = bundle.vertex(characters[i]).display_name;
      for (std::int64_t j = i + 1; j < n; ++j) {
        // 2 * shared == deg_x + deg_y forces deg_x == deg_y == shared.
        if (degree[j] != degree[i]) continue;
        if (!passes(filter, x_name,
                    bundle.vertex(characters[j]).display_name)) {
          continue;
        }
        std::uint64_t shared = 0;
        for (const SubnetworkOverlap& o :
             overlap(profiles[i], profiles[j], relation_types)) {
          shared += o.shared;
        }
        if (shared == degree[i]) {
          local.push_back(CandidatePair{characters[i], characters[j], 0.0});
        }
      }
    }
#pragma omp critical(tapcorrect_screen_merge)
    out.insert(out.end(), local.begin(), local.end());
  }

  // Position in `characters` is the key order.
  std::vector<std::uint32_t> rank(bundle.vertex_count(), 0);
  for (std::size_t i = 0; i < characters.size(); ++i) {
    rank[characters[i].value] = static_cast<std::uint32_t>(i);
  }
  std::sort(out.begin(), out.end(),
            [&](const CandidatePair& a, const CandidatePair& b) {
              return std::pair(rank[a.x.value], rank[a.y.value]) <
                     std::pair(rank[b.x.value], rank[b.y.value]);
            });
  return out;
}

std::vector<SimilarityResult> score_omp(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now,
    int workers) {
  const int threads = thread_count(workers);
  // Weight vectors may throw (future-dated edges), so build them outside the
  // parallel region.
  const auto table = weight_table(bundle, pairs, now);
  const std::size_t relation_types = bundle.relation_types().size();
  std::vector<SimilarityResult> out(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& [x, y] = pairs[i];
    out[i] = simtap(table[x.value], table[y.value], relation_types, now);
  }
  return out;
}

}  // namespace tapcorrect::kernels
