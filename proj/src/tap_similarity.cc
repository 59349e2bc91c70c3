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

#include "tapcorrect/tap_similarity.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "format.h"
#include "json.hpp"
#include "tapcorrect/error.h"
#include "tapcorrect/ingest.h"
#include "tapcorrect/kernels.h"

namespace tapcorrect {
namespace {

void require_character(const NetworkBundle& bundle, VertexId v) {
  if (bundle.vertex(v).kind != VertexKind::kCharacter) {
    throw ValidationError("vertex '" + bundle.vertex(v).key +
                          "' is not a character");
  }
}

WeightSum checked_add(WeightSum a, WeightSum b) {
  WeightSum r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ValidationError("temporal weight sum overflow");
  }
  return r;
}

WeightSum checked_mul(WeightSum a, WeightSum b) {
  WeightSum r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ValidationError("temporal weight product overflow");
  }
  return r;
}

}  // namespace

TemporalWeight edge_weight(const TemporalEdge& edge, TimePoint now) {
  if (edge.interval.start > now) {
    throw ValidationError("relation " + std::to_string(edge.id.value) +
                          " starts at " + std::to_string(edge.interval.start) +
                          ", after now=" + std::to_string(now));
  }
  if (!edge.interval.valid()) {
    throw ValidationError("relation " + std::to_string(edge.id.value) +
                          " has an invalid interval");
  }
  const Weight recency = now + 1 - edge.interval.start;
  const Weight duration = edge.interval.end + 1 - edge.interval.start;
  Weight w;
  if (__builtin_mul_overflow(recency, duration, &w)) {
    throw ValidationError("temporal weight overflow on relation " +
                          std::to_string(edge.id.value));
  }
  return TemporalWeight{edge.id, w};
}

double path_weight(const TapPath& path) {
  return static_cast<double>(path.first_weight) *
         static_cast<double>(path.second_weight);
}

std::vector<TapPath> enumerate_paths(const NetworkBundle& bundle,
                                     RelationTypeIndex relation_type,
                                     VertexId x, VertexId y, TimePoint now) {
  require_character(bundle, x);
  require_character(bundle, y);
  const TemporalActivityNetwork& tan = bundle.subnetwork(relation_type);
  const auto edges = tan.edges();

  std::map<std::uint32_t, std::vector<const TemporalEdge*>> from_x;
  std::map<std::uint32_t, std::vector<const TemporalEdge*>> from_y;
  for (std::uint32_t local : tan.incident(x)) {
    from_x[edges[local].entity.value].push_back(&edges[local]);
  }
  for (std::uint32_t local : tan.incident(y)) {
    from_y[edges[local].entity.value].push_back(&edges[local]);
  }

  std::vector<TapPath> out;
  for (const auto& [entity, xs] : from_x) {
    auto it = from_y.find(entity);
    if (it == from_y.end()) continue;
    for (const TemporalEdge* a : xs) {
      for (const TemporalEdge* b : it->second) {
        out.push_back(TapPath{x, VertexId{entity}, y, a->id, b->id,
                              edge_weight(*a, now).weight,
                              edge_weight(*b, now).weight});
      }
    }
  }
  return out;
}

NeighborWeightVector neighbor_weights(const NetworkBundle& bundle,
                                      VertexId character, TimePoint now) {
  require_character(bundle, character);
  NeighborWeightVector out;
  out.character = character;
  out.per_relation_type.resize(bundle.relation_types().size());
  for (const TemporalActivityNetwork& tan : bundle.subnetworks()) {
    std::map<std::uint32_t, Weight> sums;
    for (std::uint32_t local : tan.incident(character)) {
      const TemporalEdge& e = tan.edges()[local];
      Weight& s = sums[e.entity.value];
      if (__builtin_add_overflow(s, edge_weight(e, now).weight, &s)) {
        throw ValidationError("temporal weight sum overflow");
      }
    }
    auto& entries = out.per_relation_type[tan.relation_type()];
    entries.reserve(sums.size());
    for (const auto& [entity, w] : sums) {
      entries.push_back({VertexId{entity}, w});
    }
  }
  return out;
}

double simtap_beta(const NeighborWeightVector& x, const NeighborWeightVector& y,
                   RelationTypeIndex relation_type) {
  static const std::vector<NeighborWeightVector::Entry> kEmpty;
  const auto& xs = relation_type < x.per_relation_type.size()
                       ? x.per_relation_type[relation_type]
                       : kEmpty;
  const auto& ys = relation_type < y.per_relation_type.size()
                       ? y.per_relation_type[relation_type]
                       : kEmpty;

  WeightSum xx = 0;
  WeightSum yy = 0;
  WeightSum xy = 0;
  for (const auto& e : xs) xx = checked_add(xx, checked_mul(e.weight, e.weight));
  for (const auto& e : ys) yy = checked_add(yy, checked_mul(e.weight, e.weight));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i].entity < ys[j].entity) {
      ++i;
    } else if (ys[j].entity < xs[i].entity) {
      ++j;
    } else {
      xy = checked_add(xy, checked_mul(xs[i].weight, ys[j].weight));
      ++i;
      ++j;
    }
  }
  const WeightSum denominator = checked_add(xx, yy);
  if (denominator == 0) return 0.0;
  const WeightSum numerator = checked_mul(2, xy);
  if (numerator == denominator) return 1.0;
  const double ratio =
      static_cast<double>(numerator) / static_cast<double>(denominator);
  // Unequal vectors never reach 1, even where rounding would say so.
  return std::min(ratio, std::nextafter(1.0, 0.0));
}

double simtap_beta(const NetworkBundle& bundle,
                   RelationTypeIndex relation_type, VertexId x, VertexId y,
                   TimePoint now) {
  bundle.subnetwork(relation_type);  // throws on an unknown index
  return simtap_beta(neighbor_weights(bundle, x, now),
                     neighbor_weights(bundle, y, now), relation_type);
}

double aggregate_simtap(std::span<const double> per_relation_type) {
  if (per_relation_type.empty()) return 0.0;
  double sum = 0.0;
  bool all_one = true;
  for (double v : per_relation_type) {
    sum += v;
    all_one = all_one && v == 1.0;
  }
  const double mean = sum / static_cast<double>(per_relation_type.size());
  // Rounding must not turn a mean of non-identical terms into exactly 1.
  return all_one ? 1.0 : std::min(mean, std::nextafter(1.0, 0.0));
}

SimilarityResult simtap(const NeighborWeightVector& x,
                        const NeighborWeightVector& y,
                        std::size_t relation_types, TimePoint now) {
  SimilarityResult out;
  out.x = x.character;
  out.y = y.character;
  out.now = now;
  out.per_relation_type.reserve(relation_types);
  for (std::size_t b = 0; b < relation_types; ++b) {
    out.per_relation_type.push_back(
        simtap_beta(x, y, static_cast<RelationTypeIndex>(b)));
  }
  out.simtap = aggregate_simtap(out.per_relation_type);
  return out;
}

SimilarityResult simtap(const NetworkBundle& bundle, VertexId x, VertexId y,
                        TimePoint now) {
  return simtap(neighbor_weights(bundle, x, now),
                neighbor_weights(bundle, y, now),
                bundle.relation_types().size(), now);
}

TimePoint resolve_now(const NetworkBundle& bundle,
                      std::optional<TimePoint> override) {
  if (override) return *override;
  if (bundle.now_anchor()) return *bundle.now_anchor();
  return bundle.max_end().value_or(0);
}

std::vector<SimilarityResult> score_pairs(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> pairs, TimePoint now,
    const ParallelOptions& parallel) {
  for (const auto& [x, y] : pairs) {
    require_character(bundle, x);
    require_character(bundle, y);
  }
  return parallel.workers == 1
             ? kernels::score_serial(bundle, pairs, now)
             : kernels::score_omp(bundle, pairs, now, parallel.workers);
}

RedundantGroupSet threshold_groups(const CandidateSet& candidates,
                                   const NetworkBundle& bundle, double theta,
                                   TimePoint now,
                                   const ParallelOptions& parallel) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ValidationError("theta must be in (0, 1], got " +
                          internal::format_fixed(theta, 6));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(candidates.pairs.size());
  for (const CandidatePair& c : candidates.pairs) pairs.emplace_back(c.x, c.y);

  RedundantGroupSet out;
  out.theta = theta;
  out.now = now;
  out.scored = score_pairs(bundle, pairs, now, parallel);

  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const SimilarityResult& r : out.scored) {
    if (r.simtap >= theta) kept.emplace_back(r.x, r.y);
  }
  out.groups = connected_groups(bundle, kept);
  return out;
}

std::vector<std::vector<VertexId>> connected_groups(
    const NetworkBundle& bundle,
    std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::uint32_t> parent(bundle.vertex_count());
  std::iota(parent.begin(), parent.end(), 0U);
  std::vector<bool> seen(bundle.vertex_count(), false);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [a, b] : edges) {
    bundle.vertex(a);
    bundle.vertex(b);
    seen[a.value] = seen[b.value] = true;
    const auto ra = find(a.value);
    const auto rb = find(b.value);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::uint32_t, std::vector<VertexId>> by_root;
  for (std::uint32_t v = 0; v < parent.size(); ++v) {
    if (seen[v]) by_root[find(v)].push_back(VertexId{v});
  }
  auto by_key = [&](VertexId a, VertexId b) {
    return bundle.vertex(a).key < bundle.vertex(b).key;
  };
  std::vector<std::vector<VertexId>> groups;
  for (auto& [root, members] : by_root) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), by_key);
    groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(),
            [&](const auto& a, const auto& b) { return by_key(a[0], b[0]); });
  return groups;
}

std::string similarity_to_csv(const NetworkBundle& bundle,
                              std::span<const SimilarityResult> results) {
  std::string out = "x_id,x_name,y_id,y_name";
  for (const std::string& label : bundle.relation_types()) {
    out += ',' + csv_escape(label);
  }
  out += ",simtap\n";
  for (const SimilarityResult& r : results) {
    const Vertex& x = bundle.vertex(r.x);
    const Vertex& y = bundle.vertex(r.y);
    out += csv_escape(x.key) + ',' + csv_escape(x.display_name) + ',' +
           csv_escape(y.key) + ',' + csv_escape(y.display_name);
    for (double v : r.per_relation_type) {
      out += ',' + internal::format_fixed(v, 6);
    }
    out += ',' + internal::format_fixed(r.simtap, 6) + '\n';
  }
  return out;
}

std::string groups_to_json(const NetworkBundle& bundle,
                           const RedundantGroupSet& groups) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& group : groups.groups) {
    nlohmann::json ids = nlohmann::json::array();
    for (VertexId v : group) ids.push_back(bundle.vertex(v).key);
    list.push_back(std::move(ids));
  }
  nlohmann::json doc = {
      {"theta", groups.theta}, {"now", groups.now}, {"groups", list}};
  return doc.dump(2) + "\n";
}

}  // namespace tapcorrect
