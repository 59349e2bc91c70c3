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

#include "tapcorrect/structure_screen.h"

#include <algorithm>
#include <map>

#include "format.h"
#include "tapcorrect/error.h"
#include "tapcorrect/ingest.h"
#include "tapcorrect/kernels.h"

namespace tapcorrect {

std::optional<NameFilter> parse_name_filter(std::string_view name) {
  if (name == "off") return NameFilter::kOff;
  if (name == "same") return NameFilter::kSameName;
  if (name == "different") return NameFilter::kDifferentName;
  return std::nullopt;
}

std::string_view to_string(NameFilter filter) {
  switch (filter) {
    case NameFilter::kOff:
      return "off";
    case NameFilter::kSameName:
      return "same";
    case NameFilter::kDifferentName:
      return "different";
  }
  return "off";
}

bool passes(NameFilter filter, std::string_view x_name,
            std::string_view y_name) {
  switch (filter) {
    case NameFilter::kOff:
      return true;
    case NameFilter::kSameName:
      return x_name == y_name;
    case NameFilter::kDifferentName:
      return x_name != y_name;
  }
  return true;
}

std::uint64_t StructureError::degree_x() const {
  std::uint64_t d = 0;
  for (const auto& o : per_relation_type) d += o.degree_x;
  return d;
}

std::uint64_t StructureError::degree_y() const {
  std::uint64_t d = 0;
  for (const auto& o : per_relation_type) d += o.degree_y;
  return d;
}

std::uint64_t StructureError::shared() const {
  std::uint64_t s = 0;
  for (const auto& o : per_relation_type) s += o.shared;
  return s;
}

bool StructureError::is_zero() const {
  const std::uint64_t total = degree_x() + degree_y();
  return total > 0 && 2 * shared() == total;
}

namespace {

void require_character(const NetworkBundle& bundle, VertexId v) {
  if (bundle.vertex(v).kind != VertexKind::kCharacter) {
    throw ValidationError("vertex '" + bundle.vertex(v).key +
                          "' is not a character");
  }
}

double error_value(std::uint64_t shared, std::uint64_t total) {
  if (total == 0) return 1.0;
  if (2 * shared == total) return 0.0;
  return 1.0 - static_cast<double>(2 * shared) / static_cast<double>(total);
}

}  // namespace

StructureError structure_error(const NetworkBundle& bundle, VertexId x,
                               VertexId y) {
  require_character(bundle, x);
  require_character(bundle, y);
  if (x == y) {
    throw ValidationError("structure error of '" + bundle.vertex(x).key +
                          "' with itself");
  }
  const auto px = kernels::count_profile(bundle, x);
  const auto py = kernels::count_profile(bundle, y);
  StructureError out;
  out.x = x;
  out.y = y;
  out.per_relation_type =
      kernels::overlap(px, py, bundle.relation_types().size());
  out.value = error_value(out.shared(), out.degree_x() + out.degree_y());
  return out;
}

CandidateSet screen_candidates(const NetworkBundle& bundle, NameFilter filter,
                               const ParallelOptions& parallel) {
  const auto characters = bundle.characters();
  CandidateSet out;
  out.name_filter = filter;
  out.pairs = parallel.workers == 1
                  ? kernels::screen_serial(bundle, characters, filter)
                  : kernels::screen_omp(bundle, characters, filter,
                                        parallel.workers);
  return out;
}

std::string candidates_to_csv(const NetworkBundle& bundle,
                              const CandidateSet& candidates) {
  std::string out = "x_id,x_name,y_id,y_name,structure_error\n";
  for (const CandidatePair& p : candidates.pairs) {
    const Vertex& x = bundle.vertex(p.x);
    const Vertex& y = bundle.vertex(p.y);
    out += csv_escape(x.key) + ',' + csv_escape(x.display_name) + ',' +
           csv_escape(y.key) + ',' + csv_escape(y.display_name) + ',' +
           internal::format_fixed(p.structure_error, 6) + '\n';
  }
  return out;
}

namespace kernels {

std::vector<NeighborCount> count_profile(const NetworkBundle& bundle,
                                         VertexId character) {
  std::vector<NeighborCount> out;
  for (const TemporalActivityNetwork& tan : bundle.subnetworks()) {
    std::map<std::uint32_t, std::uint32_t> counts;
    for (std::uint32_t local : tan.incident(character)) {
      ++counts[tan.edges()[local].entity.value];
    }
    for (const auto& [entity, count] : counts) {
      out.push_back(NeighborCount{tan.relation_type(), VertexId{entity}, count});
    }
  }
  return out;
}

std::vector<SubnetworkOverlap> overlap(std::span<const NeighborCount> x,
                                       std::span<const NeighborCount> y,
                                       std::size_t relation_types) {
  std::vector<SubnetworkOverlap> out(relation_types);
  for (const NeighborCount& n : x) out[n.relation_type].degree_x += n.count;
  for (const NeighborCount& n : y) out[n.relation_type].degree_y += n.count;
  auto key = [](const NeighborCount& n) {
    return std::pair(n.relation_type, n.entity.value);
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const auto kx = key(x[i]);
    const auto ky = key(y[j]);
    if (kx < ky) {
      ++i;
    } else if (ky < kx) {
      ++j;
    } else {
      out[x[i].relation_type].shared += std::min(x[i].count, y[j].count);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace kernels
}  // namespace tapcorrect
