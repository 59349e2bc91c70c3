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

#include "tapcorrect/graph.h"

#include <algorithm>
#include <utility>

#include "fnv.h"
#include "tapcorrect/error.h"

namespace tapcorrect {

TimeInterval TimeInterval::Make(TimePoint start, TimePoint end) {
  if (start < 0 || end < 0) {
    throw ValidationError("negative time point in interval [" +
                          std::to_string(start) + ", " + std::to_string(end) +
                          "]");
  }
  if (end < start) {
    throw ValidationError("inverted interval [" + std::to_string(start) +
                          ", " + std::to_string(end) + "]");
  }
  return TimeInterval{start, end};
}

std::string_view to_string(VertexKind kind) {
  return kind == VertexKind::kCharacter ? "character" : "entity";
}

std::span<const std::uint32_t> TemporalActivityNetwork::incident(
    VertexId v) const {
  if (v.value >= incidence_.size()) return {};
  return incidence_[v.value];
}

void TemporalActivityNetwork::append(const TemporalEdge& edge) {
  const auto local = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(edge);
  const std::uint32_t hi = std::max(edge.character.value, edge.entity.value);
  if (incidence_.size() <= hi) incidence_.resize(hi + 1);
  incidence_[edge.character.value].push_back(local);
  incidence_[edge.entity.value].push_back(local);
}

void NetworkBundle::require_unsealed() const {
  if (sealed_) throw ValidationError("bundle is sealed");
}

RelationTypeIndex NetworkBundle::declare_relation_type(std::string label) {
  if (label.empty()) throw ValidationError("empty relation type label");
  if (auto existing = relation_type_index(label)) return *existing;
  require_unsealed();
  const auto index = static_cast<RelationTypeIndex>(relation_types_.size());
  relation_types_.push_back(std::move(label));
  subnetworks_.emplace_back(index);
  return index;
}

void NetworkBundle::declare_vertex_type(std::string label) {
  if (label.empty()) throw ValidationError("empty vertex type label");
  require_unsealed();
  vertex_types_.insert(std::move(label));
}

VertexId NetworkBundle::add_vertex(VertexKind kind, std::string type_label,
                                   std::string display_name,
                                   std::optional<std::string> key) {
  require_unsealed();
  if (type_label.empty()) throw ValidationError("empty vertex type label");
  const VertexId id{static_cast<std::uint32_t>(vertices_.size())};
  std::string k;
  if (key) {
    if (key->empty()) throw ValidationError("empty vertex key");
    if (by_key_.contains(*key)) {
      throw ValidationError("duplicate vertex id '" + *key + "'");
    }
    k = std::move(*key);
  } else {
    const char prefix = kind == VertexKind::kCharacter ? 'c' : 'e';
    std::size_t n = vertices_.size();
    do {
      k = prefix + std::to_string(n++);
    } while (by_key_.contains(k));
  }
  vertex_types_.insert(type_label);
  by_key_.emplace(k, id);
  vertices_.push_back(Vertex{id, std::move(k), kind, std::move(type_label),
                             std::move(display_name)});
  return id;
}

RelationId NetworkBundle::add_edge(VertexId character, VertexId entity,
                                   std::string_view relation_type,
                                   TimeInterval interval,
                                   std::optional<RelationId> id) {
  require_unsealed();
  const Vertex& c = vertex(character);
  const Vertex& e = vertex(entity);
  if (c.kind != VertexKind::kCharacter) {
    throw ValidationError("vertex '" + c.key + "' is not a character");
  }
  if (e.kind != VertexKind::kEntity) {
    throw ValidationError("vertex '" + e.key + "' is not an entity");
  }
  if (!interval.valid()) {
    // Re-validate for the message.
    TimeInterval::Make(interval.start, interval.end);
  }
  const auto beta = relation_type_index(relation_type);
  if (!beta) {
    throw ValidationError("undeclared relation type '" +
                          std::string(relation_type) + "'");
  }
  RelationId rid;
  if (id) {
    if (relation_ids_.contains(id->value)) {
      throw ValidationError("duplicate relation id " +
                            std::to_string(id->value));
    }
    rid = *id;
  } else {
    while (relation_ids_.contains(next_relation_id_)) ++next_relation_id_;
    rid = RelationId{next_relation_id_};
  }
  relation_ids_.insert(rid.value);
  next_relation_id_ = std::max(next_relation_id_, rid.value + 1);
  const TemporalEdge edge{rid, character, entity, *beta, interval};
  edges_.push_back(edge);
  subnetworks_[*beta].append(edge);
  return rid;
}

void NetworkBundle::set_time_unit(std::string unit) {
  require_unsealed();
  time_unit_ = std::move(unit);
}

void NetworkBundle::set_now_anchor(std::optional<TimePoint> now) {
  require_unsealed();
  now_anchor_ = now;
}

const Vertex& NetworkBundle::vertex(VertexId id) const {
  if (id.value >= vertices_.size()) {
    throw ValidationError("unknown vertex #" + std::to_string(id.value));
  }
  return vertices_[id.value];
}

std::optional<VertexId> NetworkBundle::find(std::string_view key) const {
  auto it = by_key_.find(std::string(key));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> NetworkBundle::characters() const {
  std::vector<VertexId> out;
  for (const Vertex& v : vertices_) {
    if (v.kind == VertexKind::kCharacter) out.push_back(v.id);
  }
  std::sort(out.begin(), out.end(), [this](VertexId a, VertexId b) {
    return vertices_[a.value].key < vertices_[b.value].key;
  });
  return out;
}

std::optional<RelationTypeIndex> NetworkBundle::relation_type_index(
    std::string_view label) const {
  for (std::size_t i = 0; i < relation_types_.size(); ++i) {
    if (relation_types_[i] == label) return static_cast<RelationTypeIndex>(i);
  }
  return std::nullopt;
}

const std::string& NetworkBundle::relation_type_label(
    RelationTypeIndex index) const {
  if (index >= relation_types_.size()) {
    throw ValidationError("unknown relation type #" + std::to_string(index));
  }
  return relation_types_[index];
}

const TemporalActivityNetwork& NetworkBundle::subnetwork(
    RelationTypeIndex index) const {
  if (index >= subnetworks_.size()) {
    throw ValidationError("unknown relation type #" + std::to_string(index));
  }
  return subnetworks_[index];
}

std::optional<TimePoint> NetworkBundle::max_end() const {
  if (edges_.empty()) return std::nullopt;
  TimePoint m = edges_.front().interval.end;
  for (const TemporalEdge& e : edges_) m = std::max(m, e.interval.end);
  return m;
}

std::uint64_t NetworkBundle::fingerprint() const {
  internal::Fnv1a h;
  h.add(static_cast<std::uint64_t>(relation_types_.size()));
  for (const std::string& label : relation_types_) h.add_field(label);
  h.add(static_cast<std::uint64_t>(vertices_.size()));
  for (const Vertex& v : vertices_) {
    h.add_field(v.key);
    h.add(static_cast<std::uint64_t>(v.kind));
    h.add_field(v.type_label);
    h.add_field(v.display_name);
  }
  h.add(static_cast<std::uint64_t>(edges_.size()));
  for (const TemporalEdge& e : edges_) {
    h.add(e.id.value);
    h.add(e.character.value);
    h.add(e.entity.value);
    h.add(e.relation_type);
    h.add(static_cast<std::uint64_t>(e.interval.start));
    h.add(static_cast<std::uint64_t>(e.interval.end));
  }
  return h.value();
}

std::vector<std::string> validate(const NetworkBundle& bundle) {
  std::vector<std::string> problems;
  if (bundle.vertex_types().size() < 2) {
    problems.push_back("heterogeneity: need at least 2 vertex type labels, have " +
                       std::to_string(bundle.vertex_types().size()));
  }
  if (bundle.relation_types().empty()) {
    problems.push_back("heterogeneity: need at least 1 relation type label");
  }
  return problems;
}

OneModeNetwork::OneModeNetwork(std::vector<VertexId> characters,
                               std::vector<CharacterRelation> relations)
    : characters_(std::move(characters)), relations_(std::move(relations)) {
  for (const CharacterRelation& r : relations_) {
    auto key = std::minmax(r.first.value, r.second.value);
    ++counts_[{key.first, key.second}];
  }
}

std::size_t OneModeNetwork::multiplicity(VertexId a, VertexId b) const {
  auto key = std::minmax(a.value, b.value);
  auto it = counts_.find({key.first, key.second});
  return it == counts_.end() ? 0 : it->second;
}

OneModeNetwork project_one_mode(const NetworkBundle& bundle) {
  std::vector<CharacterRelation> relations;
  for (const TemporalActivityNetwork& tan : bundle.subnetworks()) {
    const auto edges = tan.edges();
    for (const Vertex& z : bundle.vertices()) {
      if (z.kind != VertexKind::kEntity) continue;
      const auto inc = tan.incident(z.id);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          const TemporalEdge& a = edges[inc[i]];
          const TemporalEdge& b = edges[inc[j]];
          if (a.character == b.character) continue;
          const bool a_first = a.character < b.character;
          const TemporalEdge& lo = a_first ? a : b;
          const TemporalEdge& hi = a_first ? b : a;
          relations.push_back(CharacterRelation{lo.character, hi.character,
                                                z.id, tan.relation_type(),
                                                lo.id, hi.id});
        }
      }
    }
  }
  return OneModeNetwork(bundle.characters(), std::move(relations));
}

}  // namespace tapcorrect
