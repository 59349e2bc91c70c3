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

// Heterogeneous temporal 2-mode networks.
//
// A NetworkBundle holds a registry of character vertices (people) and entity
// vertices (institutions, projects and the like) plus one
// TemporalActivityNetwork per relation type ("study", "work", ...). Every edge
// joins exactly one character to one entity and carries a [start, end] time
// interval. Parallel edges between the same pair are kept as distinct
// relations.
//
// Vertices are identified by an opaque string key that is unique within the
// bundle. Display names never key identity: two "Wei Zhang" vertices are two
// vertices.

#ifndef TAPCORRECT_GRAPH_H_
#define TAPCORRECT_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tapcorrect {

using TimePoint = std::int64_t;

struct TimeInterval {
  TimePoint start = 0;
  TimePoint end = 0;

  // Throws ValidationError on end < start or negative values.
  static TimeInterval Make(TimePoint start, TimePoint end);

  bool valid() const { return start >= 0 && end >= start; }
  auto operator<=>(const TimeInterval&) const = default;
};

enum class VertexKind : std::uint8_t { kCharacter, kEntity };

std::string_view to_string(VertexKind kind);

// Dense index into a bundle's vertex registry. Only meaningful together with
// the bundle that issued it; use Vertex::key across bundles.
struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct RelationId {
  std::uint64_t value = 0;
  auto operator<=>(const RelationId&) const = default;
};

// Position of a relation type label in NetworkBundle::relation_types().
using RelationTypeIndex = std::uint32_t;

struct Vertex {
  VertexId id;
  std::string key;
  VertexKind kind = VertexKind::kCharacter;
  std::string type_label;
  std::string display_name;
};

struct TemporalEdge {
  RelationId id;
  VertexId character;
  VertexId entity;
  RelationTypeIndex relation_type = 0;
  TimeInterval interval;
};

// All edges of one relation type, with a per-vertex incidence index.
class TemporalActivityNetwork {
 public:
  explicit TemporalActivityNetwork(RelationTypeIndex relation_type)
      : relation_type_(relation_type) {}

  RelationTypeIndex relation_type() const { return relation_type_; }
  std::span<const TemporalEdge> edges() const { return edges_; }

  // Local edge indices (into edges()) incident to `v`, in insertion order.
  std::span<const std::uint32_t> incident(VertexId v) const;
  bool contains(VertexId v) const { return !incident(v).empty(); }

 private:
  friend class NetworkBundle;
  void append(const TemporalEdge& edge);

  RelationTypeIndex relation_type_;
  std::vector<TemporalEdge> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

// G = {G_beta | beta in B} plus the shared vertex registry.
//
// Built single-threaded through the add_* / declare_* calls, then sealed.
// A sealed bundle rejects mutation and may be shared by concurrent readers.
class NetworkBundle {
 public:
  NetworkBundle() = default;

  // Registers a relation type label; idempotent. Returns its index.
  RelationTypeIndex declare_relation_type(std::string label);
  void declare_vertex_type(std::string label);

  // Registers a vertex. When `key` is omitted a fresh key is generated.
  // Throws ValidationError on an empty type label or a duplicate key.
  VertexId add_vertex(VertexKind kind, std::string type_label,
                      std::string display_name,
                      std::optional<std::string> key = std::nullopt);

  // Appends an edge to the subnetwork of `relation_type`, which must already
  // be declared. Throws ValidationError on unknown vertices, kind mismatch,
  // an invalid interval or a duplicate explicit relation id.
  RelationId add_edge(VertexId character, VertexId entity,
                      std::string_view relation_type, TimeInterval interval,
                      std::optional<RelationId> id = std::nullopt);

  void set_time_unit(std::string unit);
  void set_now_anchor(std::optional<TimePoint> now);

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  // Throws ValidationError for an id this bundle did not issue.
  const Vertex& vertex(VertexId id) const;
  std::optional<VertexId> find(std::string_view key) const;

  // Character vertices ordered by key.
  std::vector<VertexId> characters() const;

  std::span<const TemporalEdge> edges() const { return edges_; }
  std::span<const std::string> relation_types() const {
    return relation_types_;
  }
  std::optional<RelationTypeIndex> relation_type_index(
      std::string_view label) const;
  const std::string& relation_type_label(RelationTypeIndex index) const;
  const std::set<std::string>& vertex_types() const { return vertex_types_; }

  // One subnetwork per declared relation type (possibly without edges).
  const TemporalActivityNetwork& subnetwork(RelationTypeIndex index) const;
  std::span<const TemporalActivityNetwork> subnetworks() const {
    return subnetworks_;
  }

  const std::string& time_unit() const { return time_unit_; }
  std::optional<TimePoint> now_anchor() const { return now_anchor_; }
  std::optional<TimePoint> max_end() const;

  // Content hash of the whole bundle; used to detect stale merge plans.
  std::uint64_t fingerprint() const;

 private:
  void require_unsealed() const;

  std::vector<Vertex> vertices_;
  std::unordered_map<std::string, VertexId> by_key_;
  std::vector<TemporalEdge> edges_;
  std::set<std::uint64_t> relation_ids_;
  std::uint64_t next_relation_id_ = 1;
  std::vector<std::string> relation_types_;
  std::vector<TemporalActivityNetwork> subnetworks_;
  std::set<std::string> vertex_types_;
  std::string time_unit_ = "year";
  std::optional<TimePoint> now_anchor_;
  bool sealed_ = false;
};

// Heterogeneity check: returns one message per violated condition
// (|A| < 2, |B| < 1). Empty means valid.
std::vector<std::string> validate(const NetworkBundle& bundle);

// One character-character relation induced by two edges of the same
// subnetwork that meet at a shared entity. `first` has the smaller id.
struct CharacterRelation {
  VertexId first;
  VertexId second;
  VertexId entity;
  RelationTypeIndex relation_type = 0;
  RelationId first_edge;
  RelationId second_edge;
};

// The homogeneous character network derived from a bundle.
class OneModeNetwork {
 public:
  OneModeNetwork(std::vector<VertexId> characters,
                 std::vector<CharacterRelation> relations);

  std::span<const VertexId> characters() const { return characters_; }
  std::span<const CharacterRelation> relations() const { return relations_; }
  // Number of relations between a and b, in either argument order.
  std::size_t multiplicity(VertexId a, VertexId b) const;

 private:
  std::vector<VertexId> characters_;
  std::vector<CharacterRelation> relations_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> counts_;
};

OneModeNetwork project_one_mode(const NetworkBundle& bundle);

}  // namespace tapcorrect

#endif  // TAPCORRECT_GRAPH_H_
