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

#include "tapcorrect/merge.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "tapcorrect/error.h"

namespace tapcorrect {
namespace {

// (entity key, relation type label, start, end)
using Fact = std::tuple<std::string, std::string, TimePoint, TimePoint>;

Fact fact_of(const NetworkBundle& bundle, const TemporalEdge& e) {
  return Fact{bundle.vertex(e.entity).key,
              bundle.relation_type_label(e.relation_type), e.interval.start,
              e.interval.end};
}

// Sorted multiset of facts per character key.
std::unordered_map<std::string, std::vector<Fact>> facts_by_character(
    const NetworkBundle& bundle) {
  std::unordered_map<std::string, std::vector<Fact>> out;
  for (const Vertex& v : bundle.vertices()) {
    if (v.kind == VertexKind::kCharacter) out[v.key];
  }
  for (const TemporalEdge& e : bundle.edges()) {
    out[bundle.vertex(e.character).key].push_back(fact_of(bundle, e));
  }
  for (auto& [key, facts] : out) std::sort(facts.begin(), facts.end());
  return out;
}

std::vector<std::vector<std::size_t>> edges_by_character(
    const NetworkBundle& bundle) {
  std::vector<std::vector<std::size_t>> out(bundle.vertex_count());
  const auto edges = bundle.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[edges[i].character.value].push_back(i);
  }
  return out;
}

}  // namespace

std::size_t MergePlan::removed_vertices() const {
  std::size_t n = 0;
  for (const GroupPlan& g : groups) n += g.absorbed.size();
  return n;
}

std::size_t MergePlan::dropped_edges() const {
  std::size_t n = 0;
  for (const GroupPlan& g : groups) {
    for (const AbsorbedVertex& a : g.absorbed) {
      n += std::count_if(a.edges.begin(), a.edges.end(), [](const auto& e) {
        return e.disposition == EdgeDisposition::kDropDuplicate;
      });
    }
  }
  return n;
}

std::size_t MergePlan::transferred_edges() const {
  std::size_t n = 0;
  for (const GroupPlan& g : groups) {
    for (const AbsorbedVertex& a : g.absorbed) n += a.edges.size();
  }
  return n - dropped_edges();
}

MergePlan plan_merge(const NetworkBundle& bundle,
                     std::span<const std::vector<VertexId>> groups,
                     const MergePolicy& policy) {
  MergePlan plan;
  plan.bundle_fingerprint = bundle.fingerprint();
  const auto incident = edges_by_character(bundle);
  const auto edges = bundle.edges();
  auto by_key = [&](VertexId a, VertexId b) {
    return bundle.vertex(a).key < bundle.vertex(b).key;
  };

  std::unordered_set<std::uint32_t> claimed;
  for (const auto& group : groups) {
    std::vector<VertexId> members(group.begin(), group.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members) {
      const Vertex& vertex = bundle.vertex(v);
      if (vertex.kind != VertexKind::kCharacter) {
        throw ValidationError("merge group member '" + vertex.key +
                              "' is not a character");
      }
      if (!claimed.insert(v.value).second) {
        throw ValidationError("vertex '" + vertex.key +
                              "' appears in more than one merge group");
      }
    }
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), by_key);

    VertexId rep = members.front();
    if (policy.representative == RepresentativeRule::kMaxDegree) {
      for (VertexId v : members) {
        if (incident[v.value].size() > incident[rep.value].size()) rep = v;
      }
    }

    GroupPlan gp;
    gp.representative = rep;
    std::set<std::tuple<std::uint32_t, RelationTypeIndex, TimeInterval>> held;
    for (std::size_t i : incident[rep.value]) {
      held.emplace(edges[i].entity.value, edges[i].relation_type,
                   edges[i].interval);
    }
    for (VertexId v : members) {
      if (v == rep) continue;
      AbsorbedVertex absorbed{v, {}};
      for (std::size_t i : incident[v.value]) {
        const TemporalEdge& e = edges[i];
        const bool fresh =
            held.emplace(e.entity.value, e.relation_type, e.interval).second;
        absorbed.edges.push_back(
            EdgeAction{e.id, fresh ? EdgeDisposition::kTransfer
                                   : EdgeDisposition::kDropDuplicate});
      }
      gp.absorbed.push_back(std::move(absorbed));
    }
    plan.groups.push_back(std::move(gp));
  }
  std::sort(plan.groups.begin(), plan.groups.end(),
            [&](const GroupPlan& a, const GroupPlan& b) {
              return by_key(a.representative, b.representative);
            });
  return plan;
}

std::string MergeAudit::to_json() const {
  nlohmann::json doc = {{"removed_vertices", removed_vertices},
                        {"dropped_edges", dropped_edges},
                        {"transferred_edges", transferred_edges},
                        {"mapping", mapping}};
  return doc.dump(2) + "\n";
}

MergedNetwork apply_merge(const NetworkBundle& bundle, const MergePlan& plan) {
  if (plan.bundle_fingerprint != bundle.fingerprint()) {
    throw ValidationError("stale merge plan: bundle changed since planning");
  }
  std::vector<std::optional<VertexId>> absorbed_into(bundle.vertex_count());
  std::unordered_map<std::uint64_t, EdgeDisposition> disposition;
  for (const GroupPlan& g : plan.groups) {
    for (const AbsorbedVertex& a : g.absorbed) {
      absorbed_into[bundle.vertex(a.vertex).id.value] = g.representative;
      for (const EdgeAction& action : a.edges) {
        disposition[action.edge.value] = action.disposition;
      }
    }
  }

  MergedNetwork out;
  NetworkBundle& merged = out.bundle;
  for (const std::string& label : bundle.relation_types()) {
    merged.declare_relation_type(label);
  }
  for (const std::string& label : bundle.vertex_types()) {
    merged.declare_vertex_type(label);
  }
  merged.set_time_unit(bundle.time_unit());
  merged.set_now_anchor(bundle.now_anchor());

  std::vector<VertexId> remap(bundle.vertex_count());
  for (const Vertex& v : bundle.vertices()) {
    if (absorbed_into[v.id.value]) continue;
    remap[v.id.value] =
        merged.add_vertex(v.kind, v.type_label, v.display_name, v.key);
  }
  for (const Vertex& v : bundle.vertices()) {
    if (v.kind != VertexKind::kCharacter) continue;
    const auto& into = absorbed_into[v.id.value];
    out.provenance[v.key] = into ? bundle.vertex(*into).key : v.key;
    if (into) out.audit.mapping[v.key] = bundle.vertex(*into).key;
  }

  for (const TemporalEdge& e : bundle.edges()) {
    VertexId character = e.character;
    if (const auto& into = absorbed_into[e.character.value]) {
      auto it = disposition.find(e.id.value);
      if (it == disposition.end()) {
        throw ValidationError("stale merge plan: relation " +
                              std::to_string(e.id.value) + " has no action");
      }
      if (it->second == EdgeDisposition::kDropDuplicate) continue;
      character = *into;
    }
    merged.add_edge(remap[character.value], remap[e.entity.value],
                    bundle.relation_type_label(e.relation_type), e.interval,
                    e.id);
  }
  merged.seal();

  out.audit.removed_vertices = plan.removed_vertices();
  out.audit.dropped_edges = plan.dropped_edges();
  out.audit.transferred_edges = plan.transferred_edges();
  return out;
}

VerificationReport verify_merge(const NetworkBundle& before,
                                const NetworkBundle& after,
                                const MergePlan& plan,
                                std::span<const CandidatePair> candidates) {
  VerificationReport report;
  auto& v = report.violations;

  const std::size_t expected_vertices =
      before.vertex_count() - plan.removed_vertices();
  if (after.vertex_count() != expected_vertices) {
    v.push_back("vertex count mismatch: expected " +
                std::to_string(expected_vertices) + ", found " +
                std::to_string(after.vertex_count()));
  }

  std::unordered_map<std::string, std::string> rep_of;  // absorbed -> rep
  std::unordered_set<std::string> reps;
  std::unordered_map<std::uint64_t, const TemporalEdge*> before_edges;
  for (const TemporalEdge& e : before.edges()) before_edges[e.id.value] = &e;
  auto before_facts = facts_by_character(before);
  const auto after_facts = facts_by_character(after);

  for (const GroupPlan& g : plan.groups) {
    const std::string& rep = before.vertex(g.representative).key;
    reps.insert(rep);
    if (!after.find(rep)) v.push_back("representative '" + rep + "' missing");
    auto& expected = before_facts[rep];
    for (const AbsorbedVertex& a : g.absorbed) {
      const std::string& key = before.vertex(a.vertex).key;
      rep_of[key] = rep;
      if (after.find(key)) {
        v.push_back("absorbed vertex '" + key + "' still present");
      }
      for (const EdgeAction& action : a.edges) {
        if (action.disposition != EdgeDisposition::kTransfer) continue;
        auto it = before_edges.find(action.edge.value);
        if (it == before_edges.end()) {
          v.push_back("plan references unknown relation " +
                      std::to_string(action.edge.value));
          continue;
        }
        expected.push_back(fact_of(before, *it->second));
      }
    }
    std::sort(expected.begin(), expected.end());
  }

  for (const Vertex& old : before.vertices()) {
    if (rep_of.contains(old.key)) continue;
    auto found = after.find(old.key);
    if (!found) {
      v.push_back("vertex '" + old.key + "' lost");
      continue;
    }
    const Vertex& now = after.vertex(*found);
    if (now.kind != old.kind || now.type_label != old.type_label) {
      v.push_back("vertex '" + old.key + "' changed kind or type");
    }
  }
  for (const Vertex& fresh : after.vertices()) {
    if (!before.find(fresh.key)) {
      v.push_back("vertex '" + fresh.key + "' appeared");
    }
  }

  for (const auto& [key, facts] : after_facts) {
    auto it = before_facts.find(key);
    if (it == before_facts.end()) continue;
    const auto& expected = it->second;
    if (facts.size() != expected.size()) {
      v.push_back("neighbor degree mismatch for '" + key + "': expected " +
                  std::to_string(expected.size()) + " edges, found " +
                  std::to_string(facts.size()));
    } else if (facts != expected) {
      v.push_back("neighbor facts changed for '" + key + "'");
    }
  }

  // Entity-side conservation: distinct facts between each entity and the
  // whole group before == facts between it and the representative after.
  const auto original_facts = facts_by_character(before);
  for (const GroupPlan& g : plan.groups) {
    const std::string& rep = before.vertex(g.representative).key;
    std::set<Fact> pre(original_facts.at(rep).begin(),
                       original_facts.at(rep).end());
    for (const AbsorbedVertex& a : g.absorbed) {
      const auto& f = original_facts.at(before.vertex(a.vertex).key);
      pre.insert(f.begin(), f.end());
    }
    std::set<Fact> post;
    if (auto it = after_facts.find(rep); it != after_facts.end()) {
      post.insert(it->second.begin(), it->second.end());
    }
    if (pre != post) {
      v.push_back("entity facts of group '" + rep + "' not conserved");
    }
  }

  for (const CandidatePair& c : candidates) {
    const std::string& xk = before.vertex(c.x).key;
    const std::string& yk = before.vertex(c.y).key;
    auto x = after.find(xk);
    auto y = after.find(yk);
    if (!x || !y) continue;
    try {
      structure_error(after, *x, *y);
    } catch (const Error& e) {
      v.push_back("structure error of ('" + xk + "', '" + yk +
                  "') not computable: " + e.what());
    }
  }
  return report;
}

std::vector<std::vector<VertexId>> surviving_groups(
    const NetworkBundle& bundle,
    const std::vector<std::vector<std::string>>& key_groups) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& keys : key_groups) {
    std::vector<VertexId> group;
    for (const std::string& k : keys) {
      if (auto id = bundle.find(k)) group.push_back(*id);
    }
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace tapcorrect
