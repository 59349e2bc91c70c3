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


// Small hand-built networks shared by the test binaries.

#ifndef TAPCORRECT_TESTS_FIXTURES_H_
#define TAPCORRECT_TESTS_FIXTURES_H_

#include <string>

#include "tapcorrect/graph.h"
#include "tapcorrect/ingest.h"

namespace tapcorrect::fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(TAPCORRECT_TEST_DATA) + "/" + name;
}

// Two people, two clubs, five memberships: r1 and r2 are parallel edges
// v1 -- c1, r3 is v1 -- c2, r4 is v2 -- c1, r5 is v2 -- c2.
inline NetworkBundle two_clubs() {
  NetworkBundle b;
  b.declare_relation_type("member");
  const VertexId v1 = b.add_vertex(VertexKind::kCharacter, "person", "v1", "v1");
  const VertexId v2 = b.add_vertex(VertexKind::kCharacter, "person", "v2", "v2");
  const VertexId c1 = b.add_vertex(VertexKind::kEntity, "club", "c1", "c1");
  const VertexId c2 = b.add_vertex(VertexKind::kEntity, "club", "c2", "c2");
  b.add_edge(v1, c1, "member", {2000, 2002}, RelationId{1});
  b.add_edge(v1, c1, "member", {2005, 2006}, RelationId{2});
  b.add_edge(v1, c2, "member", {2001, 2001}, RelationId{3});
  b.add_edge(v2, c1, "member", {2003, 2008}, RelationId{4});
  b.add_edge(v2, c2, "member", {2010, 2012}, RelationId{5});
  b.seal();
  return b;
}

// Three exact clones v1..v3, each linked to e1..e3 (nine relations).
inline NetworkBundle clone_triangle() {
  NetworkBundle b;
  b.declare_relation_type("member");
  VertexId people[3];
  VertexId things[3];
  for (int i = 0; i < 3; ++i) {
    const std::string n = std::to_string(i + 1);
    people[i] = b.add_vertex(VertexKind::kCharacter, "person", "v" + n, "v" + n);
  }
  for (int i = 0; i < 3; ++i) {
    const std::string n = std::to_string(i + 1);
    things[i] = b.add_vertex(VertexKind::kEntity, "club", "e" + n, "e" + n);
  }
  for (VertexId p : people) {
    for (int i = 0; i < 3; ++i) {
      b.add_edge(p, things[i], "member", {2000 + i, 2004 + i});
    }
  }
  b.seal();
  return b;
}

// v4 -- {e5, e6}, v5 -- {e4, e6}: one shared neighbor out of two each.
inline NetworkBundle half_overlap() {
  NetworkBundle b;
  b.declare_relation_type("member");
  const VertexId v4 = b.add_vertex(VertexKind::kCharacter, "person", "v4", "v4");
  const VertexId v5 = b.add_vertex(VertexKind::kCharacter, "person", "v5", "v5");
  const VertexId e4 = b.add_vertex(VertexKind::kEntity, "club", "e4", "e4");
  const VertexId e5 = b.add_vertex(VertexKind::kEntity, "club", "e5", "e5");
  const VertexId e6 = b.add_vertex(VertexKind::kEntity, "club", "e6", "e6");
  b.add_edge(v4, e5, "member", {2000, 2001});
  b.add_edge(v4, e6, "member", {2000, 2001});
  b.add_edge(v5, e4, "member", {2000, 2001});
  b.add_edge(v5, e6, "member", {2000, 2001});
  b.seal();
  return b;
}

// The Faye Wu / Fei Wu and ShaoJia Zhu / ShaoNan Zhu activity records.
inline LoadResult academic() {
  return load(data_path("academic_pairs.csv"),
              data_path("academic_pairs.manifest.json"));
}

inline VertexId id(const NetworkBundle& b, const std::string& key) {
  return *b.find(key);
}

}  // namespace tapcorrect::fixtures

#endif  // TAPCORRECT_TESTS_FIXTURES_H_
