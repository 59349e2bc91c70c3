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


#include <gtest/gtest.h>

#include <stdexcept>

#include "fixtures.h"
#include "tapcorrect/structure_screen.h"
#include "tapcorrect/tap_similarity.h"
#include "testkit/testkit.h"

namespace tapcorrect::testkit {
namespace {

using fixtures::id;

TEST(Oracle, SelfAndDisjoint) {
  const NetworkBundle b = fixtures::two_clubs();
  EXPECT_EQ(oracle_simtap_beta(b, 0, id(b, "v1"), id(b, "v1"), 2014), 1.0);
  EXPECT_EQ(oracle_path_count(b, 0, id(b, "v1"), id(b, "v2")), 3u);
  EXPECT_EQ(oracle_path_count(b, 0, id(b, "v1"), id(b, "v1")), 5u);
  NetworkBundle d;
  d.declare_relation_type("member");
  const VertexId x = d.add_vertex(VertexKind::kCharacter, "person", "x");
  const VertexId y = d.add_vertex(VertexKind::kCharacter, "person", "y");
  const VertexId z1 = d.add_vertex(VertexKind::kEntity, "club", "z1");
  const VertexId z2 = d.add_vertex(VertexKind::kEntity, "club", "z2");
  d.add_edge(x, z1, "member", {1, 2});
  d.add_edge(y, z2, "member", {1, 2});
  EXPECT_EQ(oracle_simtap_beta(d, 0, x, y, 5), 0.0);
  EXPECT_FALSE(oracle_same_neighborhood(d, x, y));
}

TEST(Oracle, MatchesKnownValue) {
  NetworkBundle b;
  b.declare_relation_type("member");
  const VertexId x = b.add_vertex(VertexKind::kCharacter, "person", "x");
  const VertexId y = b.add_vertex(VertexKind::kCharacter, "person", "y");
  const VertexId z = b.add_vertex(VertexKind::kEntity, "club", "z");
  b.add_edge(x, z, "member", {2000, 2010});
  b.add_edge(y, z, "member", {2008, 2010});
  EXPECT_DOUBLE_EQ(oracle_simtap_beta(b, 0, x, y, 2010), 2178.0 / 14722.0);
}

TEST(Oracle, RefusesHugeInstances) {
  NetworkBundle b;
  b.declare_relation_type("member");
  const VertexId x = b.add_vertex(VertexKind::kCharacter, "person", "x");
  const VertexId z = b.add_vertex(VertexKind::kEntity, "club", "z");
  for (int i = 0; i < 120; ++i) b.add_edge(x, z, "member", {1, 2});
  EXPECT_THROW(oracle_simtap_beta(b, 0, x, x, 5), std::length_error);
}

TEST(Generate, IsDeterministicPerSeed) {
  RandomBundleSpec spec;
  spec.seed = 42;
  EXPECT_EQ(generate(spec).fingerprint(), generate(spec).fingerprint());
  spec.seed = 43;
  RandomBundleSpec other = spec;
  other.seed = 42;
  EXPECT_NE(generate(spec).fingerprint(), generate(other).fingerprint());
  EXPECT_EQ(random_small_bundle(5).fingerprint(),
            random_small_bundle(5).fingerprint());
}

TEST(Generate, EnsureEdgeAndLabels) {
  RandomBundleSpec spec;
  spec.characters = 50;
  spec.edge_density = 0.0;
  spec.ensure_edge = true;
  const NetworkBundle b = generate(spec);
  EXPECT_EQ(b.characters().size(), 50u);
  EXPECT_EQ(b.edges().size(), 100u);
  EXPECT_EQ(b.relation_types()[0], "study");
  EXPECT_TRUE(validate(b).empty());
}

TEST(RandomSmallBundle, RespectsBounds) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const NetworkBundle b = random_small_bundle(seed);
    EXPECT_LE(b.vertex_count(), 20u);
    EXPECT_LE(b.edges().size(), 60u);
    EXPECT_LE(b.relation_types().size(), 4u);
    EXPECT_GE(b.characters().size(), 2u);
  }
}

TEST(Plant, ExactClonesAreZeroErrorAndMaximal) {
  RandomBundleSpec spec;
  spec.characters = 40;
  spec.ensure_edge = true;
  const PlantResult p =
      plant_duplicates(generate(spec), 5, PlantMode::kExactClone, 3);
  ASSERT_EQ(p.truth.size(), 5u);
  for (const PlantedPair& t : p.truth) {
    const VertexId x = id(p.bundle, t.source_key);
    const VertexId y = id(p.bundle, t.clone_key);
    EXPECT_EQ(structure_error(p.bundle, x, y).value, 0.0);
    EXPECT_EQ(simtap(p.bundle, x, y, 2014).simtap,
              simtap(p.bundle, x, x, 2014).simtap);
    EXPECT_TRUE(oracle_same_neighborhood(p.bundle, x, y));
  }
}

TEST(Plant, TimeShiftedIsZeroErrorButNotMaximal) {
  RandomBundleSpec spec;
  spec.characters = 40;
  spec.ensure_edge = true;
  spec.time_max = 2010;
  const PlantResult p =
      plant_duplicates(generate(spec), 5, PlantMode::kTimeShifted, 3);
  for (const PlantedPair& t : p.truth) {
    const VertexId x = id(p.bundle, t.source_key);
    const VertexId y = id(p.bundle, t.clone_key);
    EXPECT_TRUE(structure_error(p.bundle, x, y).is_zero());
    for (RelationTypeIndex beta = 0; beta < p.bundle.relation_types().size();
         ++beta) {
      EXPECT_LT(oracle_simtap_beta(p.bundle, beta, x, y, 2014), 1.0 + 1e-12);
    }
    EXPECT_LT(simtap(p.bundle, x, y, 2014).simtap, 1.0);
  }
}

TEST(Plant, PartialClonesHavePositiveError) {
  RandomBundleSpec spec;
  spec.characters = 40;
  spec.ensure_edge = true;
  const PlantResult p =
      plant_duplicates(generate(spec), 5, PlantMode::kPartialClone, 3);
  for (const PlantedPair& t : p.truth) {
    EXPECT_GT(structure_error(p.bundle, id(p.bundle, t.source_key),
                              id(p.bundle, t.clone_key))
                  .value,
              0.0);
  }
}

TEST(Plant, TooManyPlantsIsAnError) {
  const NetworkBundle b = fixtures::two_clubs();
  EXPECT_THROW(plant_duplicates(b, 3, PlantMode::kExactClone, 1),
               std::invalid_argument);
}

TEST(CopyBundle, KeepsIdsAndFilters) {
  const NetworkBundle b = fixtures::two_clubs();
  EXPECT_EQ(copy_bundle(b).fingerprint(), b.fingerprint());
  const NetworkBundle odd = copy_bundle(
      b, [](const TemporalEdge& e) { return e.id.value % 2 == 1; });
  EXPECT_EQ(odd.edges().size(), 3u);
  EXPECT_EQ(odd.vertex_count(), b.vertex_count());
}

}  // namespace
}  // namespace tapcorrect::testkit
