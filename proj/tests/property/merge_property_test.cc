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


// Merge invariants over generated bundles.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tapcorrect/ingest.h"
#include "tapcorrect/merge.h"
#include "tapcorrect/tap_similarity.h"
#include "testkit/testkit.h"

namespace tapcorrect {
namespace {

struct Pass {
  CandidateSet candidates;
  RedundantGroupSet groups;
  MergePlan plan;
  MergedNetwork merged;
};

Pass dedupe(const NetworkBundle& b, double theta) {
  Pass p;
  const TimePoint now = resolve_now(b);
  p.candidates = screen_candidates(b, NameFilter::kOff);
  p.groups = threshold_groups(p.candidates, b, theta, now);
  p.plan = plan_merge(b, p.groups.groups);
  p.merged = apply_merge(b, p.plan);
  return p;
}

NetworkBundle planted(std::uint64_t seed) {
  testkit::RandomBundleSpec spec;
  spec.characters = 60;
  spec.entities_per_type = {20, 20};
  spec.relation_types = 2;
  spec.edge_density = 0.08;
  spec.ensure_edge = true;
  spec.seed = seed;
  return testkit::plant_duplicates(testkit::generate(spec), 6,
                                   testkit::PlantMode::kExactClone, seed)
      .bundle;
}

TEST(MergeProperty, VertexDropEqualsGroupSurplus) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const NetworkBundle b = planted(seed);
    const Pass p = dedupe(b, 1.0);
    std::size_t surplus = 0;
    for (const auto& g : p.groups.groups) surplus += g.size() - 1;
    ASSERT_GE(surplus, 6u);
    ASSERT_EQ(b.vertex_count() - p.merged.bundle.vertex_count(), surplus);
    ASSERT_EQ(p.plan.transferred_edges(), 0u);
    ASSERT_TRUE(verify_merge(b, p.merged.bundle, p.plan, p.candidates.pairs).ok());
  }
}

TEST(MergeProperty, VerifiesOnRandomBundlesAtAnyTheta) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(0.05, 1.0);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const NetworkBundle b = testkit::random_small_bundle(seed);
    const Pass p = dedupe(b, theta(rng));
    const VerificationReport r =
        verify_merge(b, p.merged.bundle, p.plan, p.candidates.pairs);
    ASSERT_TRUE(r.ok()) << "seed " << seed << ": " << r.violations[0];
  }
}

TEST(MergeProperty, ExactDedupeIsIdempotent) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Pass first = dedupe(planted(seed), 1.0);
    const Pass second = dedupe(first.merged.bundle, 1.0);
    ASSERT_TRUE(second.plan.groups.empty()) << "seed " << seed;
    ASSERT_EQ(second.merged.bundle.fingerprint(),
              first.merged.bundle.fingerprint());
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Pass first = dedupe(testkit::random_small_bundle(seed), 1.0);
    const Pass second = dedupe(first.merged.bundle, 1.0);
    ASSERT_TRUE(second.plan.groups.empty()) << "seed " << seed;
  }
}

TEST(MergeProperty, DeterministicAndOrderIndependent) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const NetworkBundle b = planted(seed);
    const Pass p = dedupe(b, 1.0);
    auto groups = p.groups.groups;
    std::mt19937_64 rng(seed);
    std::shuffle(groups.begin(), groups.end(), rng);
    for (auto& g : groups) std::shuffle(g.begin(), g.end(), rng);
    const MergedNetwork again = apply_merge(b, plan_merge(b, groups));
    ASSERT_EQ(export_graph_json(again.bundle),
              export_graph_json(p.merged.bundle));
    ASSERT_EQ(again.audit.to_json(), p.merged.audit.to_json());
  }
}

}  // namespace
}  // namespace tapcorrect
