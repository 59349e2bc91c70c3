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

#include <algorithm>
#include <filesystem>

#include "json.hpp"

#include "fixtures.h"
#include "tapcorrect/error.h"
#include "tapcorrect/ingest.h"

namespace tapcorrect {
namespace {

std::string records(const std::string& body) {
  return std::string(kRecordsHeader) + "\n" + body;
}

TEST(Load, EducationRows) {
  const LoadResult r = load_from_string(records(
      ",Faye Wu,Hubei Minzu Univ.,institution,study,1992,1996\n"
      ",Faye Wu,Guangzhou Normal Univ.,institution,study,1997,1999\n"
      ",Faye Wu,Jinan Univ.,institution,study,2000,2005\n"
      ",Fei Wu,Hubei Minzu Univ.,institution,study,1992,1996\n"
      ",Fei Wu,Guangzhou Normal Univ.,institution,study,1997,1999\n"
      ",Fei Wu,Jinan Univ.,institution,study,2000,2000\n"));
  EXPECT_EQ(r.bundle.characters().size(), 2u);
  EXPECT_EQ(r.bundle.vertex_count(), 5u);
  EXPECT_EQ(r.bundle.edges().size(), 6u);
  EXPECT_EQ(r.bundle.subnetwork(0).edges().size(), 6u);
  EXPECT_EQ(r.report.loaded_rows, 6u);
  EXPECT_TRUE(r.report.rejected.empty());
  EXPECT_TRUE(r.bundle.find("institution:Jinan Univ.").has_value());
  EXPECT_TRUE(r.bundle.sealed());
}

TEST(Load, EmptyInput) {
  const LoadResult r = load_from_string("");
  EXPECT_EQ(r.bundle.vertex_count(), 0u);
  EXPECT_EQ(r.report.input_rows, 0u);
  const LoadResult h = load_from_string(records(""));
  EXPECT_EQ(h.report.input_rows, 0u);
}

TEST(Load, InvertedIntervalIsRejected) {
  const LoadResult r = load_from_string(records(
      ",A,X,institution,study,2005,2000\n,A,X,institution,study,2000,2005\n"));
  ASSERT_EQ(r.report.rejected.size(), 1u);
  EXPECT_EQ(r.report.rejected[0].reason, "inverted interval");
  EXPECT_EQ(r.report.rejected[0].line, 2u);
  EXPECT_EQ(r.bundle.edges().size(), 1u);
}

TEST(Load, MalformedRowsAreReportedWithReasons) {
  const LoadResult r = load_from_string(records(
      ",A,X,institution,study,2000\n"
      ",,X,institution,study,2000,2001\n"
      ",A,X,institution,study,abc,2001\n"
      ",A,X,institution,study,-3,2001\n"
      "\"unterminated,A,X,institution,study,2000,2001\n"));
  ASSERT_EQ(r.report.rejected.size(), 5u);
  EXPECT_NE(r.report.rejected[0].reason.find("malformed row"),
            std::string::npos);
  EXPECT_EQ(r.report.rejected[1].reason, "empty character_name");
  EXPECT_NE(r.report.rejected[2].reason.find("malformed start"),
            std::string::npos);
  EXPECT_EQ(r.report.rejected[3].reason, "negative time point");
  EXPECT_EQ(r.report.loaded_rows, 0u);
}

TEST(Load, StrictModeMakesRejectsFatal) {
  LoadOptions strict;
  strict.strict = true;
  EXPECT_THROW(load_from_string(records(",A,X,institution,study,2005,2000\n"),
                                std::nullopt, strict),
               ValidationError);
  DatasetManifest m;
  m.relation_types = {"study"};
  EXPECT_THROW(load_from_string(records(",A,X,institution,work,2000,2001\n"),
                                m, strict),
               ValidationError);
  EXPECT_NO_THROW(load_from_string(
      records(",A,X,institution,study,2000,2001\n"), m, strict));
}

TEST(Load, BadHeaderIsFatal) {
  EXPECT_THROW(load_from_string("a,b,c\n1,2,3\n"), ValidationError);
}

TEST(Load, UndeclaredRelationTypesAreDiscovered) {
  DatasetManifest m;
  m.relation_types = {"study"};
  m.entity_types = {"institution"};
  const LoadResult r = load_from_string(
      records(",A,X,institution,work,2000,2001\n,A,P,project,coauthor,2000,2001\n"),
      m);
  EXPECT_EQ(r.report.discovered_relation_types,
            (std::vector<std::string>{"coauthor", "work"}));
  EXPECT_EQ(r.report.discovered_entity_types,
            (std::vector<std::string>{"project"}));
  const auto types = r.bundle.relation_types();
  EXPECT_EQ(std::vector<std::string>(types.begin(), types.end()),
            (std::vector<std::string>{"study", "coauthor", "work"}));
}

TEST(Load, ExplicitCharacterIdsSeparateNamesakes) {
  const LoadResult r = load_from_string(records(
      "a1,Wei Zhang,X,institution,study,2000,2001\n"
      "a2,Wei Zhang,X,institution,study,2000,2001\n"
      "a1,Wei Zhang,Y,institution,study,2002,2003\n"));
  EXPECT_EQ(r.bundle.characters().size(), 2u);
  EXPECT_EQ(r.bundle.edges().size(), 3u);
}

TEST(Load, QuotedFieldsAndBom) {
  const LoadResult r = load_from_string(
      "\xEF\xBB\xBF" + records(",\"Wu, Fei\",\"The \"\"Best\"\" Univ.\","
                               "institution,study,2000,2001\n"));
  ASSERT_EQ(r.report.loaded_rows, 1u);
  EXPECT_TRUE(r.bundle.find("Wu, Fei").has_value());
  EXPECT_TRUE(r.bundle.find("institution:The \"Best\" Univ.").has_value());
}

TEST(Manifest, ParseAndValidate) {
  const DatasetManifest m = parse_manifest(
      R"({"relation_types":["study","work"],"entity_types":["institution"],)"
      R"("time_unit":"year","now":2014})");
  EXPECT_EQ(m.relation_types.size(), 2u);
  EXPECT_EQ(m.now, 2014);
  EXPECT_THROW(parse_manifest(R"({"relation_types":[]})"), ValidationError);
  EXPECT_THROW(parse_manifest(R"({"relation_types":["a","a"]})"),
               ValidationError);
  EXPECT_THROW(parse_manifest("not json"), ValidationError);
  EXPECT_EQ(parse_manifest(manifest_to_json(m)).relation_types,
            m.relation_types);
}

TEST(Manifest, AnchorIsCarriedIntoBundle) {
  const LoadResult r = fixtures::academic();
  EXPECT_EQ(r.bundle.now_anchor(), 2014);
  EXPECT_EQ(r.bundle.relation_types().size(), 4u);
}

TEST(Load, MissingFileIsAnIoError) {
  EXPECT_THROW(load("/nonexistent/records.csv", std::nullopt), IoError);
}

TEST(Export, RecordsRoundTrip) {
  const LoadResult first = fixtures::academic();
  const std::string csv = export_records_csv(first.bundle);
  const LoadResult second = load_from_string(csv);
  auto a = to_records(first.bundle);
  auto b = to_records(second.bundle);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(export_records_csv(second.bundle), csv);
}

TEST(Export, GraphJsonKeepsEdgeIdentity) {
  const NetworkBundle b = fixtures::two_clubs();
  const auto doc = nlohmann::json::parse(export_graph_json(b));
  ASSERT_EQ(doc["edges"].size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& e = doc["edges"][i];
    const TemporalEdge& edge = b.edges()[i];
    EXPECT_EQ(e["id"].get<std::uint64_t>(), edge.id.value);
    EXPECT_EQ(e["character"], b.vertex(edge.character).key);
    EXPECT_EQ(e["entity"], b.vertex(edge.entity).key);
    EXPECT_EQ(e["relation_type"], "member");
    EXPECT_EQ(e["start"].get<TimePoint>(), edge.interval.start);
    EXPECT_EQ(e["end"].get<TimePoint>(), edge.interval.end);
  }
}

TEST(Export, GraphJsonOfEmptyBundle) {
  const auto doc = nlohmann::json::parse(export_graph_json(NetworkBundle()));
  EXPECT_TRUE(doc["vertices"].is_array());
  EXPECT_TRUE(doc["vertices"].empty());
  EXPECT_TRUE(doc["edges"].empty());
}

TEST(Export, DotOfTwoClubs) {
  const std::string dot = export_dot(fixtures::two_clubs());
  std::size_t edges = 0;
  std::size_t vertices = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos;
       ++pos) {
    ++edges;
  }
  for (std::size_t pos = 0;
       (pos = dot.find("shape=", pos)) != std::string::npos; ++pos) {
    ++vertices;
  }
  EXPECT_EQ(edges, 5u);
  EXPECT_EQ(vertices, 4u);
  EXPECT_EQ(dot.rfind("graph tan {", 0), 0u);
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_export_format("records-csv"), ExportFormat::kRecordsCsv);
  EXPECT_EQ(parse_export_format("graph-json"), ExportFormat::kGraphJson);
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::kDot);
  EXPECT_FALSE(parse_export_format("xml").has_value());
}

TEST(Csv, EscapeQuotesWhenNeeded) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Files, WriteCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "tapcorrect_io";
  std::filesystem::remove_all(dir);
  write_file(dir / "a" / "b.txt", "hello");
  EXPECT_EQ(read_file(dir / "a" / "b.txt"), "hello");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tapcorrect
