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

// Loading transaction-activity records into a NetworkBundle and exporting
// bundles back out.
//
// Records file: UTF-8 CSV with the exact header
//
//   character_id,character_name,entity_name,entity_type,relation_type,start,end
//
// character_id may be blank, in which case the character is keyed by its
// exact display name. Entities are keyed by (entity_type, entity_name) and get
// the vertex id "<entity_type>:<entity_name>". Each row becomes one edge;
// identical rows become parallel edges.
//
// Manifest file (optional JSON):
//
//   { "relation_types": [...], "entity_types": [...],
//     "time_unit": "year", "now": <int|null> }

#ifndef TAPCORRECT_INGEST_H_
#define TAPCORRECT_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tapcorrect/graph.h"

namespace tapcorrect {

inline constexpr std::string_view kRecordsHeader =
    "character_id,character_name,entity_name,entity_type,relation_type,start,"
    "end";
inline constexpr std::string_view kCharacterTypeLabel = "person";

struct TransactionRecord {
  std::string character_id;  // may be empty
  std::string character_name;
  std::string entity_name;
  std::string entity_type;
  std::string relation_type;
  TimePoint start = 0;
  TimePoint end = 0;

  auto operator<=>(const TransactionRecord&) const = default;
};

struct DatasetManifest {
  std::vector<std::string> relation_types;
  std::vector<std::string> entity_types;
  std::string time_unit = "year";
  std::optional<TimePoint> now;
};

// Throws ValidationError on bad JSON, an empty relation type list or
// duplicate labels.
DatasetManifest parse_manifest(std::string_view json_text);
DatasetManifest load_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const DatasetManifest& manifest);

struct RejectedRow {
  std::size_t line = 0;  // 1-based line in the input file
  std::string reason;
};

struct LoadReport {
  std::size_t input_rows = 0;
  std::size_t loaded_rows = 0;
  std::vector<RejectedRow> rejected;
  std::vector<std::string> discovered_relation_types;
  std::vector<std::string> discovered_entity_types;

  std::string to_json() const;
};

struct LoadOptions {
  // Any rejected row aborts the load with ValidationError, as does a
  // relation type missing from the manifest.
  bool strict = false;
};

struct LoadResult {
  NetworkBundle bundle;
  LoadReport report;
};

// Parses CSV text and builds a sealed bundle.
LoadResult load_from_string(
    std::string_view csv_text,
    const std::optional<DatasetManifest>& manifest = std::nullopt,
    const LoadOptions& options = {});

// Throws IoError when a file cannot be read.
LoadResult load(
    const std::filesystem::path& records_path,
    const std::optional<std::filesystem::path>& manifest_path = std::nullopt,
    const LoadOptions& options = {});

// The bundle's edges as records, in edge order. character_id is always the
// character's vertex key, so the records reload to the same keys.
std::vector<TransactionRecord> to_records(const NetworkBundle& bundle);

enum class ExportFormat { kRecordsCsv, kGraphJson, kDot };

std::optional<ExportFormat> parse_export_format(std::string_view name);

std::string export_records_csv(const NetworkBundle& bundle);
// { "vertices": [{id, kind, type, name}],
//   "edges": [{id, character, entity, relation_type, start, end}] }
std::string export_graph_json(const NetworkBundle& bundle);
std::string export_dot(const NetworkBundle& bundle);
std::string export_bundle(const NetworkBundle& bundle, ExportFormat format);

// Writes `contents` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);
// Throws IoError.
std::string read_file(const std::filesystem::path& path);

// Quotes a CSV field when it needs quoting.
std::string csv_escape(std::string_view field);

}  // namespace tapcorrect

#endif  // TAPCORRECT_INGEST_H_
