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

#include "tapcorrect/ingest.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <variant>

#include "csv.h"
#include "json.hpp"
#include "tapcorrect/error.h"

namespace tapcorrect {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<TimePoint> parse_time(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  TimePoint v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string entity_key(std::string_view type, std::string_view name) {
  std::string k(type);
  k += ':';
  k += name;
  return k;
}

std::string character_key(const TransactionRecord& r) {
  return r.character_id.empty() ? r.character_name : r.character_id;
}

// Either a parsed record or the reason it was rejected.
using ParsedRow = std::variant<TransactionRecord, std::string>;

ParsedRow parse_row(const internal::CsvRow& row) {
  if (!row.error.empty()) return "malformed row: " + row.error;
  if (row.fields.size() != 7) {
    return "malformed row: expected 7 fields, got " +
           std::to_string(row.fields.size());
  }
  TransactionRecord r;
  r.character_id = std::string(trim(row.fields[0]));
  r.character_name = std::string(trim(row.fields[1]));
  r.entity_name = std::string(trim(row.fields[2]));
  r.entity_type = std::string(trim(row.fields[3]));
  r.relation_type = std::string(trim(row.fields[4]));
  if (r.character_name.empty()) return "empty character_name";
  if (r.entity_name.empty()) return "empty entity_name";
  if (r.entity_type.empty()) return "empty entity_type";
  if (r.relation_type.empty()) return "empty relation_type";
  const auto start = parse_time(row.fields[5]);
  const auto end = parse_time(row.fields[6]);
  if (!start) return "malformed start time '" + row.fields[5] + "'";
  if (!end) return "malformed end time '" + row.fields[6] + "'";
  if (*start < 0 || *end < 0) return "negative time point";
  if (*end < *start) return "inverted interval";
  r.start = *start;
  r.end = *end;
  return r;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

DatasetManifest parse_manifest(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("manifest: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("manifest: expected an object");
  DatasetManifest m;
  auto read_labels = [&](const char* field, std::vector<std::string>& out) {
    if (!doc.contains(field)) return;
    const json& arr = doc.at(field);
    if (!arr.is_array()) {
      throw ValidationError(std::string("manifest: '") + field +
                            "' must be an array");
    }
    std::set<std::string> seen;
    for (const json& item : arr) {
      if (!item.is_string() || item.get<std::string>().empty()) {
        throw ValidationError(std::string("manifest: '") + field +
                              "' entries must be nonempty strings");
      }
      auto label = item.get<std::string>();
      if (!seen.insert(label).second) {
        throw ValidationError("manifest: duplicate label '" + label + "'");
      }
      out.push_back(std::move(label));
    }
  };
  read_labels("relation_types", m.relation_types);
  read_labels("entity_types", m.entity_types);
  if (m.relation_types.empty()) {
    throw ValidationError("manifest: relation_types must be nonempty");
  }
  if (doc.contains("time_unit")) {
    if (!doc["time_unit"].is_string()) {
      throw ValidationError("manifest: 'time_unit' must be a string");
    }
    m.time_unit = doc["time_unit"].get<std::string>();
  }
  if (doc.contains("now") && !doc["now"].is_null()) {
    if (!doc["now"].is_number_integer()) {
      throw ValidationError("manifest: 'now' must be an integer or null");
    }
    m.now = doc["now"].get<TimePoint>();
  }
  return m;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path));
}

std::string manifest_to_json(const DatasetManifest& manifest) {
  json doc = {{"relation_types", manifest.relation_types},
              {"entity_types", manifest.entity_types},
              {"time_unit", manifest.time_unit},
              {"now", manifest.now ? json(*manifest.now) : json(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string LoadReport::to_json() const {
  json rej = json::array();
  for (const RejectedRow& r : rejected) {
    rej.push_back({{"line", r.line}, {"reason", r.reason}});
  }
  json doc = {{"input_rows", input_rows},
              {"loaded_rows", loaded_rows},
              {"rejected", rej},
              {"discovered_relation_types", discovered_relation_types},
              {"discovered_entity_types", discovered_entity_types}};
  return doc.dump(2) + "\n";
}

LoadResult load_from_string(std::string_view csv_text,
                            const std::optional<DatasetManifest>& manifest,
                            const LoadOptions& options) {
  LoadResult result;
  NetworkBundle& bundle = result.bundle;
  LoadReport& report = result.report;

  if (manifest) {
    bundle.set_time_unit(manifest->time_unit);
    bundle.set_now_anchor(manifest->now);
    for (const std::string& label : manifest->relation_types) {
      bundle.declare_relation_type(label);
    }
    for (const std::string& label : manifest->entity_types) {
      bundle.declare_vertex_type(label);
    }
  }

  const auto rows = internal::parse_csv(csv_text);
  if (rows.empty()) {
    bundle.seal();
    return result;
  }

  std::string header;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i) {
    if (i) header += ',';
    header += trim(rows[0].fields[i]);
  }
  if (!rows[0].error.empty() || header != kRecordsHeader) {
    throw ValidationError("records: header must be '" +
                          std::string(kRecordsHeader) + "', got '" + header +
                          "'");
  }
  report.input_rows = rows.size() - 1;

  auto reject = [&](std::size_t line, std::string reason) {
    if (options.strict) {
      throw ValidationError("records line " + std::to_string(line) + ": " +
                            reason);
    }
    report.rejected.push_back(RejectedRow{line, std::move(reason)});
  };

  // First pass: tokenize and validate rows, collect labels.
  std::vector<std::pair<std::size_t, TransactionRecord>> records;
  std::set<std::string> new_relation_types;
  std::set<std::string> new_entity_types;
  const std::set<std::string> declared_entity_types =
      manifest ? std::set<std::string>(manifest->entity_types.begin(),
                                       manifest->entity_types.end())
               : std::set<std::string>{};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ParsedRow parsed = parse_row(rows[i]);
    if (auto* reason = std::get_if<std::string>(&parsed)) {
      reject(rows[i].line, std::move(*reason));
      continue;
    }
    auto& record = std::get<TransactionRecord>(parsed);
    if (!bundle.relation_type_index(record.relation_type)) {
      if (options.strict) {
        reject(rows[i].line,
               "undeclared relation_type '" + record.relation_type + "'");
      }
      new_relation_types.insert(record.relation_type);
    }
    if (!declared_entity_types.contains(record.entity_type)) {
      new_entity_types.insert(record.entity_type);
    }
    records.emplace_back(rows[i].line, std::move(record));
  }
  for (const std::string& label : new_relation_types) {
    bundle.declare_relation_type(label);
  }
  report.discovered_relation_types.assign(new_relation_types.begin(),
                                          new_relation_types.end());
  report.discovered_entity_types.assign(new_entity_types.begin(),
                                        new_entity_types.end());

  // Second pass: vertices and edges in row order.
  for (const auto& [line, r] : records) {
    const std::string ckey = character_key(r);
    const std::string ekey = entity_key(r.entity_type, r.entity_name);
    auto cid = bundle.find(ckey);
    auto eid = bundle.find(ekey);
    if (cid && bundle.vertex(*cid).kind != VertexKind::kCharacter) {
      reject(line, "character id '" + ckey + "' collides with an entity id");
      continue;
    }
    if (eid && bundle.vertex(*eid).kind != VertexKind::kEntity) {
      reject(line, "entity id '" + ekey + "' collides with a character id");
      continue;
    }
    if (!cid && ckey == ekey) {
      reject(line, "character id '" + ckey + "' collides with its entity id");
      continue;
    }
    if (!cid) {
      cid = bundle.add_vertex(VertexKind::kCharacter,
                              std::string(kCharacterTypeLabel),
                              r.character_name, ckey);
    }
    if (!eid) {
      eid = bundle.add_vertex(VertexKind::kEntity, r.entity_type,
                              r.entity_name, ekey);
    }
    bundle.add_edge(*cid, *eid, r.relation_type,
                    TimeInterval{r.start, r.end});
    ++report.loaded_rows;
  }
  std::sort(report.rejected.begin(), report.rejected.end(),
            [](const RejectedRow& a, const RejectedRow& b) {
              return a.line < b.line;
            });
  bundle.seal();
  return result;
}

LoadResult load(const std::filesystem::path& records_path,
                const std::optional<std::filesystem::path>& manifest_path,
                const LoadOptions& options) {
  std::optional<DatasetManifest> manifest;
  if (manifest_path) manifest = load_manifest(*manifest_path);
  return load_from_string(read_file(records_path), manifest, options);
}

std::vector<TransactionRecord> to_records(const NetworkBundle& bundle) {
  std::vector<TransactionRecord> out;
  out.reserve(bundle.edges().size());
  for (const TemporalEdge& e : bundle.edges()) {
    const Vertex& c = bundle.vertex(e.character);
    const Vertex& z = bundle.vertex(e.entity);
    out.push_back(TransactionRecord{c.key, c.display_name, z.display_name,
                                    z.type_label,
                                    bundle.relation_type_label(e.relation_type),
                                    e.interval.start, e.interval.end});
  }
  return out;
}

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "records-csv") return ExportFormat::kRecordsCsv;
  if (name == "graph-json") return ExportFormat::kGraphJson;
  if (name == "dot") return ExportFormat::kDot;
  return std::nullopt;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos &&
      trim(field).size() == field.size()) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string export_records_csv(const NetworkBundle& bundle) {
  std::string out(kRecordsHeader);
  out += '\n';
  for (const TransactionRecord& r : to_records(bundle)) {
    out += csv_escape(r.character_id) + ',' + csv_escape(r.character_name) +
           ',' + csv_escape(r.entity_name) + ',' + csv_escape(r.entity_type) +
           ',' + csv_escape(r.relation_type) + ',' + std::to_string(r.start) +
           ',' + std::to_string(r.end) + '\n';
  }
  return out;
}

std::string export_graph_json(const NetworkBundle& bundle) {
  json vertices = json::array();
  for (const Vertex& v : bundle.vertices()) {
    vertices.push_back({{"id", v.key},
                        {"kind", std::string(to_string(v.kind))},
                        {"type", v.type_label},
                        {"name", v.display_name}});
  }
  json edges = json::array();
  for (const TemporalEdge& e : bundle.edges()) {
    edges.push_back({{"id", e.id.value},
                     {"character", bundle.vertex(e.character).key},
                     {"entity", bundle.vertex(e.entity).key},
                     {"relation_type", bundle.relation_type_label(e.relation_type)},
                     {"start", e.interval.start},
                     {"end", e.interval.end}});
  }
  json doc = {{"vertices", vertices}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string export_dot(const NetworkBundle& bundle) {
  std::ostringstream out;
  out << "graph tan {\n";
  for (const Vertex& v : bundle.vertices()) {
    out << "  " << dot_quote(v.key) << " [label=" << dot_quote(v.display_name)
        << ", shape="
        << (v.kind == VertexKind::kCharacter ? "ellipse" : "box") << "];\n";
  }
  for (const TemporalEdge& e : bundle.edges()) {
    const std::string label = bundle.relation_type_label(e.relation_type) +
                              " " + std::to_string(e.interval.start) + "-" +
                              std::to_string(e.interval.end);
    out << "  " << dot_quote(bundle.vertex(e.character).key) << " -- "
        << dot_quote(bundle.vertex(e.entity).key)
        << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_bundle(const NetworkBundle& bundle, ExportFormat format) {
  switch (format) {
    case ExportFormat::kRecordsCsv:
      return export_records_csv(bundle);
    case ExportFormat::kGraphJson:
      return export_graph_json(bundle);
    case ExportFormat::kDot:
      return export_dot(bundle);
  }
  return {};
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory " +
                    path.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read from " + path.string() + " failed");
  return ss.str();
}

}  // namespace tapcorrect
