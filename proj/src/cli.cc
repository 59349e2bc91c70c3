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

#include "tapcorrect/cli.h"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fnv.h"
#include "json.hpp"
#include "tapcorrect/error.h"
#include "tapcorrect/graph.h"
#include "tapcorrect/ingest.h"
#include "tapcorrect/merge.h"
#include "tapcorrect/structure_screen.h"
#include "tapcorrect/tap_similarity.h"

namespace tapcorrect::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string command;
  fs::path records;
  std::optional<fs::path> manifest;
  std::optional<TimePoint> now;
  std::optional<double> theta;
  std::string name_filter = "off";
  std::string policy = "smallest-id";
  std::string format = "graph-json";
  std::vector<std::string> pairs;
  fs::path out = ".";
  bool strict = false;
  int workers = 0;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json input_entry(const fs::path& path) {
  internal::Fnv1a h;
  h.add(read_file(path));
  return {{"path", path.generic_string()}, {"fnv1a64", hex64(h.value())}};
}

NameFilter name_filter_of(const RunConfig& cfg) {
  auto f = parse_name_filter(cfg.name_filter);
  if (!f) throw ValidationError("unknown --name-filter '" + cfg.name_filter + "'");
  return *f;
}

LoadResult load_inputs(const RunConfig& cfg) {
  auto result = load(cfg.records, cfg.manifest, LoadOptions{cfg.strict});
  const LoadReport& r = result.report;
  std::cerr << "loaded " << r.loaded_rows << " of " << r.input_rows
            << " rows (" << r.rejected.size() << " rejected), "
            << result.bundle.characters().size() << " characters, "
            << result.bundle.relation_types().size() << " relation types\n";
  for (const RejectedRow& row : r.rejected) {
    std::cerr << "  line " << row.line << ": " << row.reason << "\n";
  }
  return result;
}

void require_valid(const NetworkBundle& bundle) {
  const auto problems = validate(bundle);
  if (problems.empty()) return;
  std::string msg = "bundle failed validation:";
  for (const std::string& p : problems) msg += " " + p + ";";
  throw ValidationError(msg);
}

std::pair<TimePoint, std::string> now_of(const RunConfig& cfg,
                                         const NetworkBundle& bundle) {
  const TimePoint now = resolve_now(bundle, cfg.now);
  const char* source = cfg.now                  ? "flag"
                       : bundle.now_anchor()    ? "manifest"
                       : bundle.max_end()       ? "max_end"
                                                : "default";
  return {now, source};
}

int cmd_ingest(const RunConfig& cfg) {
  const auto loaded = load_inputs(cfg);
  write_file(cfg.out / "load_report.json", loaded.report.to_json());
  write_file(cfg.out / "bundle.graph.json", export_graph_json(loaded.bundle));
  return kExitOk;
}

int cmd_screen(const RunConfig& cfg) {
  const auto loaded = load_inputs(cfg);
  const auto candidates =
      screen_candidates(loaded.bundle, name_filter_of(cfg), {cfg.workers});
  std::cerr << candidates.pairs.size() << " candidate pairs\n";
  write_file(cfg.out / "candidates.csv",
             candidates_to_csv(loaded.bundle, candidates));
  return kExitOk;
}

int cmd_simtap(const RunConfig& cfg) {
  const auto loaded = load_inputs(cfg);
  const NetworkBundle& bundle = loaded.bundle;
  require_valid(bundle);
  const auto [now, source] = now_of(cfg, bundle);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (!cfg.pairs.empty()) {
    for (const std::string& spec : cfg.pairs) {
      const auto comma = spec.find(',');
      if (comma == std::string::npos) {
        throw ValidationError("--pair expects 'a,b', got '" + spec + "'");
      }
      const std::string a = spec.substr(0, comma);
      const std::string b = spec.substr(comma + 1);
      auto x = bundle.find(a);
      if (!x) throw ValidationError("unknown vertex id '" + a + "'");
      auto y = bundle.find(b);
      if (!y) throw ValidationError("unknown vertex id '" + b + "'");
      pairs.emplace_back(*x, *y);
    }
  } else {
    const NameFilter filter = name_filter_of(cfg);
    const auto characters = bundle.characters();
    for (std::size_t i = 0; i < characters.size(); ++i) {
      for (std::size_t j = i + 1; j < characters.size(); ++j) {
        if (passes(filter, bundle.vertex(characters[i]).display_name,
                   bundle.vertex(characters[j]).display_name)) {
          pairs.emplace_back(characters[i], characters[j]);
        }
      }
    }
  }
  std::cerr << "scoring " << pairs.size() << " pairs, now=" << now << " ("
            << source << ")\n";
  const auto results = score_pairs(bundle, pairs, now, {cfg.workers});
  write_file(cfg.out / "similarity.csv", similarity_to_csv(bundle, results));
  return kExitOk;
}

int cmd_dedupe(const RunConfig& cfg) {
  if (!cfg.theta) throw ValidationError("dedupe requires --theta");
  MergePolicy policy;
  if (cfg.policy == "max-degree") {
    policy.representative = RepresentativeRule::kMaxDegree;
  } else if (cfg.policy != "smallest-id") {
    throw ValidationError("unknown --policy '" + cfg.policy + "'");
  }
  const NameFilter filter = name_filter_of(cfg);

  const auto loaded = load_inputs(cfg);
  const NetworkBundle& bundle = loaded.bundle;
  require_valid(bundle);
  const auto [now, source] = now_of(cfg, bundle);

  const auto candidates = screen_candidates(bundle, filter, {cfg.workers});
  const auto groups =
      threshold_groups(candidates, bundle, *cfg.theta, now, {cfg.workers});
  const auto plan = plan_merge(bundle, groups.groups, policy);
  const auto merged = apply_merge(bundle, plan);
  const auto verification =
      verify_merge(bundle, merged.bundle, plan, candidates.pairs);
  std::cerr << candidates.pairs.size() << " candidates, "
            << groups.groups.size() << " groups at theta=" << *cfg.theta
            << ", now=" << now << " (" << source << "), "
            << merged.audit.removed_vertices << " vertices removed\n";

  write_file(cfg.out / "load_report.json", loaded.report.to_json());
  write_file(cfg.out / "candidates.csv", candidates_to_csv(bundle, candidates));
  write_file(cfg.out / "similarity.csv",
             similarity_to_csv(bundle, groups.scored));
  write_file(cfg.out / "groups.json", groups_to_json(bundle, groups));
  write_file(cfg.out / "merged.records.csv",
             export_records_csv(merged.bundle));
  write_file(cfg.out / "merged.graph.json", export_graph_json(merged.bundle));
  write_file(cfg.out / "merge_audit.json", merged.audit.to_json());
  json ver = {{"ok", verification.ok()},
              {"violations", verification.violations}};
  write_file(cfg.out / "verification.json", ver.dump(2) + "\n");

  json inputs = {{"records", input_entry(cfg.records)}};
  if (cfg.manifest) inputs["manifest"] = input_entry(*cfg.manifest);
  json manifest = {{"tool", "tapcorrect"},
                   {"version", kVersion},
                   {"command", "dedupe"},
                   {"inputs", inputs},
                   {"now", now},
                   {"now_source", source},
                   {"theta", *cfg.theta},
                   {"name_filter", std::string(to_string(filter))},
                   {"policy", cfg.policy},
                   {"strict", cfg.strict}};
  write_file(cfg.out / "run_manifest.json", manifest.dump(2) + "\n");

  if (!verification.ok()) {
    for (const std::string& msg : verification.violations) {
      std::cerr << "verification: " << msg << "\n";
    }
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_export(const RunConfig& cfg) {
  const auto format = parse_export_format(cfg.format);
  if (!format) throw ValidationError("unknown --format '" + cfg.format + "'");
  const auto loaded = load_inputs(cfg);
  const char* name = *format == ExportFormat::kRecordsCsv  ? "bundle.csv"
                     : *format == ExportFormat::kGraphJson ? "bundle.json"
                                                           : "bundle.dot";
  write_file(cfg.out / name, export_bundle(loaded.bundle, *format));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Detect and merge duplicate characters in temporal activity "
               "networks",
               "tapcorrect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--records", cfg.records, "Transaction records CSV")
        ->required();
    sub->add_option("--manifest", cfg.manifest, "Dataset manifest JSON");
    sub->add_flag("--strict", cfg.strict, "Treat any rejected row as fatal");
    sub->add_option("--workers", cfg.workers,
                    "Worker threads (1 = serial kernels, 0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "Output directory");
  };
  auto add_now = [&cfg](CLI::App* sub) {
    sub->add_option("--now", cfg.now,
                    "Reference time for temporal weights (default: dataset "
                    "anchor or latest end time)");
  };
  auto add_filter = [&cfg](CLI::App* sub) {
    sub->add_option("--name-filter", cfg.name_filter,
                    "Pair filter by display name: off|same|different");
  };

  auto* ingest = app.add_subcommand("ingest", "Load and validate records");
  add_common(ingest);
  auto* screen = app.add_subcommand("screen", "Structure-error screening");
  add_common(screen);
  add_filter(screen);
  auto* simtap_cmd = app.add_subcommand("simtap", "TAP similarity of pairs");
  add_common(simtap_cmd);
  add_now(simtap_cmd);
  add_filter(simtap_cmd);
  simtap_cmd->add_option("--pair", cfg.pairs, "Pair of vertex ids 'a,b'");
  auto* dedupe = app.add_subcommand("dedupe", "Full pipeline with merging");
  add_common(dedupe);
  add_now(dedupe);
  add_filter(dedupe);
  dedupe->add_option("--theta", cfg.theta, "Similarity threshold in (0, 1]");
  dedupe->add_option("--policy", cfg.policy,
                     "Representative rule: smallest-id|max-degree");
  auto* export_cmd = app.add_subcommand("export", "Export the loaded bundle");
  add_common(export_cmd);
  export_cmd->add_option("--format", cfg.format,
                         "records-csv|graph-json|dot");

  std::vector<char*> argv;
  std::string program = "tapcorrect";
  argv.push_back(program.data());
  std::vector<std::string> owned(args);
  for (std::string& a : owned) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(cfg);
    if (screen->parsed()) return cmd_screen(cfg);
    if (simtap_cmd->parsed()) return cmd_simtap(cfg);
    if (dedupe->parsed()) return cmd_dedupe(cfg);
    if (export_cmd->parsed()) return cmd_export(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace tapcorrect::cli
