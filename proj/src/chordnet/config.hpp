// Copyright 2026 chordnet contributors
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

#ifndef CHORDNET_CONFIG_HPP_
#define CHORDNET_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chordnet {

// Where each semantic field lives in the input TSV. Defaults match the
// public Annotated Beethoven Corpus (ABC) all_annotations.tsv schema.
// numeral, local_key, segment_end and quartet_id are mandatory: their
// columns must exist in the file header.
struct ColumnMapping {
  std::string numeral = "numeral";
  std::string form = "form";
  std::string figured_bass = "figbass";
  std::string changes = "changes";
  std::string relative_root = "relativeroot";
  std::string pedal = "pedal";
  std::string global_key = "global_key";
  std::string local_key = "local_key";
  std::string segment_end = "phraseend";
  std::string measure = "measure";
  std::string movement = "mov";
  std::string duration = "length";
  // The quartet identifier may be spread over several columns (ABC uses
  // op + no); non-empty parts are joined with '-'.
  std::vector<std::string> quartet_id = {"op", "no"};
  // Column holding the correct global key used to repair 'nothing'/'false'
  // entries. Empty means "first column of the file".
  std::string global_key_fallback;
  // Cell values of the segment-end column treated as true.
  std::vector<std::string> segment_end_true = {"1", "true", "t", "yes", "\\\\", "\\"};
  // Whether the 'changes' figures are part of chord identity.
  bool include_changes = true;
};

// Quartet -> period assignment plus aliases merging split entries (the
// ABC Grosse Fuge, op. 133, is the finale of op. 130 and analyzed as such).
struct PeriodMap {
  std::vector<std::string> order;                  // emission order of periods
  std::map<std::string, std::string> by_quartet;   // canonical quartet -> period
  std::map<std::string, std::string> aliases;      // raw quartet -> canonical

  std::string canonical(const std::string& raw_quartet) const;
  // Throws ConfigError when the quartet is not mapped.
  std::string period_of(const std::string& canonical_quartet) const;
  int period_index(const std::string& period) const;  // -1 if unknown
};

PeriodMap default_beethoven_periods();

struct FitWindow {
  std::size_t first = 0;  // index into the sorted point list, inclusive
  std::size_t last = 0;   // exclusive; 0 means "to the end"
};

struct RunConfig {
  std::string input_path;
  std::string output_dir;
  ColumnMapping columns;
  PeriodMap periods = default_beethoven_periods();

  std::optional<std::string> mode_filter;    // "major" / "minor"
  std::optional<std::string> period_filter;  // restrict to one period

  double alpha = 0.85;
  double pagerank_tol = 1e-12;
  long pagerank_max_iter = 100000;

  // Fit windows: Zipf tail ranks 10..min(300, N); degree slope over the 30
  // leftmost points; PageRank slope over ranks 1..200.
  FitWindow zipf_window{9, 300};
  FitWindow degree_window{0, 30};
  FitWindow pagerank_window{0, 200};

  std::uint64_t seed = 0;
  int restarts = 100;
  int ensemble = 100;
  bool rewire_weighted = true;        // preserve weighted degrees in the null model
  std::string rewire_method = "stub"; // "stub" (configuration model) or "swap"
  int top_m = 30;                     // similarity list depth
  int profile_top = 5;                // labels listed per community profile
};

// Loads a JSON config file; keys absent from the file keep their defaults.
RunConfig load_config(const std::string& path);
// Applies one "dotted.key=value" override (the CLI and C API route through
// this). Throws ConfigError for unknown keys or unparsable values.
void apply_override(RunConfig& config, const std::string& key, const std::string& value);
// Reads a value back by the same keys; unset optionals read as "".
std::string get_override(const RunConfig& config, const std::string& key);
// Canonical JSON rendering of a config (stable key order) and its hash,
// recorded in report manifests.
std::string config_to_json(const RunConfig& config);
std::string config_hash(const RunConfig& config);

}  // namespace chordnet

#endif  // CHORDNET_CONFIG_HPP_
