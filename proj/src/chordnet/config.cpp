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

#include "chordnet/config.hpp"

#include <fstream>
#include <sstream>

#include "chordnet/errors.hpp"
#include "chordnet/text.hpp"
#include "json.hpp"

namespace chordnet {

namespace {

using nlohmann::ordered_json;

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string low = to_lower(value);
  if (low == "true" || low == "1" || low == "yes") return true;
  if (low == "false" || low == "0" || low == "no") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

// Windows are written 1-based inclusive ("10:300" = ranks 10..300) and kept
// 0-based half-open internally.
FitWindow parse_window(const std::string& key, const std::string& value) {
  auto parts = split(value, ':');
  if (parts.size() != 2) {
    throw ConfigError("config key '" + key + "': expected FIRST:LAST, got '" + value + "'");
  }
  long a = parse_long(key, trim(parts[0]));
  long b = parse_long(key, trim(parts[1]));
  if (a < 1 || b < a) {
    throw ConfigError("config key '" + key + "': invalid window '" + value + "'");
  }
  return FitWindow{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b)};
}

FitWindow window_from_json(const std::string& key, const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError("config key '" + key + "': expected [first, last]");
  }
  long a = j[0].get<long>();
  long b = j[1].get<long>();
  if (a < 1 || b < a) throw ConfigError("config key '" + key + "': invalid window");
  return FitWindow{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b)};
}

}  // namespace

std::string PeriodMap::canonical(const std::string& raw_quartet) const {
  auto it = aliases.find(raw_quartet);
  return it == aliases.end() ? raw_quartet : it->second;
}

std::string PeriodMap::period_of(const std::string& canonical_quartet) const {
  auto it = by_quartet.find(canonical_quartet);
  if (it == by_quartet.end()) {
    throw ConfigError("quartet '" + canonical_quartet + "' has no period assignment");
  }
  return it->second;
}

int PeriodMap::period_index(const std::string& period) const {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == period) return static_cast<int>(i);
  }
  return -1;
}

PeriodMap default_beethoven_periods() {
  PeriodMap pm;
  pm.order = {"early", "middle", "late"};
  for (int no = 1; no <= 6; ++no) {
    pm.by_quartet["18-" + std::to_string(no)] = "early";
  }
  pm.by_quartet["59-1"] = "middle";
  pm.by_quartet["59-2"] = "middle";
  pm.by_quartet["59-3"] = "middle";
  pm.by_quartet["74"] = "middle";
  pm.by_quartet["95"] = "middle";
  pm.by_quartet["127"] = "late";
  pm.by_quartet["130"] = "late";
  pm.by_quartet["131"] = "late";
  pm.by_quartet["132"] = "late";
  pm.by_quartet["135"] = "late";
  // The Grosse Fuge (op. 133) is the original finale of op. 130.
  pm.aliases["133"] = "130";
  return pm;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }

  RunConfig c;
  try {
    if (j.contains("input")) c.input_path = j["input"].get<std::string>();
    if (j.contains("output")) c.output_dir = j["output"].get<std::string>();
    if (j.contains("mode")) c.mode_filter = j["mode"].get<std::string>();
    if (j.contains("period")) c.period_filter = j["period"].get<std::string>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("pagerank_tol")) c.pagerank_tol = j["pagerank_tol"].get<double>();
    if (j.contains("pagerank_max_iter")) c.pagerank_max_iter = j["pagerank_max_iter"].get<long>();
    if (j.contains("zipf_window")) c.zipf_window = window_from_json("zipf_window", j["zipf_window"]);
    if (j.contains("degree_window")) c.degree_window = window_from_json("degree_window", j["degree_window"]);
    if (j.contains("pagerank_window")) {
      c.pagerank_window = window_from_json("pagerank_window", j["pagerank_window"]);
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("restarts")) c.restarts = j["restarts"].get<int>();
    if (j.contains("ensemble")) c.ensemble = j["ensemble"].get<int>();
    if (j.contains("rewire_weighted")) c.rewire_weighted = j["rewire_weighted"].get<bool>();
    if (j.contains("rewire_method")) c.rewire_method = j["rewire_method"].get<std::string>();
    if (j.contains("top_m")) c.top_m = j["top_m"].get<int>();
    if (j.contains("profile_top")) c.profile_top = j["profile_top"].get<int>();

    if (j.contains("columns")) {
      const auto& jc = j["columns"];
      auto get = [&](const char* key, std::string& target) {
        if (jc.contains(key)) target = jc[key].get<std::string>();
      };
      get("numeral", c.columns.numeral);
      get("form", c.columns.form);
      get("figured_bass", c.columns.figured_bass);
      get("changes", c.columns.changes);
      get("relative_root", c.columns.relative_root);
      get("pedal", c.columns.pedal);
      get("global_key", c.columns.global_key);
      get("local_key", c.columns.local_key);
      get("segment_end", c.columns.segment_end);
      get("measure", c.columns.measure);
      get("movement", c.columns.movement);
      get("duration", c.columns.duration);
      get("global_key_fallback", c.columns.global_key_fallback);
      if (jc.contains("quartet_id")) {
        c.columns.quartet_id = jc["quartet_id"].get<std::vector<std::string>>();
      }
      if (jc.contains("segment_end_true")) {
        c.columns.segment_end_true = jc["segment_end_true"].get<std::vector<std::string>>();
      }
      if (jc.contains("include_changes")) {
        c.columns.include_changes = jc["include_changes"].get<bool>();
      }
    }

    if (j.contains("periods")) {
      const auto& jp = j["periods"];
      PeriodMap pm;
      if (jp.contains("order")) pm.order = jp["order"].get<std::vector<std::string>>();
      if (jp.contains("map")) {
        for (const auto& [quartet, period] : jp["map"].items()) {
          pm.by_quartet[quartet] = period.get<std::string>();
        }
      }
      if (jp.contains("aliases")) {
        for (const auto& [raw, canon] : jp["aliases"].items()) {
          pm.aliases[raw] = canon.get<std::string>();
        }
      }
      if (pm.order.empty()) {
        // Keep deterministic order: first appearance in the map, sorted.
        std::set<std::string> seen;
        for (const auto& [q, p] : pm.by_quartet) seen.insert(p);
        pm.order.assign(seen.begin(), seen.end());
      }
      for (const auto& [q, p] : pm.by_quartet) {
        if (pm.period_index(p) < 0) {
          throw ConfigError("period '" + p + "' used in map but missing from periods.order");
        }
      }
      c.periods = pm;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  return c;
}

void apply_override(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "input") c.input_path = value;
  else if (key == "output") c.output_dir = value;
  else if (key == "mode") c.mode_filter = value;
  else if (key == "period") c.period_filter = value;
  else if (key == "alpha") c.alpha = parse_double(key, value);
  else if (key == "pagerank_tol") c.pagerank_tol = parse_double(key, value);
  else if (key == "pagerank_max_iter") c.pagerank_max_iter = parse_long(key, value);
  else if (key == "zipf_window") c.zipf_window = parse_window(key, value);
  else if (key == "degree_window") c.degree_window = parse_window(key, value);
  else if (key == "pagerank_window") c.pagerank_window = parse_window(key, value);
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_long(key, value));
  else if (key == "restarts") c.restarts = static_cast<int>(parse_long(key, value));
  else if (key == "ensemble") c.ensemble = static_cast<int>(parse_long(key, value));
  else if (key == "rewire_weighted") c.rewire_weighted = parse_bool(key, value);
  else if (key == "rewire_method") c.rewire_method = value;
  else if (key == "top_m") c.top_m = static_cast<int>(parse_long(key, value));
  else if (key == "profile_top") c.profile_top = static_cast<int>(parse_long(key, value));
  else if (key == "columns.include_changes") c.columns.include_changes = parse_bool(key, value);
  else if (key == "columns.quartet_id") c.columns.quartet_id = split(value, ',');
  else if (key.rfind("columns.", 0) == 0) {
    std::string field = key.substr(8);
    if (field == "numeral") c.columns.numeral = value;
    else if (field == "form") c.columns.form = value;
    else if (field == "figured_bass") c.columns.figured_bass = value;
    else if (field == "changes") c.columns.changes = value;
    else if (field == "relative_root") c.columns.relative_root = value;
    else if (field == "pedal") c.columns.pedal = value;
    else if (field == "global_key") c.columns.global_key = value;
    else if (field == "local_key") c.columns.local_key = value;
    else if (field == "segment_end") c.columns.segment_end = value;
    else if (field == "measure") c.columns.measure = value;
    else if (field == "movement") c.columns.movement = value;
    else if (field == "duration") c.columns.duration = value;
    else if (field == "global_key_fallback") c.columns.global_key_fallback = value;
    else throw ConfigError("unknown config key: " + key);
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

std::string get_override(const RunConfig& c, const std::string& key) {
  auto window = [](const FitWindow& w) {
    return std::to_string(w.first + 1) + ":" + std::to_string(w.last);
  };
  if (key == "input") return c.input_path;
  if (key == "output") return c.output_dir;
  if (key == "mode") return c.mode_filter.value_or("");
  if (key == "period") return c.period_filter.value_or("");
  if (key == "alpha") return format_double(c.alpha);
  if (key == "pagerank_tol") return format_double(c.pagerank_tol);
  if (key == "pagerank_max_iter") return std::to_string(c.pagerank_max_iter);
  if (key == "zipf_window") return window(c.zipf_window);
  if (key == "degree_window") return window(c.degree_window);
  if (key == "pagerank_window") return window(c.pagerank_window);
  if (key == "seed") return std::to_string(c.seed);
  if (key == "restarts") return std::to_string(c.restarts);
  if (key == "ensemble") return std::to_string(c.ensemble);
  if (key == "rewire_weighted") return c.rewire_weighted ? "true" : "false";
  if (key == "rewire_method") return c.rewire_method;
  if (key == "top_m") return std::to_string(c.top_m);
  if (key == "profile_top") return std::to_string(c.profile_top);
  if (key == "columns.include_changes") return c.columns.include_changes ? "true" : "false";
  if (key == "columns.quartet_id") return join(c.columns.quartet_id, ",");
  if (key.rfind("columns.", 0) == 0) {
    std::string field = key.substr(8);
    if (field == "numeral") return c.columns.numeral;
    if (field == "form") return c.columns.form;
    if (field == "figured_bass") return c.columns.figured_bass;
    if (field == "changes") return c.columns.changes;
    if (field == "relative_root") return c.columns.relative_root;
    if (field == "pedal") return c.columns.pedal;
    if (field == "global_key") return c.columns.global_key;
    if (field == "local_key") return c.columns.local_key;
    if (field == "segment_end") return c.columns.segment_end;
    if (field == "measure") return c.columns.measure;
    if (field == "movement") return c.columns.movement;
    if (field == "duration") return c.columns.duration;
    if (field == "global_key_fallback") return c.columns.global_key_fallback;
  }
  throw ConfigError("unknown config key: " + key);
}

std::string config_to_json(const RunConfig& c) {
  ordered_json j;
  j["input"] = c.input_path;
  j["output"] = c.output_dir;
  if (c.mode_filter) j["mode"] = *c.mode_filter;
  if (c.period_filter) j["period"] = *c.period_filter;
  j["alpha"] = c.alpha;
  j["pagerank_tol"] = c.pagerank_tol;
  j["pagerank_max_iter"] = c.pagerank_max_iter;
  j["zipf_window"] = {c.zipf_window.first + 1, c.zipf_window.last};
  j["degree_window"] = {c.degree_window.first + 1, c.degree_window.last};
  j["pagerank_window"] = {c.pagerank_window.first + 1, c.pagerank_window.last};
  j["seed"] = c.seed;
  j["restarts"] = c.restarts;
  j["ensemble"] = c.ensemble;
  j["rewire_weighted"] = c.rewire_weighted;
  j["rewire_method"] = c.rewire_method;
  j["top_m"] = c.top_m;
  j["profile_top"] = c.profile_top;
  ordered_json jc;
  jc["numeral"] = c.columns.numeral;
  jc["form"] = c.columns.form;
  jc["figured_bass"] = c.columns.figured_bass;
  jc["changes"] = c.columns.changes;
  jc["relative_root"] = c.columns.relative_root;
  jc["pedal"] = c.columns.pedal;
  jc["global_key"] = c.columns.global_key;
  jc["local_key"] = c.columns.local_key;
  jc["segment_end"] = c.columns.segment_end;
  jc["measure"] = c.columns.measure;
  jc["movement"] = c.columns.movement;
  jc["duration"] = c.columns.duration;
  jc["quartet_id"] = c.columns.quartet_id;
  jc["global_key_fallback"] = c.columns.global_key_fallback;
  jc["segment_end_true"] = c.columns.segment_end_true;
  jc["include_changes"] = c.columns.include_changes;
  j["columns"] = jc;
  ordered_json jp;
  jp["order"] = c.periods.order;
  ordered_json jm;
  for (const auto& [q, p] : c.periods.by_quartet) jm[q] = p;
  jp["map"] = jm;
  ordered_json ja;
  for (const auto& [raw, canon] : c.periods.aliases) ja[raw] = canon;
  jp["aliases"] = ja;
  j["periods"] = jp;
  return j.dump(2);
}

std::string config_hash(const RunConfig& c) {
  // FNV-1a 64, hex; a fingerprint for manifests, not a cryptographic hash.
  // The output directory is not part of the analysis identity.
  RunConfig canonical = c;
  canonical.output_dir.clear();
  std::string s = config_to_json(canonical);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace chordnet
