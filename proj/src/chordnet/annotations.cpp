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

#include "chordnet/annotations.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "chordnet/errors.hpp"
#include "chordnet/text.hpp"

namespace chordnet {

std::string mode_name(Mode mode) {
  return mode == Mode::major ? "major" : "minor";
}

Mode parse_mode(const std::string& name) {
  std::string low = to_lower(trim(name));
  if (low == "major") return Mode::major;
  if (low == "minor") return Mode::minor;
  throw ConfigError("unknown mode '" + name + "' (expected major or minor)");
}

Mode key_mode(const std::string& local_key) {
  // Roman-numeral keys: leading 'b' acts as a flat only when followed by a
  // letter ("bVI", "bvii"); '#' is always an accidental.
  std::size_t i = 0;
  while (i < local_key.size() && local_key[i] == '#') ++i;
  while (i + 1 < local_key.size() && local_key[i] == 'b' &&
         std::isalpha(static_cast<unsigned char>(local_key[i + 1]))) {
    ++i;
  }
  if (i < local_key.size() && std::isalpha(static_cast<unsigned char>(local_key[i]))) {
    return std::islower(static_cast<unsigned char>(local_key[i])) ? Mode::minor : Mode::major;
  }
  return Mode::major;
}

int AnnotationTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string AnnotationTable::cell(const RawRow& row, int column_index) const {
  if (column_index < 0 || static_cast<std::size_t>(column_index) >= row.cells.size()) return "";
  return row.cells[static_cast<std::size_t>(column_index)];
}

namespace {

struct ColumnIndex {
  int numeral = -1;
  int form = -1;
  int figured_bass = -1;
  int changes = -1;
  int relative_root = -1;
  int pedal = -1;
  int global_key = -1;
  int local_key = -1;
  int segment_end = -1;
  int movement = -1;
  std::vector<int> quartet_id;
  int global_key_fallback = -1;
};

ColumnIndex resolve_columns(const AnnotationTable& table, const ColumnMapping& m,
                            bool validate_mandatory) {
  ColumnIndex ix;
  ix.numeral = table.column(m.numeral);
  ix.form = table.column(m.form);
  ix.figured_bass = table.column(m.figured_bass);
  ix.changes = table.column(m.changes);
  ix.relative_root = table.column(m.relative_root);
  ix.pedal = table.column(m.pedal);
  ix.global_key = table.column(m.global_key);
  ix.local_key = table.column(m.local_key);
  ix.segment_end = table.column(m.segment_end);
  ix.movement = table.column(m.movement);
  for (const auto& col : m.quartet_id) ix.quartet_id.push_back(table.column(col));
  if (m.global_key_fallback.empty()) {
    ix.global_key_fallback = table.header().empty() ? -1 : 0;
  } else {
    ix.global_key_fallback = table.column(m.global_key_fallback);
  }

  if (validate_mandatory) {
    auto require = [&](int idx, const std::string& field, const std::string& col) {
      if (idx < 0) {
        throw ConfigError("missing mandatory column for '" + field + "' (expected '" + col +
                          "' in header of " + table.file() + ")");
      }
    };
    require(ix.numeral, "numeral", m.numeral);
    require(ix.local_key, "local-key", m.local_key);
    require(ix.segment_end, "segment-end-flag", m.segment_end);
    for (std::size_t i = 0; i < m.quartet_id.size(); ++i) {
      require(ix.quartet_id[i], "quartet-id", m.quartet_id[i]);
    }
    if (m.quartet_id.empty()) {
      throw ConfigError("missing mandatory column for 'quartet-id' (no columns configured)");
    }
  }
  return ix;
}

bool is_true_flag(const std::string& cell, const ColumnMapping& m) {
  if (cell.empty()) return false;
  for (const auto& t : m.segment_end_true) {
    if (iequals(cell, t)) return true;
  }
  return false;
}

std::string quartet_of(const AnnotationTable& table, const RawRow& row, const ColumnIndex& ix) {
  std::vector<std::string> parts;
  for (int col : ix.quartet_id) {
    std::string v = table.cell(row, col);
    if (!v.empty()) parts.push_back(v);
  }
  return join(parts, "-");
}

// Row index ranges [begin, end) of the segments, split at end flags.
std::vector<std::pair<std::size_t, std::size_t>> segment_ranges(
    const AnnotationTable& table, const ColumnMapping& m, const ColumnIndex& ix,
    CleaningReport* report) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  const auto& rows = table.rows();
  std::size_t begin = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool closes = is_true_flag(table.cell(rows[i], ix.segment_end), m);
    // A quartet or movement change without an end flag would silently chain
    // unrelated music; break there and leave a warning.
    bool boundary_break = false;
    if (!closes && i + 1 < rows.size()) {
      if (quartet_of(table, rows[i], ix) != quartet_of(table, rows[i + 1], ix) ||
          (ix.movement >= 0 &&
           table.cell(rows[i], ix.movement) != table.cell(rows[i + 1], ix.movement))) {
        boundary_break = true;
      }
    }
    if (closes || boundary_break || i + 1 == rows.size()) {
      ranges.emplace_back(begin, i + 1);
      begin = i + 1;
      if (boundary_break && report) {
        report->entries.push_back({CleaningEntry::Kind::warning, table.file(), rows[i].line,
                                   "segment-end-flag", "", "",
                                   "segment closed at quartet/movement change without an end flag"});
      }
      if (!closes && i + 1 == rows.size() && report) {
        report->entries.push_back({CleaningEntry::Kind::warning, table.file(), rows[i].line,
                                   "segment-end-flag", "", "",
                                   "last segment is not terminated by an end flag"});
      }
    }
  }
  return ranges;
}

}  // namespace

AnnotationTable load_tsv(const std::string& path, const ColumnMapping& mapping) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);

  std::string line;
  if (!std::getline(in, line)) {
    throw DataError("no data rows in " + path + " (file is empty)");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!line.empty() && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF) {
    line.erase(0, 3);  // UTF-8 BOM
  }
  std::vector<std::string> header;
  for (auto& h : split(line, '\t')) header.push_back(trim(h));

  std::vector<RawRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    RawRow row;
    row.line = lineno;
    row.cells = split(line, '\t');
    for (auto& c : row.cells) c = canonicalize_cell(c);
    row.cells.resize(header.size());
    rows.push_back(std::move(row));
  }

  AnnotationTable table(path, std::move(header), std::move(rows));
  resolve_columns(table, mapping, /*validate_mandatory=*/true);
  return table;
}

std::size_t CleaningReport::substitutions() const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    if (e.kind == CleaningEntry::Kind::substitution) ++n;
  }
  return n;
}

std::size_t CleaningReport::warnings() const {
  return entries.size() - substitutions();
}

CleaningReport clean(AnnotationTable& table, const ColumnMapping& mapping) {
  CleaningReport report;
  ColumnIndex ix = resolve_columns(table, mapping, /*validate_mandatory=*/true);
  auto& rows = table.rows();

  // (a) Global keys 'nothing'/'false' carry no information; the correct key
  // is read from the fallback column.
  if (ix.global_key >= 0) {
    for (auto& row : rows) {
      std::string gk = table.cell(row, ix.global_key);
      if (iequals(gk, "nothing") || iequals(gk, "false")) {
        std::string fallback =
            ix.global_key_fallback >= 0 ? table.cell(row, ix.global_key_fallback) : "";
        if (fallback.empty() || iequals(fallback, "nothing") || iequals(fallback, "false")) {
          report.entries.push_back({CleaningEntry::Kind::warning, table.file(), row.line,
                                    "global-key", gk, "",
                                    "faulty global key but no usable fallback value"});
          continue;
        }
        row.cells[static_cast<std::size_t>(ix.global_key)] = fallback;
        report.entries.push_back({CleaningEntry::Kind::substitution, table.file(), row.line,
                                  "global-key", gk, fallback, "replaced from fallback column"});
      }
    }
  }

  // (b) Local key 'Ab' is a mislabeled 'VI'.
  for (auto& row : rows) {
    if (table.cell(row, ix.local_key) == "Ab") {
      row.cells[static_cast<std::size_t>(ix.local_key)] = "VI";
      report.entries.push_back({CleaningEntry::Kind::substitution, table.file(), row.line,
                                "local-key", "Ab", "VI", "mislabeled local key"});
    }
  }

  // (c) A leading run of local key 'I' in a segment whose remainder starts
  // in 'i' is the documented major/minor typo.
  for (auto [begin, end] : segment_ranges(table, mapping, ix, nullptr)) {
    std::size_t run = begin;
    while (run < end && table.cell(rows[run], ix.local_key) == "I") ++run;
    if (run == begin || run == end) continue;
    if (table.cell(rows[run], ix.local_key) != "i") continue;
    for (std::size_t r = begin; r < run; ++r) {
      rows[r].cells[static_cast<std::size_t>(ix.local_key)] = "i";
      report.entries.push_back({CleaningEntry::Kind::substitution, table.file(), rows[r].line,
                                "local-key", "I", "i", "major key at the start of a minor segment"});
    }
  }

  // Pass-through anomalies worth flagging.
  for (auto& row : rows) {
    if (table.cell(row, ix.local_key).empty()) {
      report.entries.push_back({CleaningEntry::Kind::warning, table.file(), row.line, "local-key",
                                "", "", "empty local key; segment mode taken from neighbors"});
    }
  }
  return report;
}

std::string normalize_label(const AnnotationTable& table, const RawRow& row, PedalContext& pedal,
                            const ColumnMapping& mapping, bool* is_pedal_start) {
  ColumnIndex ix = resolve_columns(table, mapping, /*validate_mandatory=*/false);

  std::string pedal_cell = table.cell(row, ix.pedal);
  bool pedal_start = false;
  if (pedal_cell.empty()) {
    pedal.reset();
  } else if (pedal_cell != pedal.active_pedal) {
    pedal.active_pedal = pedal_cell;
    pedal_start = true;
  }
  if (is_pedal_start) *is_pedal_start = pedal_start;

  std::string numeral = table.cell(row, ix.numeral);
  std::string label;
  if (numeral.empty() || iequals(numeral, "none") || iequals(numeral, "@none")) {
    label = "none";
  } else {
    label = numeral;
    label += table.cell(row, ix.form);
    label += table.cell(row, ix.figured_bass);
    if (mapping.include_changes) {
      std::string changes = table.cell(row, ix.changes);
      if (!changes.empty()) {
        if (changes.front() == '(') {
          label += changes;
        } else {
          label += "(" + changes + ")";
        }
      }
    }
    std::string rel = table.cell(row, ix.relative_root);
    if (!rel.empty()) label += "/" + rel;
  }

  // The first chord of a pedal span keeps the pedal as part of its identity;
  // later chords under the same pedal are the plain chord.
  if (pedal_start) label = pedal.active_pedal + "[" + label + "]";
  return label;
}

Corpus::Corpus(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::unordered_set<std::string> major_labels;
  std::unordered_set<std::string> minor_labels;
  for (const auto& seg : segments_) {
    summary_.total_segments += 1;
    summary_.total_events += seg.events.size();
    if (seg.mode == Mode::major) {
      summary_.segments_major += 1;
      summary_.events_major += seg.events.size();
      for (const auto& ev : seg.events) major_labels.insert(ev.label);
    } else {
      summary_.segments_minor += 1;
      summary_.events_minor += seg.events.size();
      for (const auto& ev : seg.events) minor_labels.insert(ev.label);
    }
  }
  summary_.distinct_major = major_labels.size();
  summary_.distinct_minor = minor_labels.size();
}

std::vector<std::string> Corpus::periods() const {
  std::vector<std::string> out;
  for (const auto& seg : segments_) {
    if (std::find(out.begin(), out.end(), seg.period) == out.end()) out.push_back(seg.period);
  }
  return out;
}

std::vector<std::string> Corpus::quartets() const {
  std::vector<std::string> out;
  for (const auto& seg : segments_) {
    if (std::find(out.begin(), out.end(), seg.quartet) == out.end()) out.push_back(seg.quartet);
  }
  return out;
}

Corpus segmentize(const AnnotationTable& table, const ColumnMapping& mapping,
                  const PeriodMap& periods, CleaningReport* report) {
  ColumnIndex ix = resolve_columns(table, mapping, /*validate_mandatory=*/true);
  const auto& rows = table.rows();

  std::vector<Segment> segments;
  int next_id = 0;
  for (auto [begin, end] : segment_ranges(table, mapping, ix, report)) {
    Segment seg;
    seg.id = next_id++;
    seg.local_key = table.cell(rows[begin], ix.local_key);
    seg.mode = key_mode(seg.local_key);
    std::string raw_quartet = quartet_of(table, rows[begin], ix);
    seg.quartet = periods.canonical(raw_quartet);
    seg.period = periods.period_of(seg.quartet);

    PedalContext pedal;
    bool mode_warned = false;
    for (std::size_t r = begin; r < end; ++r) {
      ChordEvent ev;
      bool pedal_start = false;
      ev.label = normalize_label(table, rows[r], pedal, mapping, &pedal_start);
      ev.mode = seg.mode;
      ev.segment_id = seg.id;
      ev.quartet = seg.quartet;
      ev.period = seg.period;
      ev.position = static_cast<int>(r - begin);
      ev.is_segment_start = (r == begin);
      ev.is_pedal_start = pedal_start;
      seg.events.push_back(std::move(ev));

      if (report && !mode_warned) {
        std::string lk = table.cell(rows[r], ix.local_key);
        if (!lk.empty() && key_mode(lk) != seg.mode) {
          report->entries.push_back({CleaningEntry::Kind::warning, table.file(), rows[r].line,
                                     "local-key", lk, "",
                                     "local-key mode differs from the segment's opening key"});
          mode_warned = true;
        }
      }
    }
    segments.push_back(std::move(seg));
  }
  return Corpus(std::move(segments));
}

Corpus filter(const Corpus& corpus, const CorpusFilter& predicate) {
  std::vector<Segment> kept;
  for (const auto& seg : corpus.segments()) {
    if (predicate.mode && seg.mode != *predicate.mode) continue;
    if (predicate.period && seg.period != *predicate.period) continue;
    if (predicate.quartets && predicate.quartets->count(seg.quartet) == 0) continue;
    kept.push_back(seg);
  }
  return Corpus(std::move(kept));
}

}  // namespace chordnet
