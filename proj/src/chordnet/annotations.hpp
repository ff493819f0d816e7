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

#ifndef CHORDNET_ANNOTATIONS_HPP_
#define CHORDNET_ANNOTATIONS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chordnet/config.hpp"

namespace chordnet {

enum class Mode { major, minor };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& name);  // throws ConfigError

// One data row of the annotation table, cells aligned with the header.
// line is 1-based within the source file (the header is line 1).
struct RawRow {
  int line = 0;
  std::vector<std::string> cells;
};

class AnnotationTable {
 public:
  AnnotationTable(std::string file, std::vector<std::string> header, std::vector<RawRow> rows)
      : file_(std::move(file)), header_(std::move(header)), rows_(std::move(rows)) {}

  const std::string& file() const { return file_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<RawRow>& rows() const { return rows_; }
  std::vector<RawRow>& rows() { return rows_; }

  int column(const std::string& name) const;  // -1 when absent

  // Cell access through the semantic mapping; absent optional columns read
  // as empty strings.
  std::string cell(const RawRow& row, int column_index) const;

 private:
  std::string file_;
  std::vector<std::string> header_;
  std::vector<RawRow> rows_;
};

// Reads a tab-separated file with a header row and validates that every
// mandatory mapped column exists. All cells are canonicalized (trimmed,
// NaN markers dropped, integer-valued floats shortened).
AnnotationTable load_tsv(const std::string& path, const ColumnMapping& mapping);

struct CleaningEntry {
  enum class Kind { substitution, warning };
  Kind kind = Kind::substitution;
  std::string file;
  int line = 0;
  std::string field;
  std::string before;
  std::string after;
  std::string note;
};

struct CleaningReport {
  std::vector<CleaningEntry> entries;

  std::size_t substitutions() const;
  std::size_t warnings() const;
};

// Applies the corpus repairs in order: (a) global keys 'nothing'/'false'
// replaced from the fallback column, (b) local key 'Ab' -> 'VI',
// (c) leading local-key 'I' of minor segments -> 'i'. Unknown anomalies are
// reported as warnings and passed through.
CleaningReport clean(AnnotationTable& table, const ColumnMapping& mapping);

// Pedal state carried across the rows of one segment.
struct PedalContext {
  std::string active_pedal;  // empty = no pedal span open

  void reset() { active_pedal.clear(); }
};

// Canonical chord identity of one cleaned row. Inside a pedal span every
// chord after the first drops the pedal; the first keeps it as a distinct
// "pedal[chord]" identity. Rows with no harmonic content yield "none".
std::string normalize_label(const AnnotationTable& table, const RawRow& row,
                            PedalContext& pedal, const ColumnMapping& mapping,
                            bool* is_pedal_start = nullptr);

struct ChordEvent {
  std::string label;
  Mode mode = Mode::major;
  int segment_id = 0;
  std::string quartet;
  std::string period;
  int position = 0;
  bool is_segment_start = false;
  bool is_pedal_start = false;
};

struct Segment {
  int id = 0;
  Mode mode = Mode::major;
  std::string quartet;
  std::string period;
  std::string local_key;  // local key of the first row
  std::vector<ChordEvent> events;
};

struct CorpusSummary {
  std::size_t total_events = 0;
  std::size_t total_segments = 0;
  std::size_t segments_major = 0;
  std::size_t segments_minor = 0;
  std::size_t events_major = 0;
  std::size_t events_minor = 0;
  std::size_t distinct_major = 0;
  std::size_t distinct_minor = 0;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  const CorpusSummary& summary() const { return summary_; }
  std::size_t total_events() const { return summary_.total_events; }
  bool empty() const { return segments_.empty(); }

  // Periods and quartets present, in first-appearance order.
  std::vector<std::string> periods() const;
  std::vector<std::string> quartets() const;

 private:
  std::vector<Segment> segments_;
  CorpusSummary summary_;
};

// Splits cleaned rows into segments at segment-end flags (the flagged row
// closes its segment), assigns mode from the segment's first local key and
// period via the quartet map. Appends a warning per segment whose rows
// disagree on mode when `report` is given.
Corpus segmentize(const AnnotationTable& table, const ColumnMapping& mapping,
                  const PeriodMap& periods, CleaningReport* report = nullptr);

struct CorpusFilter {
  std::optional<Mode> mode;
  std::optional<std::string> period;
  std::optional<std::set<std::string>> quartets;
};

// Whole segments matching every given predicate, order preserved.
Corpus filter(const Corpus& corpus, const CorpusFilter& predicate);

// Mode of a key token: minor iff its first letter is lowercase (leading
// accidentals like 'b'/'#' are skipped for Roman-numeral keys).
Mode key_mode(const std::string& local_key);

}  // namespace chordnet

#endif  // CHORDNET_ANNOTATIONS_HPP_
