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

#include "chordnet/stats.hpp"

#include <algorithm>

#include "chordnet/errors.hpp"
#include "chordnet/network.hpp"
#include "chordnet/spectral.hpp"

namespace chordnet {

std::int64_t FrequencyTable::count(const std::string& label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

std::size_t FrequencyTable::rank_of(const std::string& label) const {
  for (std::size_t i = 0; i < by_rank.size(); ++i) {
    if (by_rank[i].first == label) return i + 1;
  }
  return 0;
}

std::int64_t FrequencyTable::total() const {
  std::int64_t t = 0;
  for (const auto& [label, c] : by_rank) t += c;
  return t;
}

FrequencyTable frequency_table(const Corpus& corpus) {
  if (corpus.total_events() == 0) throw DataError("frequency table of an empty corpus");
  FrequencyTable table;
  for (const auto& seg : corpus.segments()) {
    for (const auto& ev : seg.events) table.counts[ev.label] += 1;
  }
  table.by_rank.assign(table.counts.begin(), table.counts.end());
  std::sort(table.by_rank.begin(), table.by_rank.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return table;
}

std::vector<std::pair<double, double>> zipf_table(const FrequencyTable& table) {
  if (table.by_rank.empty()) throw DataError("Zipf table of an empty frequency table");
  std::vector<std::pair<double, double>> out;
  out.reserve(table.by_rank.size());
  for (std::size_t i = 0; i < table.by_rank.size(); ++i) {
    out.emplace_back(static_cast<double>(i + 1), static_cast<double>(table.by_rank[i].second));
  }
  return out;
}

BigramMatrix bigram_matrix(const Corpus& corpus) {
  if (corpus.total_events() == 0) throw DataError("bigram matrix of an empty corpus");
  BigramMatrix m;
  for (const auto& seg : corpus.segments()) {
    for (std::size_t i = 0; i + 1 < seg.events.size(); ++i) {
      m[{seg.events[i].label, seg.events[i + 1].label}] += 1;
    }
  }
  return m;
}

std::vector<RankJoinRow> pagerank_vs_frequency(const Corpus& corpus, double alpha, double tol) {
  FrequencyTable freq = frequency_table(corpus);
  RankVector pr = pagerank(build_google(build_graph(corpus), alpha), tol);

  std::vector<RankJoinRow> rows;
  rows.reserve(freq.by_rank.size());
  for (std::size_t i = 0; i < freq.by_rank.size(); ++i) {
    RankJoinRow row;
    row.label = freq.by_rank[i].first;
    row.frequency = freq.by_rank[i].second;
    row.frequency_rank = i + 1;
    row.pagerank = pr.score(row.label);
    row.pagerank_rank = pr.rank_of(row.label);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chordnet
