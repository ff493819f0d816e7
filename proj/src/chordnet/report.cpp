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

#include "chordnet/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chordnet/errors.hpp"
#include "chordnet/text.hpp"

namespace chordnet {

namespace fs = std::filesystem;

std::string emit_edges_tsv(const ChordGraph& g) {
  std::string out = "source\ttarget\tweight\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (const auto& [j, w] : g.out_edges(static_cast<int>(i))) {
      out += g.labels()[i];
      out += '\t';
      out += g.labels()[static_cast<std::size_t>(j)];
      out += '\t';
      out += std::to_string(w);
      out += '\n';
    }
  }
  return out;
}

std::string emit_vertices_csv(const ChordGraph& g) {
  std::string out = "label,in_degree,out_degree\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out += csv_field(g.labels()[i]) + "," + std::to_string(g.in_degree(static_cast<int>(i))) +
           "," + std::to_string(g.out_degree(static_cast<int>(i))) + "\n";
  }
  return out;
}

std::string emit_pagerank_csv(const RankVector& p) {
  std::string out = "label,score,rank\n";
  for (std::size_t i = 0; i < p.by_rank().size(); ++i) {
    out += csv_field(p.by_rank()[i].label) + "," + format_double(p.by_rank()[i].score) + "," +
           std::to_string(i + 1) + "\n";
  }
  return out;
}

std::string emit_spectrum_csv(const Spectrum& s) {
  std::string out = "re,im,modulus\n";
  for (const auto& ev : s.eigenvalues) {
    out += format_double(ev.real()) + "," + format_double(ev.imag()) + "," +
           format_double(std::abs(ev)) + "\n";
  }
  return out;
}

std::string emit_support_csv(const std::vector<SupportEntry>& support) {
  std::string out = "label,amplitude\n";
  for (const auto& s : support) {
    out += csv_field(s.label) + "," + format_double(s.amplitude) + "\n";
  }
  return out;
}

std::string emit_degree_csv(const std::vector<DegreePoint>& points) {
  std::string out = "k,k_normalized,count_above\n";
  for (const auto& p : points) {
    out += std::to_string(p.k) + "," + format_double(p.k_normalized) + "," +
           std::to_string(p.count_above) + "\n";
  }
  return out;
}

std::string emit_communities_csv(const ChordGraph& g, const Partition& partition,
                                 const RankVector& p) {
  std::string out = "label,community,pagerank\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out += csv_field(g.labels()[i]) + "," + std::to_string(partition.community[i]) + "," +
           format_double(p.score(g.labels()[i])) + "\n";
  }
  return out;
}

std::string emit_profiles_json(const std::vector<CommunityProfile>& profiles,
                               const Partition& partition) {
  std::ostringstream out;
  out << "{\n  \"modularity\": " << format_double(partition.modularity)
      << ",\n  \"seed\": " << partition.seed << ",\n  \"restarts\": " << partition.restarts
      << ",\n  \"communities\": [\n";
  for (std::size_t c = 0; c < profiles.size(); ++c) {
    const auto& pr = profiles[c];
    out << "    {\"id\": " << pr.id << ", \"size\": " << pr.size
        << ", \"pagerank_mass\": " << format_double(pr.pagerank_mass) << ", \"top\": [";
    for (std::size_t i = 0; i < pr.top.size(); ++i) {
      if (i) out << ", ";
      out << "{\"label\": \"" << json_escape(pr.top[i].label)
          << "\", \"pagerank\": " << format_double(pr.top[i].score) << "}";
    }
    out << "]}" << (c + 1 < profiles.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string emit_null_stats_json(const NullEnsembleStats& stats) {
  std::ostringstream out;
  out << "{\"mean\": " << format_double(stats.mean) << ", \"std\": " << format_double(stats.stddev)
      << ", \"ensemble\": " << stats.ensemble << ", \"restarts\": " << stats.restarts << "}\n";
  return out.str();
}

std::string emit_fit_json(const PowerLawFit& fit) {
  std::ostringstream out;
  out << "{\"slope\": " << format_double(fit.slope)
      << ", \"intercept\": " << format_double(fit.intercept) << ", \"range\": [" << fit.first + 1
      << ", " << fit.last << "], \"points_used\": " << fit.points_used
      << ", \"residual\": " << format_double(fit.residual) << "}\n";
  return out.str();
}

std::string emit_frequencies_csv(const FrequencyTable& table) {
  std::string out = "label,count,rank\n";
  for (std::size_t i = 0; i < table.by_rank.size(); ++i) {
    out += csv_field(table.by_rank[i].first) + "," + std::to_string(table.by_rank[i].second) +
           "," + std::to_string(i + 1) + "\n";
  }
  return out;
}

std::string emit_zipf_csv(const std::vector<std::pair<double, double>>& zipf) {
  std::string out = "rank,frequency\n";
  for (const auto& [r, f] : zipf) {
    out += format_double(r) + "," + format_double(f) + "\n";
  }
  return out;
}

std::string emit_bigrams_csv(const BigramMatrix& bigrams) {
  std::string out = "from,to,count\n";
  for (const auto& [pair, count] : bigrams) {
    out += csv_field(pair.first) + "," + csv_field(pair.second) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string emit_rank_join_csv(const std::vector<RankJoinRow>& rows) {
  std::string out = "label,frequency,frequency_rank,pagerank,pagerank_rank\n";
  for (const auto& r : rows) {
    out += csv_field(r.label) + "," + std::to_string(r.frequency) + "," +
           std::to_string(r.frequency_rank) + "," + format_double(r.pagerank) + "," +
           std::to_string(r.pagerank_rank) + "\n";
  }
  return out;
}

namespace {

std::string metric_name(Metric metric) {
  return metric == Metric::fidelity ? "fidelity" : "similarity";
}

}  // namespace

std::string emit_comparison_csv(const std::vector<ComparisonCell>& cells, Metric metric) {
  std::string out = "period_i,period_j,quartets_a,quartets_b,metric,value,density\n";
  for (const auto& cell : cells) {
    for (const auto& v : cell.values) {
      out += csv_field(cell.period_i) + "," + csv_field(cell.period_j) + "," +
             csv_field(v.vectors_a) + "," + csv_field(v.vectors_b) + "," + metric_name(metric) +
             "," + format_double(v.value) + "," + std::to_string(v.density) + "\n";
    }
  }
  return out;
}

std::string emit_comparison_json(const std::vector<ComparisonCell>& cells, Metric metric) {
  std::ostringstream out;
  out << "{\n  \"metric\": \"" << metric_name(metric) << "\",\n  \"cells\": [\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    out << "    {\"period_i\": \"" << json_escape(c.period_i) << "\", \"period_j\": \""
        << json_escape(c.period_j) << "\", \"count\": " << c.values.size()
        << ", \"mean\": " << format_double(c.mean) << ", \"std\": " << format_double(c.stddev)
        << "}" << (i + 1 < cells.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string emit_cleaning_jsonl(const CleaningReport& report) {
  std::string out;
  for (const auto& e : report.entries) {
    out += "{\"kind\": \"";
    out += e.kind == CleaningEntry::Kind::substitution ? "substitution" : "warning";
    out += "\", \"file\": \"" + json_escape(e.file) + "\", \"line\": " + std::to_string(e.line) +
           ", \"field\": \"" + json_escape(e.field) + "\", \"before\": \"" + json_escape(e.before) +
           "\", \"after\": \"" + json_escape(e.after) + "\", \"note\": \"" + json_escape(e.note) +
           "\"}\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + p.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

LoadedCorpus load_corpus(const RunConfig& config) {
  if (config.input_path.empty()) throw ConfigError("no input file given (set --input)");
  LoadedCorpus loaded;
  loaded.input_path = config.input_path;
  AnnotationTable table = load_tsv(config.input_path, config.columns);
  loaded.raw_rows = table.rows().size();
  if (loaded.raw_rows == 0) throw DataError("no data rows in " + config.input_path);
  loaded.report = clean(table, config.columns);
  loaded.corpus = segmentize(table, config.columns, config.periods, &loaded.report);
  return loaded;
}

std::string emit_validate_summary_json(const LoadedCorpus& loaded) {
  const CorpusSummary& s = loaded.corpus.summary();
  std::ostringstream out;
  out << "{\n"
      << "  \"input\": \"" << json_escape(loaded.input_path) << "\",\n"
      << "  \"entries\": " << loaded.raw_rows << ",\n"
      << "  \"segments\": " << s.total_segments << ",\n"
      << "  \"segments_major\": " << s.segments_major << ",\n"
      << "  \"segments_minor\": " << s.segments_minor << ",\n"
      << "  \"chords_major\": " << s.events_major << ",\n"
      << "  \"chords_minor\": " << s.events_minor << ",\n"
      << "  \"distinct_major\": " << s.distinct_major << ",\n"
      << "  \"distinct_minor\": " << s.distinct_minor << ",\n"
      << "  \"substitutions\": " << loaded.report.substitutions() << ",\n"
      << "  \"warnings\": " << loaded.report.warnings() << "\n"
      << "}\n";
  return out.str();
}

namespace {

[[noreturn]] void stage_fail(const std::string& stage, const std::exception& e) {
  throw DataError("report stage '" + stage + "' failed: " + e.what());
}

std::string fit_json_inline(const PowerLawFit& fit) {
  std::string s = emit_fit_json(fit);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// Analysis bundle for one graph (global or one period).
void write_graph_bundle(const fs::path& dir, const Corpus& sub, const ChordGraph& graph,
                        const RunConfig& config, std::vector<std::string>* outputs) {
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file((dir / name).string(), content);
    outputs->push_back((dir / name).string());
  };

  emit("edges.tsv", emit_edges_tsv(graph));
  emit("vertices.csv", emit_vertices_csv(graph));

  GoogleMatrix google = build_google(graph, config.alpha);
  RankVector pr = pagerank(google, config.pagerank_tol, config.pagerank_max_iter);
  emit("pagerank.csv", emit_pagerank_csv(pr));
  emit("spectrum.csv", emit_spectrum_csv(spectrum(google)));

  auto deg_in = degree_distribution(graph, Direction::in);
  auto deg_out = degree_distribution(graph, Direction::out);
  emit("degree_in.csv", emit_degree_csv(deg_in));
  emit("degree_out.csv", emit_degree_csv(deg_out));

  UndirectedGraph u = undirect(graph);
  Partition best = best_partition(u, config.restarts, config.seed);
  emit("communities.csv", emit_communities_csv(graph, best, pr));
  emit("profiles.json",
       emit_profiles_json(community_profile(graph, best, pr, config.profile_top), best));
  const RewireMethod method =
      config.rewire_method == "swap" ? RewireMethod::edge_swap : RewireMethod::stub_matching;
  emit("null_stats.json",
       emit_null_stats_json(null_modularity_stats(u, config.ensemble, config.restarts, config.seed,
                                                  config.rewire_weighted, method)));

  // Slopes: degree distributions over the leftmost points, PageRank over the
  // leading ranks, Zipf over the configured tail of this sub-corpus. Windows
  // that leave fewer than 2 usable points (tiny corpora) omit the entry.
  // Only plottable points enter the windows: log-log fits cannot see k = 0
  // or an empty tail count.
  auto degree_points = [](const std::vector<DegreePoint>& pts) {
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : pts) {
      if (p.k <= 0 || p.count_above == 0) continue;
      xy.emplace_back(p.k_normalized, static_cast<double>(p.count_above));
    }
    return xy;
  };
  std::vector<std::pair<double, double>> pr_points;
  for (std::size_t i = 0; i < pr.by_rank().size(); ++i) {
    pr_points.emplace_back(static_cast<double>(i + 1), pr.by_rank()[i].score);
  }
  FrequencyTable freq = frequency_table(sub);
  std::vector<std::pair<std::string, std::string>> fit_entries;
  auto try_fit = [&](const std::string& key, const std::vector<std::pair<double, double>>& pts,
                     const FitWindow& window) {
    try {
      fit_entries.emplace_back(key, fit_json_inline(fit_powerlaw(pts, window.first, window.last)));
    } catch (const DataError&) {
    }
  };
  try_fit("degree_in", degree_points(deg_in), config.degree_window);
  try_fit("degree_out", degree_points(deg_out), config.degree_window);
  try_fit("pagerank", pr_points, config.pagerank_window);
  try_fit("zipf", zipf_table(freq), config.zipf_window);
  std::string fits = "{\n";
  for (std::size_t i = 0; i < fit_entries.size(); ++i) {
    fits += "  \"" + fit_entries[i].first + "\": " + fit_entries[i].second;
    fits += i + 1 < fit_entries.size() ? ",\n" : "\n";
  }
  fits += "}\n";
  emit("fits.json", fits);
}

}  // namespace

std::vector<std::string> write_stats_tables(const Corpus& corpus, double alpha, double tol,
                                            const std::string& out_dir) {
  const fs::path stats_dir(out_dir);
  std::vector<std::string> outputs;
  auto emit = [&](const std::string& name, const std::string& content) {
    const std::string path = (stats_dir / name).string();
    write_file(path, content);
    outputs.push_back(path);
  };

  FrequencyTable all = frequency_table(corpus);
  emit("frequencies_all.csv", emit_frequencies_csv(all));
  emit("zipf_all.csv", emit_zipf_csv(zipf_table(all)));
  for (Mode mode : {Mode::major, Mode::minor}) {
    CorpusFilter f;
    f.mode = mode;
    Corpus sub = filter(corpus, f);
    if (sub.total_events() == 0) continue;
    const std::string suffix = mode_name(mode);
    FrequencyTable freq = frequency_table(sub);
    emit("frequencies_" + suffix + ".csv", emit_frequencies_csv(freq));
    emit("zipf_" + suffix + ".csv", emit_zipf_csv(zipf_table(freq)));
    emit("bigrams_" + suffix + ".csv", emit_bigrams_csv(bigram_matrix(sub)));
    emit("rank_vs_frequency_" + suffix + ".csv",
         emit_rank_join_csv(pagerank_vs_frequency(sub, alpha, tol)));
  }
  return outputs;
}

std::string run_report(const RunConfig& config) {
  if (config.output_dir.empty()) throw ConfigError("no output directory given (set --out)");
  const fs::path out_dir(config.output_dir);

  LoadedCorpus loaded;
  try {
    loaded = load_corpus(config);
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    stage_fail("load", e);
  }

  std::vector<std::string> outputs;
  std::vector<std::pair<std::string, std::size_t>> graph_sizes;

  auto record = [&](const std::string& path) { outputs.push_back(path); };

  try {
    write_file((out_dir / "cleaning_report.jsonl").string(), emit_cleaning_jsonl(loaded.report));
    record((out_dir / "cleaning_report.jsonl").string());
    write_file((out_dir / "summary.json").string(), emit_validate_summary_json(loaded));
    record((out_dir / "summary.json").string());
  } catch (const std::exception& e) {
    stage_fail("validate", e);
  }

  std::vector<Mode> modes;
  if (config.mode_filter) {
    modes.push_back(parse_mode(*config.mode_filter));
  } else {
    modes = {Mode::major, Mode::minor};
  }

  // Corpus-level stats tables (whole analyzed corpus plus per mode).
  try {
    Corpus stats_corpus = loaded.corpus;
    if (config.mode_filter) {
      CorpusFilter f;
      f.mode = parse_mode(*config.mode_filter);
      stats_corpus = filter(loaded.corpus, f);
    }
    for (auto& path : write_stats_tables(stats_corpus, config.alpha, config.pagerank_tol,
                                         (out_dir / "stats").string())) {
      record(path);
    }
  } catch (const std::exception& e) {
    stage_fail("stats", e);
  }

  for (Mode mode : modes) {
    const std::string mname = mode_name(mode);
    CorpusFilter f;
    f.mode = mode;
    Corpus mode_corpus = filter(loaded.corpus, f);
    if (mode_corpus.total_events() == 0) continue;

    try {
      ChordGraph global = build_graph(mode_corpus);
      graph_sizes.emplace_back(mname + "/global", global.vertex_count());
      write_graph_bundle(out_dir / mname / "global", mode_corpus, global, config, &outputs);
    } catch (const std::exception& e) {
      stage_fail("graph/" + mname + "/global", e);
    }

    std::vector<std::string> periods;
    if (config.period_filter) {
      periods.push_back(*config.period_filter);
    } else {
      periods = mode_corpus.periods();
    }
    for (const auto& period : periods) {
      CorpusFilter pf;
      pf.mode = mode;
      pf.period = period;
      Corpus sub = filter(loaded.corpus, pf);
      if (sub.total_events() == 0) continue;
      try {
        ChordGraph g = build_graph(sub);
        graph_sizes.emplace_back(mname + "/" + period, g.vertex_count());
        write_graph_bundle(out_dir / mname / period, sub, g, config, &outputs);
      } catch (const std::exception& e) {
        stage_fail("graph/" + mname + "/" + period, e);
      }
    }

    if (!config.period_filter && mode_corpus.periods().size() >= 2) {
      try {
        for (Metric metric : {Metric::fidelity, Metric::similarity}) {
          auto cells = period_comparison(mode_corpus, mode, metric, config.top_m, config.alpha,
                                         config.pagerank_tol);
          const std::string base =
              metric == Metric::fidelity ? "compare_fidelity" : "compare_similarity";
          write_file((out_dir / mname / (base + ".csv")).string(),
                     emit_comparison_csv(cells, metric));
          record((out_dir / mname / (base + ".csv")).string());
          write_file((out_dir / mname / (base + ".json")).string(),
                     emit_comparison_json(cells, metric));
          record((out_dir / mname / (base + ".json")).string());
        }
      } catch (const std::exception& e) {
        stage_fail("compare/" + mname, e);
      }
    }
  }

  // Manifest last: its presence certifies a complete bundle.
  std::ostringstream manifest;
  manifest << "{\n  \"tool\": \"chordnet\",\n  \"version\": \"0.1.0\",\n  \"config_hash\": \""
           << config_hash(config) << "\",\n  \"input\": \"" << json_escape(loaded.input_path)
           << "\",\n  \"entries\": " << loaded.raw_rows << ",\n  \"graphs\": {";
  for (std::size_t i = 0; i < graph_sizes.size(); ++i) {
    manifest << (i ? ", " : "") << "\"" << json_escape(graph_sizes[i].first)
             << "\": " << graph_sizes[i].second;
  }
  manifest << "},\n  \"outputs\": [\n";
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    fs::path rel = fs::relative(outputs[i], out_dir);
    manifest << "    \"" << json_escape(rel.string()) << "\""
             << (i + 1 < outputs.size() ? "," : "") << "\n";
  }
  manifest << "  ]\n}\n";
  const std::string manifest_path = (out_dir / "manifest.json").string();
  write_file(manifest_path, manifest.str());
  return manifest_path;
}

}  // namespace chordnet
