// Acceptance suite: one pass/fail/skip line per criterion. Criteria 1-8 need
// the external ABC annotation TSV (set CHORDNET_ABC_TSV); 9 and 10 are
// self-contained. Exit code is nonzero when any executed criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "chordnet/annotations.hpp"
#include "chordnet/community.hpp"
#include "chordnet/config.hpp"
#include "chordnet/network.hpp"
#include "chordnet/report.hpp"
#include "chordnet/rng.hpp"
#include "chordnet/spectral.hpp"
#include "chordnet/stats.hpp"
#include "chordnet/stylometry.hpp"
#include "oracles.hpp"
#include "testgen.hpp"
#include "testutil.hpp"

using namespace chordnet;

namespace {

struct Check {
  std::string what;
  bool ok;
};

class Criterion {
 public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    checks_.push_back({what, ok});
  }

  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    std::string detail = what;
    if (!(got == want)) {
      detail += " (got " + std::to_string(got) + ", want " + std::to_string(want) + ")";
    }
    checks_.push_back({detail, got == want});
  }

  void expect_near(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s (got %.4f, want %.4f +- %.4g)", what.c_str(), got, want,
                  tol);
    checks_.push_back({buf, std::abs(got - want) <= tol});
  }

  bool passed() const {
    for (const auto& c : checks_) {
      if (!c.ok) return false;
    }
    return true;
  }

  const std::vector<Check>& checks() const { return checks_; }
  int id() const { return id_; }
  const std::string& name() const { return name_; }

 private:
  int id_;
  std::string name_;
  std::vector<Check> checks_;
};

int g_failures = 0;

void print_line(int id, const std::string& name, const std::string& status,
                const std::string& detail, double seconds) {
  std::printf("[%2d] %-4s %-58s (%.1fs)%s%s\n", id, status.c_str(), name.c_str(), seconds,
              detail.empty() ? "" : " ", detail.c_str());
}

void run(Criterion& c, double seconds) {
  if (c.passed()) {
    print_line(c.id(), c.name(), "PASS", "", seconds);
    return;
  }
  ++g_failures;
  print_line(c.id(), c.name(), "FAIL", "", seconds);
  for (const auto& check : c.checks()) {
    if (!check.ok) std::printf("        - %s\n", check.what.c_str());
  }
}

void skip(int id, const std::string& name, const std::string& why) {
  print_line(id, name, "SKIP", why, 0.0);
}

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/* ---- shared ABC corpus context ------------------------------------------ */

struct AbcContext {
  bool tried = false;
  bool ok = false;
  std::string why_missing;

  LoadedCorpus loaded;
  Corpus major;
  Corpus minor;
  std::map<std::string, Corpus> major_periods;

  std::optional<ChordGraph> major_graph;
  std::optional<ChordGraph> minor_graph;
  std::map<std::string, ChordGraph> major_period_graphs;

  std::map<std::string, double> best_modularity;          // key: major / minor / <period>
  std::map<std::string, NullEnsembleStats> null_stats;    // key: <period>

  int ensemble = 100;
  double null_tol = 0.02;
  int null_restarts = 10;

  static AbcContext& instance() {
    static AbcContext ctx;
    return ctx;
  }

  bool load() {
    if (tried) return ok;
    tried = true;
    const char* path = std::getenv("CHORDNET_ABC_TSV");
    if (path == nullptr || !std::filesystem::exists(path)) {
      why_missing = "(set CHORDNET_ABC_TSV to the ABC all_annotations.tsv to run)";
      return false;
    }
    if (std::getenv("CHORDNET_FULL_ENSEMBLE") != nullptr) {
      ensemble = 1000;
      null_tol = 0.01;
    }
    RunConfig config;
    config.input_path = path;
    try {
      loaded = load_corpus(config);
    } catch (const std::exception& e) {
      why_missing = std::string("(failed to load: ") + e.what() + ")";
      return false;
    }
    CorpusFilter f;
    f.mode = Mode::major;
    major = filter(loaded.corpus, f);
    f.mode = Mode::minor;
    minor = filter(loaded.corpus, f);
    for (const auto& period : {"early", "middle", "late"}) {
      CorpusFilter pf;
      pf.mode = Mode::major;
      pf.period = period;
      major_periods[period] = filter(loaded.corpus, pf);
    }
    ok = true;
    return true;
  }

  const ChordGraph& graph_major() {
    if (!major_graph) major_graph = build_graph(major);
    return *major_graph;
  }
  const ChordGraph& graph_minor() {
    if (!minor_graph) minor_graph = build_graph(minor);
    return *minor_graph;
  }
  const ChordGraph& graph_period(const std::string& period) {
    auto it = major_period_graphs.find(period);
    if (it == major_period_graphs.end()) {
      it = major_period_graphs.emplace(period, build_graph(major_periods[period])).first;
    }
    return it->second;
  }

  double modularity_of(const std::string& key) {
    auto it = best_modularity.find(key);
    if (it != best_modularity.end()) return it->second;
    const ChordGraph* g = nullptr;
    if (key == "major") {
      g = &graph_major();
    } else if (key == "minor") {
      g = &graph_minor();
    } else {
      g = &graph_period(key);
    }
    const double mu = best_partition(undirect(*g), 100, 0).modularity;
    best_modularity[key] = mu;
    return mu;
  }

  const NullEnsembleStats& null_for(const std::string& period) {
    auto it = null_stats.find(period);
    if (it == null_stats.end()) {
      it = null_stats
               .emplace(period, null_modularity_stats(undirect(graph_period(period)), ensemble,
                                                      null_restarts, 0))
               .first;
    }
    return it->second;
  }
};

bool abc_or_skip(int id, const std::string& name) {
  AbcContext& ctx = AbcContext::instance();
  if (!ctx.load()) {
    skip(id, name, ctx.why_missing);
    return false;
  }
  return true;
}

/* ---- criteria 1-8 (corpus-gated) ----------------------------------------- */

void criterion_1() {
  const std::string name = "corpus: database and segment counts";
  if (!abc_or_skip(1, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(1, name);
  c.expect_eq(ctx.loaded.raw_rows, std::size_t{28095}, "28095 entries");
  const CorpusSummary& s = ctx.loaded.corpus.summary();
  c.expect_eq(s.total_segments, std::size_t{929}, "929 segments");
  c.expect_eq(s.segments_major, std::size_t{551}, "551 major segments");
  c.expect_eq(s.segments_minor, std::size_t{378}, "378 minor segments");
  c.expect_eq(s.events_major, std::size_t{20276}, "20276 major chords");
  c.expect_eq(s.distinct_major, std::size_t{871}, "871 distinct major labels");
  c.expect_eq(s.events_minor, std::size_t{7819}, "7819 minor chords");
  c.expect_eq(s.distinct_minor, std::size_t{599}, "599 distinct minor labels");
  const double t = elapsed(start);
  c.expect(t < 10.0, "runtime under 10 s");
  run(c, t);
}

void criterion_2() {
  const std::string name = "corpus: per-period chord counts and graph sizes";
  if (!abc_or_skip(2, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(2, name);
  c.expect_eq(ctx.major_periods["early"].total_events(), std::size_t{6496}, "early major chords");
  c.expect_eq(ctx.major_periods["middle"].total_events(), std::size_t{4794},
              "middle major chords");
  c.expect_eq(ctx.major_periods["late"].total_events(), std::size_t{8986}, "late major chords");
  c.expect_eq(ctx.graph_period("early").vertex_count(), std::size_t{379}, "early graph size");
  c.expect_eq(ctx.graph_period("middle").vertex_count(), std::size_t{442}, "middle graph size");
  c.expect_eq(ctx.graph_period("late").vertex_count(), std::size_t{574}, "late graph size");
  run(c, elapsed(start));
}

void criterion_3() {
  const std::string name = "corpus: bigram spot check ii->V / V->ii";
  if (!abc_or_skip(3, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(3, name);
  const ChordGraph& g = ctx.graph_major();
  const int ii = g.vertex("ii");
  const int v = g.vertex("V");
  c.expect(ii >= 0 && v >= 0, "labels ii and V exist");
  if (ii >= 0 && v >= 0) {
    c.expect_eq(g.weight(ii, v), std::int64_t{40}, "w(ii->V) = 40");
    c.expect_eq(g.weight(v, ii), std::int64_t{7}, "w(V->ii) = 7");
  }
  run(c, elapsed(start));
}

std::vector<std::pair<double, double>> plottable_degree_points(const ChordGraph& g,
                                                               Direction dir) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : degree_distribution(g, dir)) {
    if (p.k <= 0 || p.count_above == 0) continue;
    xy.emplace_back(p.k_normalized, static_cast<double>(p.count_above));
  }
  return xy;
}

double pagerank_slope(const ChordGraph& g, const RunConfig& config) {
  RankVector p = pagerank(build_google(g, config.alpha), config.pagerank_tol);
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < p.by_rank().size(); ++i) {
    points.emplace_back(static_cast<double>(i + 1), p.by_rank()[i].score);
  }
  return fit_powerlaw(points, config.pagerank_window.first, config.pagerank_window.last).slope;
}

void criterion_4() {
  const std::string name = "corpus: Zipf, degree and PageRank exponents";
  if (!abc_or_skip(4, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(4, name);
  RunConfig config;

  FrequencyTable freq = frequency_table(ctx.loaded.corpus);
  const std::size_t zipf_last = std::min(config.zipf_window.last, freq.by_rank.size());
  const double gamma = -fit_powerlaw(zipf_table(freq), config.zipf_window.first, zipf_last).slope;
  c.expect_near(gamma, 1.6, 0.15, "Zipf tail exponent");

  const auto window = config.degree_window;
  for (Direction dir : {Direction::in, Direction::out}) {
    const char* dn = dir == Direction::in ? "in" : "out";
    const double s_major =
        fit_powerlaw(plottable_degree_points(ctx.graph_major(), dir), window.first, window.last)
            .slope;
    c.expect_near(s_major, -0.68, 0.05, std::string("major degree-") + dn + " slope");
    const double s_minor =
        fit_powerlaw(plottable_degree_points(ctx.graph_minor(), dir), window.first, window.last)
            .slope;
    c.expect_near(s_minor, -0.70, 0.05, std::string("minor degree-") + dn + " slope");
  }

  c.expect_near(pagerank_slope(ctx.graph_major(), config), -0.93, 0.05, "major PageRank slope");
  c.expect_near(pagerank_slope(ctx.graph_minor(), config), -0.94, 0.05, "minor PageRank slope");
  run(c, elapsed(start));
}

void criterion_5() {
  const std::string name = "corpus: best-of-100 Louvain modularities";
  if (!abc_or_skip(5, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(5, name);

  const double mu_major = ctx.modularity_of("major");
  const double mu_minor = ctx.modularity_of("minor");
  const double mu_early = ctx.modularity_of("early");
  const double mu_middle = ctx.modularity_of("middle");
  const double mu_late = ctx.modularity_of("late");

  const bool within =
      std::abs(mu_major - 0.2252) <= 0.01 && std::abs(mu_minor - 0.2572) <= 0.01 &&
      std::abs(mu_early - 0.2651) <= 0.01 && std::abs(mu_middle - 0.2607) <= 0.01 &&
      std::abs(mu_late - 0.2290) <= 0.01;
  const bool ordered = mu_early > mu_middle && mu_middle > mu_late;
  bool separated = true;
  for (const auto& period : {"early", "middle", "late"}) {
    const NullEnsembleStats& ns = ctx.null_for(period);
    separated = separated &&
                (ctx.modularity_of(period) - ns.mean >= 10.0 * std::max(ns.stddev, 1e-12));
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "major %.4f minor %.4f periods %.4f/%.4f/%.4f (within-tol %d ordered %d "
                "null-separated %d)",
                mu_major, mu_minor, mu_early, mu_middle, mu_late, within ? 1 : 0, ordered ? 1 : 0,
                separated ? 1 : 0);
  c.expect(within || (ordered && separated), buf);
  if (!within) {
    std::printf("        note: absolute modularities deviate from the published values; "
                "ordering + null separation carry the criterion\n");
  }
  run(c, elapsed(start));
}

void criterion_6() {
  const std::string name = "corpus: null-model modularity ensembles";
  if (!abc_or_skip(6, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(6, name);
  const std::map<std::string, double> expected = {
      {"early", 0.091}, {"middle", 0.126}, {"late", 0.094}};
  for (const auto& [period, want] : expected) {
    const NullEnsembleStats& ns = ctx.null_for(period);
    c.expect_near(ns.mean, want, ctx.null_tol, period + " null mean (ensemble " +
                                                   std::to_string(ctx.ensemble) + ")");
    const double real = ctx.modularity_of(period);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: real %.4f vs null %.4f +- %.4f (>= 10 std below)",
                  period.c_str(), real, ns.mean, ns.stddev);
    c.expect(real - ns.mean >= 10.0 * std::max(ns.stddev, 1e-12), buf);
  }
  run(c, elapsed(start));
}

void criterion_7() {
  const std::string name = "corpus: Google-matrix spectrum bounds";
  if (!abc_or_skip(7, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(7, name);
  for (const auto& [label, graph] :
       std::vector<std::pair<std::string, const ChordGraph*>>{{"major", &ctx.graph_major()},
                                                              {"minor", &ctx.graph_minor()}}) {
    Spectrum s = spectrum(build_google(*graph, 0.85));
    int ones = 0;
    int inside_half = 0;
    int non_unit = 0;
    bool bounded = true;
    for (const auto& ev : s.eigenvalues) {
      if (std::abs(ev - std::complex<double>(1, 0)) <= 1e-8) {
        ++ones;
        continue;
      }
      ++non_unit;
      if (std::abs(ev) > 0.85 + 1e-8) bounded = false;
      if (std::abs(ev) < 0.5) ++inside_half;
    }
    c.expect(ones == 1, label + ": exactly one unit eigenvalue");
    c.expect(bounded, label + ": all non-unit eigenvalues within radius alpha");
    if (label == "major") {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "major: %d/%d non-unit eigenvalues inside radius 0.5",
                    inside_half, non_unit);
      c.expect(inside_half * 10 >= non_unit * 9, buf);
    }
  }
  run(c, elapsed(start));
}

void criterion_8() {
  const std::string name = "corpus: stylometry pair harness and fidelity";
  if (!abc_or_skip(8, name)) return;
  auto start = std::chrono::steady_clock::now();
  AbcContext& ctx = AbcContext::instance();
  Criterion c(8, name);
  RunConfig config;

  const auto vectors_early = pair_vectors(ctx.loaded.corpus, "early", Mode::major, config.alpha,
                                          config.pagerank_tol);
  const auto vectors_middle = pair_vectors(ctx.loaded.corpus, "middle", Mode::major, config.alpha,
                                           config.pagerank_tol);
  const auto vectors_late = pair_vectors(ctx.loaded.corpus, "late", Mode::major, config.alpha,
                                         config.pagerank_tol);
  c.expect_eq(vectors_early.size(), std::size_t{15}, "early pair vectors");
  c.expect_eq(vectors_middle.size(), std::size_t{10}, "middle pair vectors");
  c.expect_eq(vectors_late.size(), std::size_t{10}, "late pair vectors");

  auto cells = period_comparison(ctx.loaded.corpus, Mode::major, Metric::fidelity, config.top_m,
                                 config.alpha, config.pagerank_tol);
  std::map<std::pair<std::string, std::string>, const ComparisonCell*> by_pair;
  for (const auto& cell : cells) by_pair[{cell.period_i, cell.period_j}] = &cell;

  auto cell = [&](const std::string& a, const std::string& b) -> const ComparisonCell* {
    auto it = by_pair.find({a, b});
    if (it == by_pair.end()) it = by_pair.find({b, a});
    return it == by_pair.end() ? nullptr : it->second;
  };

  const ComparisonCell* ee = cell("early", "early");
  const ComparisonCell* em = cell("early", "middle");
  const ComparisonCell* mm = cell("middle", "middle");
  const ComparisonCell* ll = cell("late", "late");
  const ComparisonCell* el = cell("early", "late");
  c.expect(ee != nullptr && em != nullptr && mm != nullptr && ll != nullptr && el != nullptr,
           "all period cells present");
  if (ee && em && mm && ll && el) {
    c.expect_eq(ee->values.size(), std::size_t{45}, "within-early admissible pairs");
    c.expect_eq(em->values.size(), std::size_t{150}, "early-middle pairs");
    c.expect_near(ee->mean, 0.955, 0.01, "within-early fidelity mean");
    c.expect_near(mm->mean, 0.955, 0.01, "within-middle fidelity mean");
    c.expect_near(ll->mean, 0.955, 0.01, "within-late fidelity mean");
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "cross early-late mean %.4f below within-early %.4f and within-late %.4f",
                  el->mean, ee->mean, ll->mean);
    c.expect(el->mean < ee->mean && el->mean < ll->mean, buf);
  }
  run(c, elapsed(start));
}

/* ---- criterion 9: self-contained property suite --------------------------- */

void criterion_9() {
  auto start = std::chrono::steady_clock::now();
  Criterion c(9, "properties: spectral, community and metric laws");

  {  // Column stochasticity, 100 random multigraphs, tol 1e-12.
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
      ChordGraph g = testgen::random_multigraph(seed);
      GoogleMatrix google = build_google(g, 0.85);
      for (Eigen::Index j = 0; j < google.matrix().cols(); ++j) {
        if (std::abs(google.matrix().col(j).sum() - 1.0) >= 1e-12) ok = false;
      }
    }
    c.expect(ok, "Google columns stochastic on 100 random multigraphs (1e-12)");
  }

  {  // PageRank fixed-point residual < 10 tol.
    bool ok = true;
    const double tol = 1e-12;
    for (std::uint64_t seed = 200; seed < 220 && ok; ++seed) {
      ChordGraph g = testgen::random_multigraph(seed);
      GoogleMatrix google = build_google(g, 0.85);
      RankVector p = pagerank(google, tol);
      Eigen::VectorXd x(static_cast<Eigen::Index>(g.vertex_count()));
      for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        x(static_cast<Eigen::Index>(i)) = p.score(g.labels()[i]);
      }
      if ((google.matrix() * x - x).lpNorm<1>() >= 10 * tol) ok = false;
    }
    c.expect(ok, "PageRank fixed-point residual < 10 tol");
  }

  {  // Conjugate closure of spectra.
    bool ok = true;
    for (std::uint64_t seed = 300; seed < 315 && ok; ++seed) {
      Spectrum s = spectrum(build_google(testgen::random_multigraph(seed, 25, 120), 0.85));
      for (const auto& ev : s.eigenvalues) {
        double best = 1e9;
        for (const auto& other : s.eigenvalues) {
          best = std::min(best, std::abs(other - std::conj(ev)));
        }
        if (best >= 1e-9) ok = false;
      }
    }
    c.expect(ok, "spectra closed under conjugation");
  }

  {  // Teleportation relation on N <= 30 instances: each non-unit lambda of
     // G satisfies sigma_min(S - (lambda/alpha) I) <= 1e-8 (backward error
     // of "is an eigenvalue of S").
    bool ok = true;
    for (std::uint64_t seed = 400; seed < 415 && ok; ++seed) {
      ChordGraph g = testgen::random_multigraph(seed, 30, 150);
      const double alpha = 0.85;
      Spectrum gs = spectrum(build_google(g, alpha));
      const auto n = static_cast<Eigen::Index>(g.vertex_count());
      Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        const std::int64_t out = g.out_degree(static_cast<int>(j));
        if (out == 0) {
          s.col(j).setConstant(std::complex<double>(1.0 / static_cast<double>(n), 0));
          continue;
        }
        for (const auto& [to, w] : g.out_edges(static_cast<int>(j))) {
          s(to, j) = std::complex<double>(static_cast<double>(w) / static_cast<double>(out), 0);
        }
      }
      for (const auto& ev : gs.eigenvalues) {
        if (std::abs(ev - std::complex<double>(1, 0)) <= 1e-8) continue;
        Eigen::MatrixXcd shifted = s - (ev / alpha) * Eigen::MatrixXcd::Identity(n, n);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
        if (svd.singularValues()(svd.singularValues().size() - 1) > 1e-8) ok = false;
      }
    }
    c.expect(ok, "lambda(G) = alpha lambda(S) on N <= 30 instances (1e-8)");
  }

  {  // Trivial-partition modularity is exactly zero.
    bool ok = true;
    for (std::uint64_t seed = 500; seed < 540 && ok; ++seed) {
      UndirectedGraph u = undirect(testgen::random_multigraph(seed));
      if (u.total_m <= 0) continue;
      if (modularity(u, std::vector<int>(u.vertex_count(), 0)) != 0.0) ok = false;
    }
    c.expect(ok, "one-community modularity == 0 exactly");
  }

  {  // Louvain attains the exhaustive maximum on <= 8-vertex fixtures.
    bool ok = true;
    int checked = 0;
    for (std::uint64_t seed = 600; checked < 10; ++seed) {
      ChordGraph g = testgen::random_multigraph(seed, 8, 24);
      if (g.vertex_count() > 8) continue;
      UndirectedGraph u = undirect(g);
      if (u.total_m <= 0) continue;
      ++checked;
      const double best = best_partition(u, 50, 0).modularity;
      if (std::abs(best - oracles::exhaustive_max_modularity(u)) > 1e-12) ok = false;
    }
    c.expect(ok, "Louvain best-of-50 attains exhaustive maxima (<= 8 vertices)");
  }

  {  // Configuration rewiring preserves degree multisets exactly.
    bool ok = true;
    for (std::uint64_t seed = 700; seed < 730 && ok; ++seed) {
      UndirectedGraph u = undirect(testgen::random_multigraph(seed));
      if (u.total_m <= 0) continue;
      UndirectedGraph r = configuration_rewire(u, seed);
      if (oracles::degree_multiset(r) != oracles::degree_multiset(u)) ok = false;
      for (std::size_t v = 0; v < u.vertex_count(); ++v) {
        if (r.degree[v] != u.degree[v]) ok = false;
      }
    }
    c.expect(ok, "configuration rewiring preserves degrees exactly");
  }

  {  // Fidelity laws.
    bool ok = true;
    Rng rng(42);
    for (int trial = 0; trial < 40 && ok; ++trial) {
      std::vector<RankEntry> pe;
      std::vector<RankEntry> qe;
      for (int i = 0; i < 10; ++i) {
        if (rng.next_double() < 0.8) pe.push_back({"l" + std::to_string(i), rng.next_double() + 0.01});
        if (rng.next_double() < 0.8) qe.push_back({"l" + std::to_string(i), rng.next_double() + 0.01});
      }
      if (pe.empty() || qe.empty()) continue;
      RankVector p(pe, Norm::l1);
      RankVector q(qe, Norm::l1);
      const double f = fidelity(p, q);
      if (f < 0.0 || f > 1.0) ok = false;
      if (std::abs(f - fidelity(q, p)) > 1e-12) ok = false;
      if (std::abs(fidelity(p, p) - 1.0) > 1e-12) ok = false;
      std::vector<RankEntry> scaled = pe;
      for (auto& e : scaled) e.score *= 13.7;
      if (std::abs(fidelity(RankVector(scaled, Norm::l1), q) - f) > 1e-12) ok = false;
    }
    c.expect(ok, "fidelity in [0,1], symmetric, scale-invariant");
  }

  {  // Similarity invariance under monotone transforms.
    bool ok = true;
    Rng rng(43);
    for (int trial = 0; trial < 40 && ok; ++trial) {
      std::vector<RankEntry> pe;
      std::vector<RankEntry> qe;
      for (int i = 0; i < 15; ++i) {
        pe.push_back({"l" + std::to_string(i), rng.next_double() + 0.001});
        qe.push_back({"l" + std::to_string(rng.bounded(25)), rng.next_double() + 0.001});
      }
      RankVector p(pe, Norm::l1);
      RankVector q(qe, Norm::l1);
      const int s = similarity(p, q, 6);
      if (s != similarity(q, p, 6)) ok = false;
      std::vector<RankEntry> transformed = pe;
      for (auto& e : transformed) e.score = std::exp(2.0 * e.score);
      if (similarity(RankVector(transformed, Norm::l1), q, 6) != s) ok = false;
    }
    c.expect(ok, "similarity symmetric and monotone-transform invariant");
  }

  {  // Edge-weight conservation over randomized corpora.
    bool ok = true;
    for (std::uint64_t seed = 800; seed < 850 && ok; ++seed) {
      Corpus corpus = testgen::random_corpus(seed);
      std::int64_t expected = 0;
      for (const auto& seg : corpus.segments()) {
        expected += static_cast<std::int64_t>(seg.events.size()) - 1;
      }
      if (build_graph(corpus).total_weight() != expected) ok = false;
    }
    c.expect(ok, "sum of weights == sum of (segment length - 1)");
  }

  const double t = elapsed(start);
  c.expect(t < 60.0, "runtime under 60 s");
  run(c, t);
}

/* ---- criterion 10: golden files ------------------------------------------- */

int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

void criterion_10() {
  auto start = std::chrono::steady_clock::now();
  Criterion c(10, "golden: mini-corpus outputs are byte-stable");

  const std::string cli = testutil::cli_path();
  const std::string golden = testutil::golden_dir();
  if (cli.empty() || !std::filesystem::exists(cli)) {
    skip(10, c.name(), "(set CHORDNET_CLI to the chordnet binary)");
    return;
  }

  testutil::TempDir tmp;
  const std::string common = " --config " + testutil::data_dir() + "/mini_config.json --input " +
                             testutil::data_dir() + "/mini_corpus.tsv";
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"export-graph" + common + " --mode major --out " + tmp.path(), ""},
      {"pagerank" + common + " --mode major --out " + tmp.path(), ""},
      {"communities" + common + " --mode major --restarts 25 --seed 0 --out " + tmp.path(), ""},
      {"compare-periods" + common + " --mode major --metric fidelity --out " + tmp.path(), ""},
      {"compare-periods" + common + " --mode major --metric similarity --out " + tmp.path(), ""},
  };
  for (const auto& [args, unused] : runs) {
    (void)unused;
    const int code = run_command(cli + " " + args + " >/dev/null 2>/dev/null");
    c.expect(code == 0, "command exited 0: " + args.substr(0, 40) + "...");
  }

  const std::vector<std::string> files = {
      "edges.tsv",          "vertices.csv",        "degree_in.csv",
      "degree_out.csv",     "pagerank.csv",        "communities.csv",
      "profiles.json",      "compare_fidelity.csv", "compare_fidelity.json",
      "compare_similarity.csv", "compare_similarity.json",
  };
  const bool update = std::getenv("CHORDNET_UPDATE_GOLDEN") != nullptr;
  for (const auto& name : files) {
    const std::string got_path = tmp.path(name);
    const std::string want_path = golden + "/" + name;
    if (update) {
      std::filesystem::create_directories(golden);
      std::filesystem::copy_file(got_path, want_path,
                                 std::filesystem::copy_options::overwrite_existing);
      c.expect(true, "updated " + name);
      continue;
    }
    if (!std::filesystem::exists(want_path)) {
      c.expect(false, "golden file missing: " + name);
      continue;
    }
    c.expect(testutil::read_file(got_path) == testutil::read_file(want_path),
             "byte-identical: " + name);
  }

  const double t = elapsed(start);
  c.expect(t < 10.0, "runtime under 10 s");
  run(c, t);
}

}  // namespace

int main() {
  std::printf("chordnet acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all executed criteria passed\n");
  return 0;
}
