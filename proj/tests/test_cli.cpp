#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "testutil.hpp"

using testutil::TempDir;

namespace {

std::string mini_tsv() { return testutil::data_dir() + "/mini_corpus.tsv"; }
std::string mini_cfg() { return testutil::data_dir() + "/mini_config.json"; }

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null",
            const std::string& stderr_path = "/dev/null") {
  const std::string cli = testutil::cli_path();
  REQUIRE_FALSE(cli.empty());
  const std::string command = cli + " " + args + " >" + stdout_path + " 2>" + stderr_path;
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string common() {
  return "--config " + mini_cfg() + " --input " + mini_tsv();
}

}  // namespace

TEST_CASE("validate reports the corpus summary and exits zero") {
  TempDir tmp;
  const int code = run_cli("validate " + common() + " --out " + tmp.path(),
                           tmp.path("stdout.json"));
  CHECK(code == 0);
  REQUIRE(std::filesystem::exists(tmp.path("summary.json")));
  REQUIRE(std::filesystem::exists(tmp.path("cleaning_report.jsonl")));

  auto summary = nlohmann::json::parse(testutil::read_file(tmp.path("summary.json")));
  CHECK(summary["entries"] == 194);
  CHECK(summary["segments"] == 25);
  CHECK(summary["segments_major"] == 15);
  CHECK(summary["segments_minor"] == 10);
  CHECK(summary["chords_major"] == 119);
  CHECK(summary["chords_minor"] == 75);
  CHECK(summary["distinct_major"] == 18);
  CHECK(summary["distinct_minor"] == 16);
  CHECK(summary["substitutions"] == 4);

  // Every report line carries file/line provenance.
  const std::string report = testutil::read_file(tmp.path("cleaning_report.jsonl"));
  CHECK(report.find("\"line\": ") != std::string::npos);
  CHECK(report.find("mini_corpus.tsv") != std::string::npos);
}

TEST_CASE("validate without an input exits with the config code") {
  CHECK(run_cli("validate --config " + mini_cfg()) == 1);
}

TEST_CASE("validate on a missing file exits with the user-error code") {
  CHECK(run_cli("validate --input /no/such/file.tsv") == 1);
}

TEST_CASE("validate on a header-only file exits with the data code") {
  TempDir tmp;
  const std::string path = tmp.file(
      "empty.tsv", "key_ref\top\tno\tnumeral\tlocal_key\tphraseend\n");
  CHECK(run_cli("validate --input " + path) == 2);
}

TEST_CASE("graph subcommands require a mode") {
  CHECK(run_cli("pagerank " + common()) == 1);
  CHECK(run_cli("export-graph " + common() + " --out /tmp") == 1);
}

TEST_CASE("filtering to an empty sub-corpus is a data error") {
  CHECK(run_cli("pagerank " + common() + " --mode major --period nonexistent") == 2);
}

TEST_CASE("export-graph writes the edge and vertex tables") {
  TempDir tmp;
  const int code = run_cli("export-graph " + common() + " --mode major --out " + tmp.path());
  CHECK(code == 0);
  const std::string edges = testutil::read_file(tmp.path("edges.tsv"));
  CHECK(edges.rfind("source\ttarget\tweight\n", 0) == 0);
  const std::string vertices = testutil::read_file(tmp.path("vertices.csv"));
  CHECK(vertices.rfind("label,in_degree,out_degree\n", 0) == 0);
  CHECK(std::filesystem::exists(tmp.path("degree_in.csv")));
  CHECK(std::filesystem::exists(tmp.path("degree_out.csv")));
}

TEST_CASE("pagerank output is deterministic across runs") {
  TempDir tmp;
  REQUIRE(run_cli("pagerank " + common() + " --mode major", tmp.path("a.csv")) == 0);
  REQUIRE(run_cli("pagerank " + common() + " --mode major", tmp.path("b.csv")) == 0);
  const std::string a = testutil::read_file(tmp.path("a.csv"));
  CHECK(a == testutil::read_file(tmp.path("b.csv")));
  CHECK(a.rfind("label,score,rank\n", 0) == 0);
}

TEST_CASE("spectrum and fit emit machine-readable output") {
  TempDir tmp;
  REQUIRE(run_cli("spectrum " + common() + " --mode minor", tmp.path("spectrum.csv")) == 0);
  CHECK(testutil::read_file(tmp.path("spectrum.csv")).rfind("re,im,modulus\n", 0) == 0);

  REQUIRE(run_cli("fit " + common() + " --series zipf --fit-window 1:10", tmp.path("fit.json")) ==
          0);
  auto fit = nlohmann::json::parse(testutil::read_file(tmp.path("fit.json")));
  CHECK(fit.contains("slope"));
  CHECK(fit["range"][0] == 1);
  CHECK(fit["range"][1] == 10);

  REQUIRE(run_cli("fit " + common() + " --mode major --series degree-out --fit-window 1:5",
                  tmp.path("fit2.json")) == 0);
  CHECK(nlohmann::json::parse(testutil::read_file(tmp.path("fit2.json"))).contains("slope"));
}

TEST_CASE("communities and null-stats run end to end") {
  TempDir tmp;
  REQUIRE(run_cli("communities " + common() + " --mode major --restarts 5 --out " + tmp.path()) ==
          0);
  CHECK(std::filesystem::exists(tmp.path("communities.csv")));
  CHECK(std::filesystem::exists(tmp.path("profiles.json")));

  REQUIRE(run_cli("null-stats " + common() +
                      " --mode major --ensemble 4 --restarts 2 --seed 7",
                  tmp.path("null.json")) == 0);
  auto null_stats = nlohmann::json::parse(testutil::read_file(tmp.path("null.json")));
  CHECK(null_stats["ensemble"] == 4);
  CHECK(null_stats["mean"].get<double>() > 0.0);
}

TEST_CASE("compare-periods writes the long-format table and summary") {
  TempDir tmp;
  REQUIRE(run_cli("compare-periods " + common() + " --mode major --metric similarity --top-m 5" +
                      " --out " + tmp.path()) == 0);
  const std::string csv = testutil::read_file(tmp.path("compare_similarity.csv"));
  CHECK(csv.rfind("period_i,period_j,quartets_a,quartets_b,metric,value,density\n", 0) == 0);
  auto summary = nlohmann::json::parse(testutil::read_file(tmp.path("compare_similarity.json")));
  CHECK(summary["metric"] == "similarity");
  CHECK(summary["cells"].size() == 3);
}

TEST_CASE("the config path can come from the environment") {
  TempDir tmp;
  const std::string cli = testutil::cli_path();
  const std::string command = "CHORDNET_CONFIG=" + mini_cfg() + " " + cli +
                              " validate --input " + mini_tsv() + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("report re-runs are byte-identical") {
  TempDir tmp;
  const std::string flags = " --restarts 4 --ensemble 3 --seed 1 --out ";
  REQUIRE(run_cli("report " + common() + flags + tmp.path("a")) == 0);
  REQUIRE(run_cli("report " + common() + flags + tmp.path("b")) == 0);
  for (const char* name : {"manifest.json", "major/global/pagerank.csv",
                           "major/global/communities.csv", "major/global/null_stats.json",
                           "major/compare_fidelity.csv", "stats/frequencies_all.csv"}) {
    CHECK_MESSAGE(testutil::read_file(tmp.path(std::string("a/") + name)) ==
                      testutil::read_file(tmp.path(std::string("b/") + name)),
                  name);
  }
}

TEST_CASE("report restricted to one mode omits the other") {
  TempDir tmp;
  REQUIRE(run_cli("report " + common() + " --mode minor --restarts 3 --ensemble 2 --out " +
                  tmp.path("out")) == 0);
  CHECK(std::filesystem::exists(tmp.path("out/manifest.json")));
  CHECK(std::filesystem::exists(tmp.path("out/minor/global/pagerank.csv")));
  CHECK_FALSE(std::filesystem::exists(tmp.path("out/major")));
}
