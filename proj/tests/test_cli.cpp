#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hampath_cli.hpp"

namespace fs = std::filesystem;
using hampath::cli::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

// In-process.
Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = hampath::cli::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Through the installed binary, to pin the real exit status.
Run exec(const std::string& args, const std::string& env = "") {
  Run r;
  std::string cmd = env + " '" HAMPATH_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("hampath_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

json without_stats(json j) {
  j.erase("stats");
  return j;
}

}  // namespace

TEST_CASE("construct emits graph6 and edge lists", "[cli]") {
  auto r = call({"construct", "petersen"});
  CHECK(r.code == 0);
  CHECK(r.out == "IheA@GUAo\n");

  r = call({"construct", "gamma", "9", "--format", "graph6"});
  CHECK(r.code == 0);
  CHECK(hampath::parse_graph6(r.out) == hampath::gamma(9));

  r = call({"construct", "figure1", "3", "5", "--format", "edgelist"});
  CHECK(r.code == 0);
  CHECK(hampath::parse_edge_list(r.out) == hampath::figure1(3, 5));

  TempDir tmp;
  auto base = tmp.file("p.g6", "IheA@GUAo\n");
  r = call({"construct", "gk", base, "1", "--out", tmp.path("g1.g6"), "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  std::ifstream in(tmp.path("g1.g6"));
  std::string line;
  std::getline(in, line);
  hampath::Graph g1 = hampath::parse_graph6(line);
  CHECK(g1.order() == 15);
  CHECK(g1.size() == 25);

  auto m = tmp.file("m.txt", "0 5\n1 6\n2 7\n3 8\n4 9\n");
  r = call({"construct", "gk", base, "2", "--matching", m});
  CHECK(r.code == 0);
  CHECK(hampath::parse_graph6(r.out).order() == 20);
}

TEST_CASE("construct rejects bad arguments", "[cli]") {
  CHECK(call({"construct", "gamma", "4"}).code == 2);
  CHECK(call({"construct", "gamma"}).code == 2);
  CHECK(call({"construct", "gamma", "x"}).code == 2);
  CHECK(call({"construct", "cube"}).code == 2);
  CHECK(call({"construct", "petersen", "--format", "dot"}).code == 2);
  CHECK(call({"construct", "gk", "/nonexistent/file", "1"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("analyze reports the classification", "[cli]") {
  TempDir tmp;
  auto p = tmp.file("petersen.g6", "IheA@GUAo\n");
  auto r = call({"analyze", "--in", p, "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["hamiltonian"] == false);
  CHECK(j["homogeneously_traceable"] == true);
  CHECK(j["hypohamiltonian"] == true);
  CHECK(j["pair_strung_count"] == 30);
  CHECK(j["pair_connected_ratio"]["exact"] == "2/3");
  CHECK(hampath::Ratio::parse(j["pair_connected_ratio"]["exact"].get<std::string>()) == hampath::Ratio(2, 3));
  CHECK(j["pair_connected_ratio"]["decimal"].get<double>() == Catch::Approx(2.0 / 3.0));
  CHECK(j["stats"].contains("wall_ms"));
  CHECK(j["stats"]["engine"] == "dp");

  auto bt = call({"analyze", "--in", p, "--json", "--engine", "backtrack"});
  REQUIRE(bt.code == 0);
  json jb = json::parse(bt.out);
  CHECK(jb["stats"]["engine"] == "backtrack");
  CHECK(without_stats(jb) == without_stats(j));

  auto text = call({"analyze", "--in", p});
  CHECK(text.code == 0);
  CHECK(text.out.find("pair-strung count: 30 of 45") != std::string::npos);

  auto e = tmp.file("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  j = json::parse(call({"--json", "analyze", "--in", e}).out);
  CHECK(j["hamiltonian_connected"] == true);
  CHECK(j["pair_connected_ratio"]["exact"] == "1/1");

  auto h = call({"analyze", "--in", p, "--json", "--hpc"});
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["hpc"]["size"] == 5);
}

TEST_CASE("analyze input errors exit 2", "[cli]") {
  TempDir tmp;
  CHECK(call({"analyze", "--in", tmp.path("missing.g6")}).code == 2);
  CHECK(call({"analyze", "--in", tmp.file("bad.g6", "Bx\n")}).code == 2);
  CHECK(call({"analyze", "--in", tmp.file("bad.txt", "3 2\n0 1\n")}).code == 2);
  CHECK(call({"analyze", "--in", tmp.file("k2.g6", "A_\n")}).code == 2);
  CHECK(call({"analyze"}).code == 2);
  CHECK(call({"analyze", "--in", tmp.file("p.g6", "IheA@GUAo"), "--engine", "magic"}).code == 2);
}

TEST_CASE("hpc verify and search", "[cli]") {
  TempDir tmp;
  auto p = tmp.file("p.g6", "IheA@GUAo\n");
  auto matching = tmp.file("m.txt", "0 5\n1 6\n2 7\n3 8\n4 9\n");
  auto touching = tmp.file("t.txt", "0 1\n1 2\n");
  auto seven = tmp.file("s.txt", "0 1\n0 4\n1 2\n3 8\n5 7\n6 9\n7 9\n");
  auto bogus = tmp.file("b.txt", "0 2\n1 6\n");

  auto r = call({"hpc", "verify", "--in", p, "--edges", matching, "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["hpath_connected"] == true);
  CHECK(j["witnesses"].size() == 10);
  CHECK(j["rule"] == "avoid-end-edges");

  r = call({"hpc", "verify", "--in", p, "--edges", touching, "--json"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["failing_pair"] == json::array({0, 1}));

  CHECK(call({"hpc", "verify", "--in", p, "--edges", seven}).code == 1);
  CHECK(call({"hpc", "verify", "--in", p, "--edges", seven, "--allow-end-edges"}).code == 0);
  CHECK(call({"hpc", "verify", "--in", p, "--edges", bogus}).code == 2);
  CHECK(call({"hpc", "verify", "--in", p}).code == 2);

  r = call({"hpc", "search", "--in", p, "--json"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["status"] == "exhaustive");
  CHECK(j["size"] == 5);

  r = call({"hpc", "search", "--in", p, "--size", "6", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "none");

  r = call({"hpc", "search", "--in", p, "--budget", "10", "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "inconclusive");

  CHECK(call({"hpc", "search", "--in", p, "--budget", "0"}).code == 2);
  CHECK(call({"hpc", "search", "--in", p, "--size", "1"}).code == 2);
  CHECK(call({"hpc"}).code == 2);
}

TEST_CASE("verify subcommands", "[cli]") {
  CHECK(call({"verify", "gamma-hc", "--max-n", "9"}).code == 0);
  CHECK(call({"verify", "theorem2", "--samples", "40", "--seed", "5"}).code == 0);
  // The closed form disagrees with measured pair counts at k = 1.
  auto pk = call({"verify", "pk-formula", "--max-k", "1", "--json"});
  CHECK(pk.code == 1);
  json j = json::parse(pk.out);
  CHECK(j["rows"][0]["equal"] == true);
  CHECK(j["rows"][1]["equal"] == false);
  CHECK(j["rows"][1]["measured"]["exact"] == "2/3");
  CHECK(j["rows"][1]["lower_bound_holds"] == true);
  CHECK(j["rows"][1]["clique_pairs_connected"] == true);
  CHECK(j["formula_argmax_1_50"] == 8);
  CHECK(call({"verify", "pk-formula", "--max-k", "0"}).code == 0);

  TempDir tmp;
  CHECK(call({"verify", "moon", "--in", tmp.file("g.g6", hampath::to_graph6(hampath::gamma(6)))}).code == 0);
  CHECK(call({"verify", "moon", "--in", tmp.file("c.g6", hampath::to_graph6(hampath::cycle_graph(6)))}).code == 0);
  CHECK(call({"verify", "gamma-hc"}).code == 2);
  CHECK(call({"verify", "bogus"}).code == 2);
}

TEST_CASE("binary exit codes", "[cli][process]") {
  TempDir tmp;
  auto p = tmp.file("p.g6", "IheA@GUAo\n");
  CHECK(exec("construct petersen").code == 0);
  CHECK(exec("construct petersen").out == "IheA@GUAo\n");
  CHECK(exec("verify gamma-hc --max-n 6").code == 0);
  CHECK(exec("verify pk-formula --max-k 1 --quiet").code == 1);
  CHECK(exec("analyze --in " + tmp.path("none")).code == 2);
  CHECK(exec("--threads 0 analyze --in " + p).code == 2);
  CHECK(exec("nonsense").code == 2);
}

TEST_CASE("thread count leaves JSON unchanged", "[cli][process]") {
  TempDir tmp;
  auto p = tmp.file("p.g6", "IheA@GUAo\n");
  auto g = tmp.file("g.g6", hampath::to_graph6(hampath::gamma(6)) + "\n");
  const std::vector<std::string> commands{
      "analyze --in " + p + " --json",
      "analyze --in " + g + " --json",
      "verify gamma-hc --max-n 9 --json",
      "verify theorem2 --samples 60 --seed 9 --json",
      "verify pk-formula --max-k 1 --json --quiet",
  };
  for (const auto& c : commands) {
    INFO(c);
    Run one = exec("--threads 1 " + c);
    Run eight = exec("--threads 8 " + c);
    Run env = exec(c, "HAMPATH_THREADS=8");
    REQUIRE(one.code == eight.code);
    json a = json::parse(one.out);
    json b = json::parse(eight.out);
    json e = json::parse(env.out);
    CHECK(b["stats"]["threads"] == 8);
    CHECK(e["stats"]["threads"] == 8);
    CHECK(without_stats(a).dump() == without_stats(b).dump());
    CHECK(without_stats(a).dump() == without_stats(e).dump());
  }
}
