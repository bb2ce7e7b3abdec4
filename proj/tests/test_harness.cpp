#include <cstdio>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "adhp/constructor.hpp"
#include "adhp/harness.hpp"

using namespace adhp;

namespace {

// Runs cli_main on a vector of arguments, capturing stdout.
int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::vector<char*> argv;
  args.insert(args.begin(), "adhp");
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream captured, errors;
  auto* old_out = std::cout.rdbuf(captured.rdbuf());
  auto* old_err = std::cerr.rdbuf(errors.rdbuf());
  int code = cli_main(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  if (out) *out = captured.str();
  return code;
}

std::string write_temp(const std::string& name, const std::string& payload) {
  std::string path = std::string("/tmp/adhp_test_") + name;
  std::ofstream(path) << payload;
  return path;
}

}  // namespace

TEST_CASE("parse_instance accepts plain text with comments") {
  Hypertournament h = parse_instance(
      "# three-cycle\n"
      "3 2\n"
      "\n"
      "1 2  # first pair\n"
      "2 3\n"
      "3 1\n");
  CHECK(h.n() == 3);
  CHECK(h.k() == 2);
  CHECK(h.arc(2).entries == std::vector<VertexId>{3, 1});
}

TEST_CASE("parse_instance round-trips format_instance") {
  Hypertournament h = random_hypertournament(6, 3, 11);
  Hypertournament back = parse_instance(format_instance(h));
  CHECK(back.n() == h.n());
  CHECK(back.k() == h.k());
  for (ArcId id = 0; id < h.arc_count(); ++id) {
    CHECK(back.arc(id).entries == h.arc(id).entries);
  }
}

TEST_CASE("parse_instance reports the offending line") {
  try {
    parse_instance("3 2\n1 2\n2 x\n3 1\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_instance("3 2 9\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance("# nothing\n"), Error);
  // Structural problems keep their construction kinds.
  try {
    parse_instance("3 2\n1 2\n2 3\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongArcCount);
  }
}

TEST_CASE("parse_instance accepts the JSON encoding") {
  Hypertournament h = parse_instance(
      R"({"n": 3, "k": 2, "arcs": [[1,2],[2,3],[3,1]]})");
  CHECK(h.n() == 3);
  CHECK(h.arc(1).entries == std::vector<VertexId>{2, 3});

  CHECK_THROWS_AS(parse_instance("{\"n\": 3"), Error);
  try {
    parse_instance(R"({"n": 3, "arcs": []})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("emit_path matches the path parser") {
  AntidirectedPath p;
  p.vertices = {2, 4, 3};
  p.arc_ids = {0, 2};
  p.orientations = {StepOrientation::Forward, StepOrientation::Backward};
  CHECK(emit_path(p) == "3\n2 4 3\n0 2\n");
  ParsedPath back = parse_path(emit_path(p));
  CHECK(back.vertices == p.vertices);
  CHECK(back.arc_ids == p.arc_ids);
}

TEST_CASE("run_campaign enumerates with byte-stable output") {
  CampaignConfig cfg;
  cfg.mode = CampaignMode::Enumerate;
  cfg.n = 3;
  cfg.k = 2;
  cfg.method = CampaignMethod::Both;
  cfg.include_elapsed = false;

  std::ostringstream first, second;
  EnumerationReport report = run_campaign(cfg, first);
  run_campaign(cfg, second);
  CHECK(first.str() == second.str());

  CHECK(report.total == 8);
  CHECK(report.with_adhp == 6);
  CHECK(report.failures == std::vector<std::uint64_t>{2, 5});
  CHECK(report.all_agree());

  // One NDJSON record per instance plus the summary line.
  int lines = 0;
  std::istringstream in(first.str());
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 9);
  CHECK(first.str().find("\"summary\":true") != std::string::npos);
  CHECK(first.str().find("\"exceptional\":\"t3c\"") != std::string::npos);
  CHECK(first.str().find("\"index\":0") != std::string::npos);
  CHECK(first.str().find("elapsed") == std::string::npos);
}

TEST_CASE("run_campaign samples consecutive seeds") {
  CampaignConfig cfg;
  cfg.mode = CampaignMode::Sample;
  cfg.n = 5;
  cfg.k = 3;
  cfg.seed = 40;
  cfg.sample_count = 5;
  cfg.method = CampaignMethod::Construct;
  cfg.include_elapsed = false;

  std::ostringstream out;
  EnumerationReport report = run_campaign(cfg, out);
  CHECK(report.total == 5);
  CHECK(report.all_agree());
  for (std::uint64_t seed = 40; seed < 45; ++seed) {
    CHECK(out.str().find("\"seed\":" + std::to_string(seed)) !=
          std::string::npos);
  }
  CHECK(out.str().find("\"oracle\"") == std::string::npos);
}

TEST_CASE("cli gen/solve/check round trip") {
  std::string inst;
  CHECK(run_cli({"gen", "-n", "6", "-k", "3", "--seed", "42"}, &inst) == 0);
  std::string inst_file = write_temp("inst.txt", inst);

  std::string path_text;
  CHECK(run_cli({"solve", inst_file}, &path_text) == 0);
  std::string path_file = write_temp("path.txt", path_text);

  std::string verdict;
  CHECK(run_cli({"check", inst_file, path_file}, &verdict) == 0);
  CHECK(verdict.find("valid") == 0);

  // Corrupting the path flips the exit code to 2.
  std::string broken = path_text;
  broken[broken.find('\n') + 1] = '9';
  std::string broken_file = write_temp("broken.txt", broken);
  CHECK(run_cli({"check", inst_file, broken_file}) == 2);

  std::remove(inst_file.c_str());
  std::remove(path_file.c_str());
  std::remove(broken_file.c_str());
}

TEST_CASE("cli solve exit codes") {
  std::string canon_text;
  CHECK(run_cli({"canon", "t3c"}, &canon_text) == 0);
  CHECK(canon_text == "3 2\n1 2\n2 3\n3 1\n");
  std::string t3_file = write_temp("t3c.txt", canon_text);

  std::string out;
  CHECK(run_cli({"solve", t3_file}, &out) == 2);
  CHECK(out.find("exceptional t3c") == 0);

  CHECK(run_cli({"solve", t3_file, "--method", "oracle"}, &out) == 2);
  CHECK(run_cli({"solve", t3_file, "--method", "both"}, &out) == 2);
  CHECK(run_cli({"solve", "/nonexistent/file"}) == 1);
  CHECK(run_cli({"canon", "t9c"}) == 1);
  CHECK(run_cli({"bogus-subcommand"}) == 1);

  std::string bad_file = write_temp("bad.txt", "3 2\n1 2\n");
  CHECK(run_cli({"solve", bad_file}) == 2);
  std::remove(bad_file.c_str());
  std::remove(t3_file.c_str());
}

TEST_CASE("cli enumerate campaign") {
  std::string out;
  CHECK(run_cli({"enumerate", "-n", "3", "-k", "2", "--no-elapsed"}, &out) == 0);
  CHECK(out.find("\"total\":8") != std::string::npos);
  // The guard caps runaway signatures with a usage error.
  CHECK(run_cli({"enumerate", "-n", "6", "-k", "3"}) == 1);
}

TEST_CASE("cli canon emits JSON on request") {
  std::string out;
  CHECK(run_cli({"canon", "h4", "--json"}, &out) == 0);
  Hypertournament h = parse_instance(out);
  CHECK(h.n() == 4);
  CHECK(h.k() == 3);
  CHECK(h.arc(1).entries == std::vector<VertexId>{4, 1, 2});
}
