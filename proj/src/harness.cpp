#include "adhp/harness.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "adhp/constructor.hpp"
#include "adhp/exceptions.hpp"

namespace adhp {

namespace {

using nlohmann::json;

std::vector<Arc> to_arcs(std::vector<std::vector<VertexId>> tuples) {
  std::vector<Arc> arcs;
  arcs.reserve(tuples.size());
  for (auto& t : tuples) {
    arcs.push_back(Arc{std::move(t)});
  }
  return arcs;
}

Hypertournament parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    auto arcs = j.at("arcs").get<std::vector<std::vector<VertexId>>>();
    return build_hypertournament(n, k, to_arcs(std::move(arcs)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

Hypertournament parse_instance(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_instance_json(text);
  }

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  int k = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      long long value = 0;
      std::size_t used = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": expected an integer, got '" +
                        token + "'");
      }
      values.push_back(value);
    }
    if (values.empty()) {
      continue;  // blank or comment-only line
    }
    if (!have_header) {
      if (values.size() != 2) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) +
                        ": header must be exactly 'n k'");
      }
      n = static_cast<int>(values[0]);
      k = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    arcs.push_back({std::vector<VertexId>(values.begin(), values.end())});
  }
  if (!have_header) {
    throw Error(ErrorKind::ParseError, "empty payload: missing 'n k' header");
  }
  return build_hypertournament(n, k, std::move(arcs));
}

std::string emit_path(const AntidirectedPath& path) { return format_path(path); }

namespace {

struct Assessment {
  InstanceOutcome outcome;
  bool diagnostic = false;
};

// Runs the configured method(s) on one instance and fills the NDJSON record.
// For Both, the oracle verdict is ground truth and agreement additionally
// requires the constructed path to validate.
Assessment assess(const Hypertournament& h, CampaignMethod method, json& rec) {
  Assessment a;
  auto witness = is_exceptional(h);
  rec["exceptional"] = witness ? json(exceptional_kind_name(witness->kind)) : json();

  bool run_oracle = method != CampaignMethod::Construct;
  bool run_ctor = method != CampaignMethod::Oracle;

  bool oracle_has = false;
  if (run_oracle) {
    SearchStats stats;
    auto found = find_adhp_exhaustive(h, SearchBudget::unlimited(), &stats);
    oracle_has = std::holds_alternative<AntidirectedPath>(found);
    rec["oracle"] = oracle_has ? "path" : "none";
    rec["oracle_nodes"] = stats.nodes;
  }

  bool ctor_has = false;
  bool ctor_bad = false;
  if (run_ctor) {
    SolveResult res = find_adhp(h);
    if (auto* pw = std::get_if<PathWithTrace>(&res)) {
      ctor_has = true;
      auto checked = validate_adp(h, pw->path.vertices, pw->path.arc_ids);
      bool valid = std::holds_alternative<AntidirectedPath>(checked) &&
                   is_hamiltonian(h, pw->path);
      rec["constructor"] = valid ? "path" : "invalid-path";
      rec["steps"] = pw->path.length();
      ctor_bad = !valid;
    } else if (std::holds_alternative<ExceptionalWitness>(res)) {
      rec["constructor"] = "exceptional";
    } else {
      const auto& gap = std::get<ProofGapDiagnostic>(res);
      rec["constructor"] = "diagnostic";
      rec["diagnostic_where"] = gap.where;
      a.diagnostic = true;
      ctor_bad = true;
    }
  }

  if (run_oracle && run_ctor) {
    a.outcome.has_adhp = oracle_has;
    a.outcome.agree = !ctor_bad && oracle_has == ctor_has;
  } else if (run_ctor) {
    a.outcome.has_adhp = ctor_has;
    a.outcome.agree = !ctor_bad;
  } else {
    a.outcome.has_adhp = oracle_has;
    a.outcome.agree = true;
  }
  rec["agree"] = a.outcome.agree;
  return a;
}

}  // namespace

EnumerationReport run_campaign(const CampaignConfig& cfg, std::ostream& out) {
  EnumerationReport report;
  std::uint64_t diagnostics = 0;
  auto process = [&](const char* key, std::uint64_t id, const Hypertournament& h) {
    json rec;
    rec[key] = id;
    auto start = std::chrono::steady_clock::now();
    Assessment a = assess(h, cfg.method, rec);
    if (cfg.include_elapsed) {
      auto elapsed = std::chrono::steady_clock::now() - start;
      rec["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << rec.dump() << "\n";
    ++report.total;
    if (a.outcome.has_adhp) {
      ++report.with_adhp;
    } else {
      report.failures.push_back(id);
    }
    if (!a.outcome.agree) {
      report.disagreements.push_back(id);
    }
    if (a.diagnostic) {
      ++diagnostics;
    }
  };

  if (cfg.mode == CampaignMode::Enumerate) {
    for_each_labeled(
        cfg.n, cfg.k,
        [&](std::uint64_t index, const Hypertournament& h) {
          process("index", index, h);
          return true;
        },
        cfg.cap);
  } else {
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      std::uint64_t seed = cfg.seed + i;
      process("seed", seed, random_hypertournament(cfg.n, cfg.k, seed));
    }
  }

  json summary;
  summary["summary"] = true;
  summary["total"] = report.total;
  summary["with_adhp"] = report.with_adhp;
  summary["failures"] = report.failures;
  summary["disagreements"] = report.disagreements;
  summary["diagnostics"] = diagnostics;
  out << summary.dump() << "\n";
  return report;
}

namespace {

std::string read_payload(const std::string& file) {
  if (file == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + file + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_payload(const std::string& file, const std::string& payload) {
  if (file.empty() || file == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + file + "' for writing");
  }
  out << payload;
}

std::string instance_json(const Hypertournament& h) {
  json j;
  j["n"] = h.n();
  j["k"] = h.k();
  std::vector<std::vector<VertexId>> arcs;
  arcs.reserve(static_cast<std::size_t>(h.arc_count()));
  for (ArcId id = 0; id < h.arc_count(); ++id) {
    const auto& e = h.arc(id).entries;
    arcs.emplace_back(e.begin(), e.end());
  }
  j["arcs"] = arcs;
  return j.dump() + "\n";
}

json trace_entry_json(const TraceEntry& entry) {
  json facts = json::array();
  for (const TraceFact& f : entry.facts) {
    facts.push_back({{"arc", f.arc}, {"x", f.x}, {"y", f.y}});
  }
  json j;
  j["tag"] = entry.tag;
  j["facts"] = facts;
  if (!entry.note.empty()) {
    j["note"] = entry.note;
  }
  return j;
}

void print_trace(const CaseTrace& trace, std::ostream& out) {
  for (const TraceEntry& entry : trace) {
    out << trace_entry_json(entry).dump() << "\n";
  }
}

void print_witness(const ExceptionalWitness& w, std::ostream& out) {
  out << "exceptional " << exceptional_kind_name(w.kind) << "\n";
  out << "canonical labels:";
  for (std::size_t v = 1; v < w.iso.size(); ++v) {
    out << " " << w.iso[v];
  }
  out << "\n";
}

CampaignMethod parse_method(const std::string& name) {
  if (name == "construct") return CampaignMethod::Construct;
  if (name == "oracle") return CampaignMethod::Oracle;
  return CampaignMethod::Both;
}

int do_gen(int n, int k, std::uint64_t seed, const std::string& out_file,
           bool as_json) {
  Hypertournament h = random_hypertournament(n, k, seed);
  write_payload(out_file, as_json ? instance_json(h) : format_instance(h));
  return 0;
}

int do_canon(const std::string& name, bool as_json) {
  ExceptionalKind kind;
  if (name == "t3c") {
    kind = ExceptionalKind::T3c;
  } else if (name == "t5c") {
    kind = ExceptionalKind::T5c;
  } else if (name == "t7c") {
    kind = ExceptionalKind::T7c;
  } else if (name == "h4") {
    kind = ExceptionalKind::H4;
  } else {
    std::cerr << "error: unknown structure '" << name
              << "' (expected t3c, t5c, t7c, or h4)\n";
    return 1;
  }
  Hypertournament h = canonical(kind);
  write_payload("", as_json ? instance_json(h) : format_instance(h));
  return 0;
}

int do_solve(const std::string& file, const std::string& method, bool trace) {
  Hypertournament h = parse_instance(read_payload(file));
  CampaignMethod m = parse_method(method);

  std::optional<bool> oracle_has;
  if (m != CampaignMethod::Construct) {
    SearchStats stats;
    auto found = find_adhp_exhaustive(h, SearchBudget::unlimited(), &stats);
    oracle_has = std::holds_alternative<AntidirectedPath>(found);
    if (m == CampaignMethod::Oracle) {
      if (*oracle_has) {
        std::cout << emit_path(std::get<AntidirectedPath>(found));
        return 0;
      }
      std::cout << "no antidirected hamiltonian path (search exhausted, "
                << stats.nodes << " nodes)\n";
      return 2;
    }
  }

  SolveResult res = find_adhp(h);
  if (auto* pw = std::get_if<PathWithTrace>(&res)) {
    if (trace) {
      print_trace(pw->trace, std::cerr);
    }
    if (oracle_has && !*oracle_has) {
      std::cerr << "disagreement: constructor produced a path, search found none\n";
      return 3;
    }
    std::cout << emit_path(pw->path);
    return 0;
  }
  if (auto* w = std::get_if<ExceptionalWitness>(&res)) {
    if (oracle_has && *oracle_has) {
      std::cerr << "disagreement: instance flagged exceptional, search found a path\n";
      return 3;
    }
    print_witness(*w, std::cout);
    return 2;
  }
  const auto& gap = std::get<ProofGapDiagnostic>(res);
  std::cerr << "diagnostic at " << gap.where << ": " << gap.detail << "\n";
  if (!gap.instance_text.empty()) {
    std::cerr << gap.instance_text;
  }
  return 3;
}

int do_check(const std::string& instance_file, const std::string& path_file) {
  Hypertournament h = parse_instance(read_payload(instance_file));
  ParsedPath parsed = parse_path(read_payload(path_file));
  auto checked = validate_adp(h, parsed.vertices, parsed.arc_ids);
  if (auto* v = std::get_if<Violation>(&checked)) {
    std::cout << "invalid: " << violation_kind_name(v->kind) << ": " << v->reason
              << "\n";
    return 2;
  }
  const auto& path = std::get<AntidirectedPath>(checked);
  if (!is_hamiltonian(h, path)) {
    std::cout << "invalid: path does not visit every vertex\n";
    return 2;
  }
  std::cout << "valid antidirected hamiltonian path, " << path.length()
            << " steps\n";
  return 0;
}

int campaign_exit(const EnumerationReport& report) {
  return report.disagreements.empty() ? 0 : 3;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"antidirected hamiltonian paths in k-hypertournaments"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  int gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  bool gen_json = false;
  gen->add_option("-n", gen_n, "vertex count")->required();
  gen->add_option("-k", gen_k, "arc arity")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_flag("--json", gen_json, "emit JSON instead of plain text");

  auto* solve = app.add_subcommand("solve", "find an antidirected hamiltonian path");
  std::string solve_file;
  std::string solve_method = "construct";
  bool solve_trace = false;
  solve->add_option("file", solve_file, "instance file ('-' for stdin)")->required();
  solve->add_option("--method", solve_method, "construct, oracle, or both")
      ->check(CLI::IsMember({"construct", "oracle", "both"}));
  solve->add_flag("--trace", solve_trace,
                  "print the construction audit trail as NDJSON on stderr");

  auto* check = app.add_subcommand("check", "validate a path file against an instance");
  std::string check_instance, check_path;
  check->add_option("file", check_instance, "instance file")->required();
  check->add_option("pathfile", check_path, "path file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "sweep every labeled instance");
  int enum_n = 0, enum_k = 0;
  std::string enum_method = "both";
  std::uint64_t enum_cap = 0;
  bool enum_no_elapsed = false;
  enumerate->add_option("-n", enum_n, "vertex count")->required();
  enumerate->add_option("-k", enum_k, "arc arity")->required();
  enumerate->add_option("--method", enum_method, "construct, oracle, or both")
      ->check(CLI::IsMember({"construct", "oracle", "both"}));
  enumerate->add_option("--cap", enum_cap, "override the instance-count guard");
  enumerate->add_flag("--no-elapsed", enum_no_elapsed,
                      "omit elapsed_ms for byte-stable output");

  auto* sample = app.add_subcommand("sample", "run seeded random instances");
  int sample_n = 0, sample_k = 0;
  std::uint64_t sample_seed = 0, sample_count = 0;
  std::string sample_method = "construct";
  bool sample_no_elapsed = false;
  sample->add_option("-n", sample_n, "vertex count")->required();
  sample->add_option("-k", sample_k, "arc arity")->required();
  sample->add_option("--seed", sample_seed, "base seed (instance i uses seed+i)")
      ->required();
  sample->add_option("--count", sample_count, "number of instances")->required();
  sample->add_option("--method", sample_method, "construct, oracle, or both")
      ->check(CLI::IsMember({"construct", "oracle", "both"}));
  sample->add_flag("--no-elapsed", sample_no_elapsed,
                   "omit elapsed_ms for byte-stable output");

  auto* canon = app.add_subcommand("canon", "print one of the four exceptional structures");
  std::string canon_kind;
  bool canon_json = false;
  canon->add_option("kind", canon_kind, "t3c, t5c, t7c, or h4")->required();
  canon->add_flag("--json", canon_json, "emit JSON instead of plain text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      return do_gen(gen_n, gen_k, gen_seed, gen_out, gen_json);
    }
    if (solve->parsed()) {
      return do_solve(solve_file, solve_method, solve_trace);
    }
    if (check->parsed()) {
      return do_check(check_instance, check_path);
    }
    if (enumerate->parsed() || sample->parsed()) {
      CampaignConfig cfg;
      if (enumerate->parsed()) {
        cfg.mode = CampaignMode::Enumerate;
        cfg.n = enum_n;
        cfg.k = enum_k;
        cfg.method = parse_method(enum_method);
        if (enum_cap != 0) {
          cfg.cap = enum_cap;
        }
        cfg.include_elapsed = !enum_no_elapsed;
      } else {
        cfg.mode = CampaignMode::Sample;
        cfg.n = sample_n;
        cfg.k = sample_k;
        cfg.seed = sample_seed;
        cfg.sample_count = sample_count;
        cfg.method = parse_method(sample_method);
        cfg.include_elapsed = !sample_no_elapsed;
      }
      return campaign_exit(run_campaign(cfg, std::cout));
    }
    if (canon->parsed()) {
      return do_canon(canon_kind, canon_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapExceeded:
      case ErrorKind::BudgetRequired:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace adhp
