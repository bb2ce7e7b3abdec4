#pragma once

// File formats, verification campaigns, and the command-line surface.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "adhp/adpath.hpp"
#include "adhp/core.hpp"
#include "adhp/oracle.hpp"

namespace adhp {

// Accepts two encodings.  Plain text: the first content line holds "n k",
// followed by exactly C(n,k) lines of k vertex labels each, one arc per line
// in precedence order; '#' starts a comment and blank lines are skipped.
// JSON (payload whose first non-space byte is '{'):
//   {"n": 4, "k": 3, "arcs": [[2,3,4], ...]}
// Malformed input throws ParseError naming the offending line; structural
// problems surface as the usual construction errors.
Hypertournament parse_instance(const std::string& text);

// Path payload: step count, vertex sequence, 0-based arc ids, one group per
// line.  Inverse of parse_path.
std::string emit_path(const AntidirectedPath& path);

enum class CampaignMode { Enumerate, Sample };
enum class CampaignMethod { Construct, Oracle, Both };

struct CampaignConfig {
  CampaignMode mode = CampaignMode::Enumerate;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;          // Sample mode: instance i uses seed + i.
  std::uint64_t sample_count = 0;  // Sample mode: number of instances.
  CampaignMethod method = CampaignMethod::Both;
  std::optional<std::uint64_t> cap;  // Enumerate mode: labeled-count guard.
  bool include_elapsed = true;  // Drop elapsed_ms for byte-stable output.
};

// Runs each instance through the configured method(s) and streams one NDJSON
// record per instance (keyed "index" when enumerating, "seed" when sampling)
// followed by a summary record.  A record carries the exceptional kind when
// the instance is a forbidden structure, each method's verdict, the agreement
// flag, and search node counts.  Instances are processed in order on a single
// thread, so output for a fixed config is reproducible byte for byte apart
// from the elapsed_ms field.  Failure and disagreement lists in the returned
// report hold indices or seeds to match the records.
EnumerationReport run_campaign(const CampaignConfig& cfg, std::ostream& out);

// Command-line entry point.  Subcommands: gen, solve, check, enumerate,
// sample, canon.  Exit codes: 0 success; 1 usage or I/O trouble; 2 invalid
// input or an instance with no antidirected hamiltonian path; 3 method
// disagreement or an internal construction diagnostic.
int cli_main(int argc, char** argv);

}  // namespace adhp
