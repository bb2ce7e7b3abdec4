#pragma once

// Constructive solver: produces an antidirected hamiltonian path for every
// instance with 2 <= k <= n-1 that is not one of the four exceptional
// structures, by explicit local constructions plus recursion on smaller
// instances.  Each decision is logged as a trace of membership facts that can
// be re-checked against the input.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adhp/adpath.hpp"
#include "adhp/core.hpp"
#include "adhp/exceptions.hpp"

namespace adhp {

// One precedence assertion: the arc places x before y.
struct TraceFact {
  ArcId arc = -1;
  VertexId x = 0;
  VertexId y = 0;
};

struct TraceEntry {
  std::string tag;               // which construction fired
  std::vector<TraceFact> facts;  // memberships that justified it
  std::string note;
};

using CaseTrace = std::vector<TraceEntry>;

struct PathWithTrace {
  AntidirectedPath path;
  CaseTrace trace;
};

// Honest failure channel: the solver reached a state its argument does not
// cover.  Never produced silently in place of a weaker answer.
struct ProofGapDiagnostic {
  std::string where;
  std::string detail;
  std::string instance_text;  // serialized input for reproduction
};

using SolveResult =
    std::variant<PathWithTrace, ExceptionalWitness, ProofGapDiagnostic>;

// Ordinary tournaments are solved by exhaustive search; beyond this size the
// input is refused rather than risking an unbounded search.
inline constexpr int kTournamentSearchCap = 12;

// Top-level dispatch: exceptional inputs return their witness; k = 2 runs the
// exhaustive search (n capped); k = n-1 reduces arity; other k delete the
// highest vertex and reinsert it.  Throws UnsupportedInput for k >= n or for
// k = 2 with n above the cap.
SolveResult find_adhp(const Hypertournament& h);

// Arity reduction, k = n-1 >= 3, input not exceptional.
SolveResult case1_solve(const Hypertournament& h);

// Vertex deletion, 2 <= k <= n-2, input not exceptional.  k = 2 is accepted
// for the exceptional-deletion splices; other k = 2 inputs fall back to the
// exhaustive search (same cap as find_adhp).
SolveResult case2_solve(const Hypertournament& h);

// Inserts new_vertex (which must equal h.n()) into an antidirected
// hamiltonian path of delete_vertex(h, new_vertex).child, given in child arc
// ids.  Fresh arcs all contain new_vertex, so they never collide with kept
// ones.
std::variant<PathWithTrace, ProofGapDiagnostic> case2_extend(
    const Hypertournament& h, const AntidirectedPath& child_path,
    VertexId new_vertex);

struct SelectResult {
  std::optional<std::vector<ArcId>> assignment;  // one id per slot, distinct
  std::uint64_t nodes = 0;                       // placements tried
  bool greedy_would_fail = false;  // plain first-fit would have dead-ended
};

// Picks one arc per slot with all picks distinct: first-fit on ascending ids
// with full backtracking.  Reports whether backtracking was actually needed,
// so callers can tell when slot structure stopped being trivially feasible.
SelectResult select_distinct_arcs(
    const std::vector<std::vector<ArcId>>& slots);

}  // namespace adhp
