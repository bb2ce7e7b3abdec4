#pragma once

// Internal construction steps behind case1_solve, exposed so tests can drive
// each branch directly.  Not part of the stable interface.

#include <optional>

#include "adhp/constructor.hpp"

namespace adhp::detail {

// Outcome of one construction attempt: exactly one member is set.
struct BuildOutcome {
  std::optional<AntidirectedPath> path;
  std::optional<ProofGapDiagnostic> gap;
};

// Finishers for the arity-reduction step.  All operate on the normalized
// instance g (arc 0 relabeled to (2,...,n), so within arc 0 every smaller
// vertex precedes every larger one and n is its maximum), a path q covering
// 1..n-1, and the two arcs of g unused by q: arc_a is arc 0, the other spare
// is arc_c / arc_d.

// q starts with a forward step.  Attaches n at one end, or reroutes near the
// tail when n can only sit next to the far endpoint.
BuildOutcome attach_starting(const Hypertournament& g,
                             const AntidirectedPath& q, ArcId arc_a,
                             ArcId arc_c, CaseTrace& trace);

// attach_starting subcases for q starting at vertex 1 with n odd; split on
// whether the spare arc_c contains n (tail swap) or misses it (end exchange).
BuildOutcome attach_starting_tail(const Hypertournament& g,
                                  const AntidirectedPath& q, ArcId arc_a,
                                  ArcId arc_c, CaseTrace& trace);
BuildOutcome attach_starting_shared(const Hypertournament& g,
                                    const AntidirectedPath& q, ArcId arc_a,
                                    ArcId arc_c, CaseTrace& trace);

// q starts with a backward step (both endpoints terminal, n even).  Rewires
// an end arc, appends, or falls back to a bounded rearrangement of the path
// ends before giving up.
BuildOutcome attach_terminal(const Hypertournament& g,
                             const AntidirectedPath& q, ArcId arc_a,
                             ArcId arc_d, CaseTrace& trace);

// Bounded end rearrangement: keeps the middle of q as one or more rigid
// pieces, frees the end arcs plus the spares, and tries every piece order,
// chain direction, and junction assignment.  Returns the first valid
// hamiltonian arrangement.
std::optional<AntidirectedPath> ber_rearrange(
    const Hypertournament& g, const AntidirectedPath& q,
    const std::vector<ArcId>& spares, int level);

}  // namespace adhp::detail
