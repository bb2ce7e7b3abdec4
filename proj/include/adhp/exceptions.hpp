#pragma once

// The four structures with no antidirected hamiltonian path, tooling to
// recognize labeled copies of them, and labeled-copy counting.  Every other
// instance with k <= n-1 admits such a path, so these act as the complete
// negative certificate set for the solver.

#include <cstdint>
#include <optional>
#include <vector>

#include "adhp/core.hpp"

namespace adhp {

enum class ExceptionalKind { T3c, T5c, T7c, H4 };

const char* exceptional_kind_name(ExceptionalKind kind);  // "t3c", "h4", ...

// Canonical labeled representative of each kind:
//   T3c: the 3-cycle (1,2), (2,3), (3,1).
//   T5c: 5 vertices, i -> j exactly when (j - i) mod 5 is 1 or 2,
//        arcs listed by lexicographic pair.
//   T7c: 7 vertices, i -> j exactly when (j - i) mod 7 is 1, 2 or 4,
//        arcs listed by lexicographic pair.
//   H4:  the 3-hypertournament (2,3,4), (4,1,2), (3,4,1), (1,2,3).
// All four are closed under arc reversal (up to relabeling).
Hypertournament canonical(ExceptionalKind kind);

// iso[v] = canonical label assigned to input vertex v (iso[0] unused = 0).
// Applying iso to the input's arcs reproduces the canonical arc set exactly,
// as oriented tuples.
struct ExceptionalWitness {
  ExceptionalKind kind;
  std::vector<VertexId> iso;
};

// Tests whether h is a labeled copy of one of the four structures.  Signature
// mismatches return nullopt immediately; otherwise all vertex permutations
// are scanned in lexicographic order and the first match is returned.
std::optional<ExceptionalWitness> is_exceptional(const Hypertournament& h);

// Every permutation of 1..h.n() mapping h onto canonical(kind), lexicographic
// order; empty when h is not a copy.  The count equals n! / |Aut|.
std::vector<std::vector<VertexId>> all_isomorphisms(const Hypertournament& h,
                                                    ExceptionalKind kind);

// Number of distinct labeled copies of the canonical structure: 2 for T3c,
// 24 for T5c, 240 for T7c, 6 for H4.  The direct mode counts distinct images
// of the canonical arc set under all n! relabelings; the enumeration mode
// instead walks every labeled instance of the signature and counts witnesses,
// as an independent cross-check.
std::uint64_t count_labeled_copies(ExceptionalKind kind,
                                   bool via_enumeration = false);

}  // namespace adhp
