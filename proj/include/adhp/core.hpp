#pragma once

// Core model of k-hypertournaments.
//
// A k-hypertournament on n labeled vertices {1..n} assigns to every k-subset
// of the vertices exactly one ordered k-tuple (an "arc") on that subset.  For
// k = 2 this is an ordinary tournament.  Arc ids are dense integers assigned
// in input order; all queries and reductions work in terms of those ids so
// that paths can cite arcs stably across transformations.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adhp {

using VertexId = int;  // 1-based
using ArcId = int;     // 0-based, dense in input order

enum class ErrorKind {
  WrongArcCount,
  DuplicateSubset,
  MalformedArc,
  SameVertex,
  VertexNotInArc,
  ArityTooLarge,
  PreconditionViolated,
  UnsupportedInput,
  CapExceeded,
  BudgetRequired,
  ParseError,
  UnmappedArc,
  LiftBrokeAlternation,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// One arc: an ordered tuple of k distinct vertices.
struct Arc {
  std::vector<VertexId> entries;

  bool contains(VertexId v) const;
  // Position of v in the tuple, or -1 when absent.
  int position_of(VertexId v) const;
};

// True when x occupies an earlier position than y in the arc.
// Throws SameVertex when x == y and VertexNotInArc when either is absent.
bool precedes(const Arc& arc, VertexId x, VertexId y);

// C(n, k) saturating at u64 max to stay safe for large n.
std::uint64_t binomial(int n, int k);

// Default limit on the number of arcs a single instance may store.
inline constexpr std::uint64_t kDefaultStorageCap = 2'000'000;

class Hypertournament {
 public:
  // Validates shape: 2 <= k <= n, exactly C(n,k) arcs, each a permutation of a
  // distinct k-subset of {1..n}.  Precedence lists are built eagerly so the
  // value is immutable and safe to share across threads afterwards.
  static Hypertournament build(int n, int k, std::vector<Arc> arcs,
                               std::uint64_t storage_cap = kDefaultStorageCap);

  int n() const { return n_; }
  int k() const { return k_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId id) const { return arcs_[static_cast<size_t>(id)]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Ids of arcs containing both x and y with x before y, ascending.
  // This is the set A_H(x, y); |A_H(x,y)| + |A_H(y,x)| = C(n-2, k-2).
  const std::vector<ArcId>& arcs_preceding(VertexId x, VertexId y) const;
  std::uint64_t count_preceding(VertexId x, VertexId y) const;

  // Id of the arc whose vertex set is exactly `subset` (any order given);
  // nullopt when no such subset exists (wrong size or out of range).
  std::optional<ArcId> arc_on_subset(std::vector<VertexId> subset) const;

 private:
  Hypertournament() = default;

  int n_ = 0;
  int k_ = 0;
  std::vector<Arc> arcs_;
  // prec_[(x-1) * n + (y-1)] = ids of arcs with x before y.
  std::vector<std::vector<ArcId>> prec_;

  void check_vertex(VertexId v) const;
};

Hypertournament build_hypertournament(int n, int k, std::vector<Arc> arcs);

// Reverses every arc tuple in place (same ids, same subsets).  Swaps the
// roles of A_H(x,y) and A_H(y,x); an involution.
Hypertournament reverse(const Hypertournament& h);

// A vertex renaming recorded alongside a transformation.  Maps labels of the
// source ("parent") structure to labels of the produced ("child") structure;
// partial when the transformation removes vertices (child_of == 0).
struct Relabeling {
  // parent_to_child[v] for v in 1..parent_n; 0 marks removed vertices.
  std::vector<VertexId> parent_to_child;

  static Relabeling identity(int n);
  // Permutation given as perm[v] = new label of v.
  static Relabeling permutation(std::vector<VertexId> parent_to_child);

  int parent_n() const { return static_cast<int>(parent_to_child.size()) - 1; }
  VertexId child_of(VertexId parent) const;
  // Inverse lookup; throws PreconditionViolated when child has no preimage.
  VertexId parent_of(VertexId child) const;
};

// Applies a full permutation to vertex labels, keeping arc ids.
Hypertournament apply_relabeling(const Hypertournament& h,
                                 const Relabeling& relabel);

// Records how arcs of a derived structure map back to the structure it came
// from, plus what was deleted along the way.
struct ArcCorrespondence {
  std::vector<ArcId> child_to_parent;
  std::vector<VertexId> deleted_vertices;
  std::vector<ArcId> deleted_arcs;

  ArcId parent_arc(ArcId child) const;
};

struct DeleteVertexResult {
  Hypertournament child;
  ArcCorrespondence corr;
  Relabeling relabel;  // parent labels -> child labels, v removed
};

// Removes vertex v and every arc containing it; requires k <= n - 2 so the
// result is a k-hypertournament on n-1 vertices.  Remaining labels are
// compacted order-preservingly to 1..n-1.
DeleteVertexResult delete_vertex(const Hypertournament& h, VertexId v);

struct Case1Reduction {
  Hypertournament child;        // (k-1)-hypertournament on 1..n-1
  ArcCorrespondence corr;       // child arc id -> parent arc id
  Relabeling relabel;           // original labels -> normalized labels
  ArcId arc_a = -1;             // parent id of the dissolved arc (arcs[0])
  ArcId arc_b = -1;             // parent id of the arc on {1..n-1}
};

// Arity reduction used when k = n - 1 (so H has exactly n arcs, one missing
// each vertex).  Picks a := arcs[0] and relabels so a's tuple becomes
// (2, 3, ..., n) and the vertex outside a becomes 1.  The child drops arc a
// entirely, removes vertex n from every other arc, and removes vertex 1 from
// the arc b on {1..n-1}; tuple order is preserved, so precedence among
// surviving vertices carries over.  Requires k = n - 1 >= 3.
Case1Reduction case1_reduce(const Hypertournament& h);

// Plain-text form: "n k" on the first line, then one arc tuple per line in
// id order.  Inverse of the harness instance parser's text mode.
std::string format_instance(const Hypertournament& h);

}  // namespace adhp
