#pragma once

// Antidirected paths in a hypertournament.
//
// A path visits distinct vertices x_1 .. x_t through t-1 distinct arcs; step
// i uses arc a_i, which must contain x_i and x_{i+1}.  The step is Forward
// when x_i precedes x_{i+1} inside a_i, Backward otherwise, and consecutive
// steps must point in opposite directions.  Endpoints are Starting when their
// incident step leaves them and Terminal when it enters them; the two
// endpoint roles agree exactly when t is odd.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adhp/core.hpp"

namespace adhp {

enum class StepOrientation { Forward, Backward };
enum class EndpointRole { Starting, Terminal };

struct AntidirectedPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arc_ids;
  std::vector<StepOrientation> orientations;  // derived, one per arc

  int length() const { return static_cast<int>(arc_ids.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

enum class ViolationKind {
  ShapeMismatch,      // bad sequence lengths or out-of-range labels/ids
  RepeatedVertex,
  RepeatedArc,
  VertexNotInArc,     // a step's arc is missing one of the step's endpoints
  AlternationBroken,  // two consecutive steps share an orientation
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::ShapeMismatch;
  std::string reason;
  int step = -1;  // index of the offending step, -1 for shape problems
};

// Checks the sequences form an antidirected path of H: distinct vertices,
// distinct in-range arcs, each arc containing its step's endpoints, and
// strictly alternating orientations.  On success the returned path carries
// the derived orientation per step.
std::variant<AntidirectedPath, Violation> validate_adp(
    const Hypertournament& h, const std::vector<VertexId>& vertices,
    const std::vector<ArcId>& arc_ids);

// Roles of x_1 and x_t.  Requires at least one step.
std::pair<EndpointRole, EndpointRole> endpoint_roles(
    const AntidirectedPath& path);

// Same walk traversed from the other end; still antidirected in the same
// structure, with each endpoint keeping its role.
AntidirectedPath reverse_path(const AntidirectedPath& path);

bool is_hamiltonian(const Hypertournament& h, const AntidirectedPath& path);

// Text form: vertex count, the vertices, then the arc ids, one group per
// line.  parse_path() accepts '#' comments and blank lines and returns the
// raw sequences without validating them against any structure.
std::string format_path(const AntidirectedPath& path);

struct ParsedPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arc_ids;
};

ParsedPath parse_path(const std::string& text);

// Reinterprets a path of a derived structure inside the structure it came
// from: vertices map through relabel.parent_of and arcs through
// corr.parent_arc.  Deletions that produced the child preserve tuple order,
// so each step's orientation must survive unchanged; if it does not, the
// lift throws LiftBrokeAlternation (that signals a bug upstream, never a
// condition to swallow).  Unknown child arcs throw UnmappedArc.
AntidirectedPath lift_path(const Hypertournament& parent,
                           const AntidirectedPath& path,
                           const ArcCorrespondence& corr,
                           const Relabeling& relabel);

}  // namespace adhp
