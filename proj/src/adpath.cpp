#include "adhp/adpath.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adhp {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ShapeMismatch:
      return "ShapeMismatch";
    case ViolationKind::RepeatedVertex:
      return "RepeatedVertex";
    case ViolationKind::RepeatedArc:
      return "RepeatedArc";
    case ViolationKind::VertexNotInArc:
      return "VertexNotInArc";
    case ViolationKind::AlternationBroken:
      return "AlternationBroken";
  }
  return "Unknown";
}

std::variant<AntidirectedPath, Violation> validate_adp(
    const Hypertournament& h, const std::vector<VertexId>& vertices,
    const std::vector<ArcId>& arc_ids) {
  if (vertices.size() < 2) {
    return Violation{ViolationKind::ShapeMismatch,
                     "a path needs at least two vertices", -1};
  }
  if (arc_ids.size() + 1 != vertices.size()) {
    return Violation{ViolationKind::ShapeMismatch,
                     "expected " + std::to_string(vertices.size() - 1) +
                         " arcs for " + std::to_string(vertices.size()) +
                         " vertices, got " + std::to_string(arc_ids.size()),
                     -1};
  }

  std::set<VertexId> seen_vertices;
  for (VertexId v : vertices) {
    if (v < 1 || v > h.n()) {
      return Violation{ViolationKind::ShapeMismatch,
                       "vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(h.n()),
                       -1};
    }
    if (!seen_vertices.insert(v).second) {
      return Violation{ViolationKind::RepeatedVertex,
                       "vertex " + std::to_string(v) + " repeats", -1};
    }
  }

  std::set<ArcId> seen_arcs;
  for (ArcId id : arc_ids) {
    if (id < 0 || id >= h.arc_count()) {
      return Violation{ViolationKind::ShapeMismatch,
                       "arc id " + std::to_string(id) + " outside 0.." +
                           std::to_string(h.arc_count() - 1),
                       -1};
    }
    if (!seen_arcs.insert(id).second) {
      return Violation{ViolationKind::RepeatedArc,
                       "arc id " + std::to_string(id) + " repeats", -1};
    }
  }

  AntidirectedPath path;
  path.vertices = vertices;
  path.arc_ids = arc_ids;
  path.orientations.reserve(arc_ids.size());
  for (size_t i = 0; i < arc_ids.size(); ++i) {
    const Arc& arc = h.arc(arc_ids[i]);
    VertexId from = vertices[i];
    VertexId to = vertices[i + 1];
    if (!arc.contains(from) || !arc.contains(to)) {
      return Violation{ViolationKind::VertexNotInArc,
                       "arc " + std::to_string(arc_ids[i]) +
                           " does not contain both " + std::to_string(from) +
                           " and " + std::to_string(to),
                       static_cast<int>(i)};
    }
    StepOrientation o = precedes(arc, from, to) ? StepOrientation::Forward
                                                : StepOrientation::Backward;
    if (i > 0 && o == path.orientations.back()) {
      return Violation{ViolationKind::AlternationBroken,
                       "steps " + std::to_string(i - 1) + " and " +
                           std::to_string(i) + " point the same way",
                       static_cast<int>(i)};
    }
    path.orientations.push_back(o);
  }
  return path;
}

std::pair<EndpointRole, EndpointRole> endpoint_roles(
    const AntidirectedPath& path) {
  if (path.orientations.empty()) {
    throw Error(ErrorKind::PreconditionViolated,
                "endpoint roles need at least one step");
  }
  EndpointRole first = path.orientations.front() == StepOrientation::Forward
                           ? EndpointRole::Starting
                           : EndpointRole::Terminal;
  EndpointRole last = path.orientations.back() == StepOrientation::Forward
                          ? EndpointRole::Terminal
                          : EndpointRole::Starting;
  return {first, last};
}

AntidirectedPath reverse_path(const AntidirectedPath& path) {
  AntidirectedPath out;
  out.vertices.assign(path.vertices.rbegin(), path.vertices.rend());
  out.arc_ids.assign(path.arc_ids.rbegin(), path.arc_ids.rend());
  out.orientations.reserve(path.orientations.size());
  for (auto it = path.orientations.rbegin(); it != path.orientations.rend();
       ++it) {
    out.orientations.push_back(*it == StepOrientation::Forward
                                   ? StepOrientation::Backward
                                   : StepOrientation::Forward);
  }
  return out;
}

bool is_hamiltonian(const Hypertournament& h, const AntidirectedPath& path) {
  return path.vertex_count() == h.n();
}

std::string format_path(const AntidirectedPath& path) {
  std::ostringstream out;
  out << path.vertex_count() << "\n";
  for (size_t i = 0; i < path.vertices.size(); ++i) {
    out << (i ? " " : "") << path.vertices[i];
  }
  out << "\n";
  for (size_t i = 0; i < path.arc_ids.size(); ++i) {
    out << (i ? " " : "") << path.arc_ids[i];
  }
  out << "\n";
  return out.str();
}

ParsedPath parse_path(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.push_back(line);
  }
  if (lines.size() != 3) {
    throw Error(ErrorKind::ParseError,
                "expected 3 content lines (count, vertices, arc ids), got " +
                    std::to_string(lines.size()));
  }

  auto read_ints = [](const std::string& s, const char* what) {
    std::istringstream ss(s);
    std::vector<int> values;
    int v;
    while (ss >> v) values.push_back(v);
    if (ss.fail() && !ss.eof()) {
      throw Error(ErrorKind::ParseError,
                  std::string("non-numeric token in ") + what);
    }
    return values;
  };

  std::vector<int> counts = read_ints(lines[0], "the count line");
  if (counts.size() != 1 || counts[0] < 2) {
    throw Error(ErrorKind::ParseError,
                "count line must hold one integer >= 2");
  }
  ParsedPath out;
  out.vertices = read_ints(lines[1], "the vertex line");
  out.arc_ids = read_ints(lines[2], "the arc id line");
  if (static_cast<int>(out.vertices.size()) != counts[0]) {
    throw Error(ErrorKind::ParseError,
                "vertex line holds " + std::to_string(out.vertices.size()) +
                    " entries, count line says " + std::to_string(counts[0]));
  }
  if (out.arc_ids.size() + 1 != out.vertices.size()) {
    throw Error(ErrorKind::ParseError,
                "arc id line must hold one entry fewer than the vertex line");
  }
  return out;
}

AntidirectedPath lift_path(const Hypertournament& parent,
                           const AntidirectedPath& path,
                           const ArcCorrespondence& corr,
                           const Relabeling& relabel) {
  std::vector<VertexId> vertices;
  vertices.reserve(path.vertices.size());
  for (VertexId v : path.vertices) vertices.push_back(relabel.parent_of(v));

  std::vector<ArcId> arc_ids;
  arc_ids.reserve(path.arc_ids.size());
  for (ArcId id : path.arc_ids) arc_ids.push_back(corr.parent_arc(id));

  auto lifted = validate_adp(parent, vertices, arc_ids);
  if (std::holds_alternative<Violation>(lifted)) {
    const Violation& why = std::get<Violation>(lifted);
    throw Error(ErrorKind::LiftBrokeAlternation,
                "lifted path is not antidirected in the parent: " +
                    why.reason);
  }
  AntidirectedPath out = std::get<AntidirectedPath>(lifted);
  for (size_t i = 0; i < out.orientations.size(); ++i) {
    if (out.orientations[i] != path.orientations[i]) {
      throw Error(ErrorKind::LiftBrokeAlternation,
                  "step " + std::to_string(i) +
                      " changed direction under the lift");
    }
  }
  return out;
}

}  // namespace adhp
