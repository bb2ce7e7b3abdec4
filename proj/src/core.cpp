#include "adhp/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adhp {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WrongArcCount: return "WrongArcCount";
    case ErrorKind::DuplicateSubset: return "DuplicateSubset";
    case ErrorKind::MalformedArc: return "MalformedArc";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::VertexNotInArc: return "VertexNotInArc";
    case ErrorKind::ArityTooLarge: return "ArityTooLarge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnsupportedInput: return "UnsupportedInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetRequired: return "BudgetRequired";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnmappedArc: return "UnmappedArc";
    case ErrorKind::LiftBrokeAlternation: return "LiftBrokeAlternation";
  }
  return "UnknownError";
}

bool Arc::contains(VertexId v) const {
  return std::find(entries.begin(), entries.end(), v) != entries.end();
}

int Arc::position_of(VertexId v) const {
  auto it = std::find(entries.begin(), entries.end(), v);
  if (it == entries.end()) return -1;
  return static_cast<int>(it - entries.begin());
}

bool precedes(const Arc& arc, VertexId x, VertexId y) {
  if (x == y) {
    throw Error(ErrorKind::SameVertex,
                "precedes() needs two distinct vertices, got " +
                    std::to_string(x) + " twice");
  }
  int px = arc.position_of(x);
  int py = arc.position_of(y);
  if (px < 0 || py < 0) {
    throw Error(ErrorKind::VertexNotInArc,
                "vertex " + std::to_string(px < 0 ? x : y) +
                    " is not in the arc");
  }
  return px < py;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = UINT64_MAX;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at each step; saturate instead of wrapping.
    if (result > kMax / num) return kMax;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

Hypertournament Hypertournament::build(int n, int k, std::vector<Arc> arcs,
                                       std::uint64_t storage_cap) {
  if (n < 2 || k < 2 || k > n) {
    throw Error(ErrorKind::PreconditionViolated,
                "need 2 <= k <= n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  std::uint64_t expected = binomial(n, k);
  if (expected > storage_cap) {
    throw Error(ErrorKind::CapExceeded,
                "instance needs " + std::to_string(expected) +
                    " arcs, cap is " + std::to_string(storage_cap));
  }
  if (arcs.size() != expected) {
    throw Error(ErrorKind::WrongArcCount,
                "expected " + std::to_string(expected) + " arcs, got " +
                    std::to_string(arcs.size()));
  }

  std::map<std::vector<VertexId>, ArcId> seen;
  for (size_t id = 0; id < arcs.size(); ++id) {
    const Arc& a = arcs[id];
    if (static_cast<int>(a.entries.size()) != k) {
      throw Error(ErrorKind::MalformedArc,
                  "arc " + std::to_string(id) + " has " +
                      std::to_string(a.entries.size()) + " entries, expected " +
                      std::to_string(k));
    }
    std::vector<VertexId> key = a.entries;
    std::sort(key.begin(), key.end());
    for (int i = 0; i < k; ++i) {
      if (key[i] < 1 || key[i] > n) {
        throw Error(ErrorKind::MalformedArc,
                    "arc " + std::to_string(id) + " contains vertex " +
                        std::to_string(key[i]) + " outside 1.." +
                        std::to_string(n));
      }
      if (i > 0 && key[i] == key[i - 1]) {
        throw Error(ErrorKind::MalformedArc,
                    "arc " + std::to_string(id) + " repeats vertex " +
                        std::to_string(key[i]));
      }
    }
    auto [it, inserted] = seen.emplace(std::move(key), static_cast<ArcId>(id));
    if (!inserted) {
      throw Error(ErrorKind::DuplicateSubset,
                  "arcs " + std::to_string(it->second) + " and " +
                      std::to_string(id) + " cover the same vertex set");
    }
  }

  Hypertournament h;
  h.n_ = n;
  h.k_ = k;
  h.arcs_ = std::move(arcs);
  h.prec_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), {});
  for (size_t id = 0; id < h.arcs_.size(); ++id) {
    const auto& entries = h.arcs_[id].entries;
    for (size_t i = 0; i < entries.size(); ++i) {
      for (size_t j = i + 1; j < entries.size(); ++j) {
        size_t slot = static_cast<size_t>(entries[i] - 1) * n + (entries[j] - 1);
        h.prec_[slot].push_back(static_cast<ArcId>(id));
      }
    }
  }
  return h;
}

void Hypertournament::check_vertex(VertexId v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorKind::PreconditionViolated,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(n_));
  }
}

const std::vector<ArcId>& Hypertournament::arcs_preceding(VertexId x,
                                                          VertexId y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) {
    throw Error(ErrorKind::SameVertex,
                "arcs_preceding() needs two distinct vertices");
  }
  return prec_[static_cast<size_t>(x - 1) * n_ + (y - 1)];
}

std::uint64_t Hypertournament::count_preceding(VertexId x, VertexId y) const {
  return arcs_preceding(x, y).size();
}

std::optional<ArcId> Hypertournament::arc_on_subset(
    std::vector<VertexId> subset) const {
  if (static_cast<int>(subset.size()) != k_) return std::nullopt;
  std::sort(subset.begin(), subset.end());
  for (VertexId v : subset) {
    if (v < 1 || v > n_) return std::nullopt;
  }
  for (size_t i = 1; i < subset.size(); ++i) {
    if (subset[i] == subset[i - 1]) return std::nullopt;
  }
  // Arcs containing both subset[0] and subset[1] in either order form a small
  // candidate pool; scan it rather than the whole arc list.
  const auto& fwd = arcs_preceding(subset[0], subset[1]);
  const auto& bwd = arcs_preceding(subset[1], subset[0]);
  auto matches = [&](ArcId id) {
    std::vector<VertexId> key = arcs_[static_cast<size_t>(id)].entries;
    std::sort(key.begin(), key.end());
    return key == subset;
  };
  for (ArcId id : fwd) {
    if (matches(id)) return id;
  }
  for (ArcId id : bwd) {
    if (matches(id)) return id;
  }
  return std::nullopt;
}

Hypertournament build_hypertournament(int n, int k, std::vector<Arc> arcs) {
  return Hypertournament::build(n, k, std::move(arcs));
}

Hypertournament reverse(const Hypertournament& h) {
  std::vector<Arc> arcs = h.arcs();
  for (Arc& a : arcs) {
    std::reverse(a.entries.begin(), a.entries.end());
  }
  return Hypertournament::build(h.n(), h.k(), std::move(arcs));
}

Relabeling Relabeling::identity(int n) {
  Relabeling r;
  r.parent_to_child.resize(static_cast<size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) r.parent_to_child[static_cast<size_t>(v)] = v;
  r.parent_to_child[0] = 0;
  return r;
}

Relabeling Relabeling::permutation(std::vector<VertexId> parent_to_child) {
  Relabeling r;
  r.parent_to_child = std::move(parent_to_child);
  if (r.parent_to_child.empty() || r.parent_to_child[0] != 0) {
    throw Error(ErrorKind::PreconditionViolated,
                "relabeling table must start with sentinel 0");
  }
  std::vector<bool> hit(r.parent_to_child.size(), false);
  for (size_t v = 1; v < r.parent_to_child.size(); ++v) {
    VertexId image = r.parent_to_child[v];
    if (image < 1 || image >= static_cast<VertexId>(r.parent_to_child.size()) ||
        hit[static_cast<size_t>(image)]) {
      throw Error(ErrorKind::PreconditionViolated,
                  "relabeling is not a permutation of 1.." +
                      std::to_string(r.parent_to_child.size() - 1));
    }
    hit[static_cast<size_t>(image)] = true;
  }
  return r;
}

VertexId Relabeling::child_of(VertexId parent) const {
  if (parent < 1 || parent >= static_cast<VertexId>(parent_to_child.size())) {
    throw Error(ErrorKind::PreconditionViolated,
                "vertex " + std::to_string(parent) + " outside relabeling");
  }
  return parent_to_child[static_cast<size_t>(parent)];
}

VertexId Relabeling::parent_of(VertexId child) const {
  for (size_t v = 1; v < parent_to_child.size(); ++v) {
    if (parent_to_child[v] == child) return static_cast<VertexId>(v);
  }
  throw Error(ErrorKind::PreconditionViolated,
              "vertex " + std::to_string(child) + " has no preimage");
}

Hypertournament apply_relabeling(const Hypertournament& h,
                                 const Relabeling& relabel) {
  if (relabel.parent_n() != h.n()) {
    throw Error(ErrorKind::PreconditionViolated,
                "relabeling size does not match vertex count");
  }
  std::vector<Arc> arcs = h.arcs();
  for (Arc& a : arcs) {
    for (VertexId& v : a.entries) {
      VertexId image = relabel.child_of(v);
      if (image == 0) {
        throw Error(ErrorKind::PreconditionViolated,
                    "apply_relabeling() needs a full permutation");
      }
      v = image;
    }
  }
  return Hypertournament::build(h.n(), h.k(), std::move(arcs));
}

DeleteVertexResult delete_vertex(const Hypertournament& h, VertexId v) {
  if (v < 1 || v > h.n()) {
    throw Error(ErrorKind::PreconditionViolated,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(h.n()));
  }
  if (h.k() > h.n() - 2) {
    throw Error(ErrorKind::ArityTooLarge,
                "deleting a vertex needs k <= n-2 to leave a valid instance");
  }

  Relabeling relabel;
  relabel.parent_to_child.assign(static_cast<size_t>(h.n()) + 1, 0);
  VertexId next = 1;
  for (VertexId u = 1; u <= h.n(); ++u) {
    if (u == v) continue;
    relabel.parent_to_child[static_cast<size_t>(u)] = next++;
  }
  ArcCorrespondence corr;
  corr.deleted_vertices = {v};

  std::vector<Arc> child_arcs;
  for (ArcId id = 0; id < h.arc_count(); ++id) {
    const Arc& a = h.arc(id);
    if (a.contains(v)) {
      corr.deleted_arcs.push_back(id);
      continue;
    }
    Arc child_arc;
    child_arc.entries.reserve(a.entries.size());
    for (VertexId u : a.entries) {
      child_arc.entries.push_back(
          relabel.parent_to_child[static_cast<size_t>(u)]);
    }
    child_arcs.push_back(std::move(child_arc));
    corr.child_to_parent.push_back(id);
  }
  return DeleteVertexResult{
      Hypertournament::build(h.n() - 1, h.k(), std::move(child_arcs)),
      std::move(corr), std::move(relabel)};
}

ArcId ArcCorrespondence::parent_arc(ArcId child) const {
  if (child < 0 || child >= static_cast<ArcId>(child_to_parent.size())) {
    throw Error(ErrorKind::UnmappedArc,
                "child arc " + std::to_string(child) +
                    " has no parent correspondence");
  }
  return child_to_parent[static_cast<size_t>(child)];
}

Case1Reduction case1_reduce(const Hypertournament& h) {
  int n = h.n();
  int k = h.k();
  if (k != n - 1 || k < 3) {
    throw Error(ErrorKind::PreconditionViolated,
                "arity reduction needs k = n-1 >= 3, got n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
  }

  ArcId arc_a = 0;
  ArcId arc_b = -1;
  const Arc& a = h.arc(arc_a);

  // Relabel so a's entries become 2..n in positional order and the one vertex
  // missing from a becomes 1.
  std::vector<VertexId> table(static_cast<size_t>(n) + 1, 0);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    table[static_cast<size_t>(a.entries[i])] = static_cast<VertexId>(i) + 2;
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (table[static_cast<size_t>(v)] == 0) table[static_cast<size_t>(v)] = 1;
  }
  Relabeling relabel = Relabeling::permutation(std::move(table));
  Hypertournament normalized = apply_relabeling(h, relabel);

  // In the normalized labels, b is the arc avoiding n (on {1..n-1}); every
  // other arc besides a contains both 1 and n.  Children keep tuple order:
  // drop n generally, but drop 1 from b so b's child covers {2..n-1}.
  ArcCorrespondence corr;
  std::vector<Arc> child_arcs;
  for (ArcId id = 0; id < normalized.arc_count(); ++id) {
    if (id == arc_a) continue;
    const Arc& arc = normalized.arc(id);
    VertexId to_drop = arc.contains(n) ? n : 1;
    if (to_drop == 1) {
      if (arc_b != -1) {
        throw Error(ErrorKind::PreconditionViolated,
                    "two arcs avoid the top vertex; instance is malformed");
      }
      arc_b = id;
    }
    Arc child_arc;
    child_arc.entries.reserve(arc.entries.size() - 1);
    for (VertexId v : arc.entries) {
      if (v != to_drop) child_arc.entries.push_back(v);
    }
    child_arcs.push_back(std::move(child_arc));
    corr.child_to_parent.push_back(id);
  }
  corr.deleted_arcs.push_back(arc_a);
  return Case1Reduction{
      Hypertournament::build(n - 1, k - 1, std::move(child_arcs)),
      std::move(corr), std::move(relabel), arc_a, arc_b};
}

std::string format_instance(const Hypertournament& h) {
  std::string out =
      std::to_string(h.n()) + " " + std::to_string(h.k()) + "\n";
  for (ArcId id = 0; id < h.arc_count(); ++id) {
    const Arc& arc = h.arc(id);
    for (size_t i = 0; i < arc.entries.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(arc.entries[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace adhp
