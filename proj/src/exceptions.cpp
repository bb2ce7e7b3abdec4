#include "adhp/exceptions.hpp"

#include <algorithm>
#include <set>

#include "adhp/oracle.hpp"

namespace adhp {

namespace {

Hypertournament rotational_tournament(int n, std::vector<int> diffs) {
  std::vector<Arc> arcs;
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j = i + 1; j <= n; ++j) {
      bool forward =
          std::find(diffs.begin(), diffs.end(), j - i) != diffs.end();
      arcs.push_back(forward ? Arc{{i, j}} : Arc{{j, i}});
    }
  }
  return Hypertournament::build(n, 2, std::move(arcs));
}

ExceptionalKind kind_for_signature(int n, int k, bool& ok) {
  ok = true;
  if (k == 2 && n == 3) return ExceptionalKind::T3c;
  if (k == 2 && n == 5) return ExceptionalKind::T5c;
  if (k == 2 && n == 7) return ExceptionalKind::T7c;
  if (k == 3 && n == 4) return ExceptionalKind::H4;
  ok = false;
  return ExceptionalKind::T3c;
}

// Sorted per-vertex position-count vectors; invariant under relabeling, so a
// mismatch rules out isomorphism without scanning permutations.
std::vector<std::vector<int>> position_profile(const Hypertournament& h) {
  std::vector<std::vector<int>> counts(
      static_cast<size_t>(h.n()) + 1, std::vector<int>(static_cast<size_t>(h.k()), 0));
  for (const Arc& arc : h.arcs()) {
    for (size_t p = 0; p < arc.entries.size(); ++p) {
      ++counts[static_cast<size_t>(arc.entries[p])][p];
    }
  }
  counts.erase(counts.begin());
  std::sort(counts.begin(), counts.end());
  return counts;
}

// Does perm (perm[v-1] = image of v) map h onto target arc-for-arc?
bool maps_onto(const Hypertournament& h, const Hypertournament& target,
               const std::vector<VertexId>& perm) {
  for (const Arc& arc : h.arcs()) {
    std::vector<VertexId> image;
    image.reserve(arc.entries.size());
    for (VertexId v : arc.entries) {
      image.push_back(perm[static_cast<size_t>(v - 1)]);
    }
    std::optional<ArcId> target_id = target.arc_on_subset(image);
    if (!target_id || target.arc(*target_id).entries != image) return false;
  }
  return true;
}

}  // namespace

const char* exceptional_kind_name(ExceptionalKind kind) {
  switch (kind) {
    case ExceptionalKind::T3c:
      return "t3c";
    case ExceptionalKind::T5c:
      return "t5c";
    case ExceptionalKind::T7c:
      return "t7c";
    case ExceptionalKind::H4:
      return "h4";
  }
  return "unknown";
}

Hypertournament canonical(ExceptionalKind kind) {
  switch (kind) {
    case ExceptionalKind::T3c:
      return Hypertournament::build(3, 2, {{{1, 2}}, {{2, 3}}, {{3, 1}}});
    case ExceptionalKind::T5c:
      return rotational_tournament(5, {1, 2});
    case ExceptionalKind::T7c:
      return rotational_tournament(7, {1, 2, 4});
    case ExceptionalKind::H4:
      return Hypertournament::build(
          4, 3, {{{2, 3, 4}}, {{4, 1, 2}}, {{3, 4, 1}}, {{1, 2, 3}}});
  }
  throw Error(ErrorKind::PreconditionViolated, "unknown exceptional kind");
}

std::optional<ExceptionalWitness> is_exceptional(const Hypertournament& h) {
  bool gate = false;
  ExceptionalKind kind = kind_for_signature(h.n(), h.k(), gate);
  if (!gate) return std::nullopt;

  Hypertournament target = canonical(kind);
  if (position_profile(h) != position_profile(target)) return std::nullopt;

  std::vector<VertexId> perm(static_cast<size_t>(h.n()));
  for (int v = 1; v <= h.n(); ++v) perm[static_cast<size_t>(v - 1)] = v;
  do {
    if (maps_onto(h, target, perm)) {
      std::vector<VertexId> iso(static_cast<size_t>(h.n()) + 1, 0);
      for (int v = 1; v <= h.n(); ++v) {
        iso[static_cast<size_t>(v)] = perm[static_cast<size_t>(v - 1)];
      }
      return ExceptionalWitness{kind, std::move(iso)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<std::vector<VertexId>> all_isomorphisms(const Hypertournament& h,
                                                    ExceptionalKind kind) {
  std::vector<std::vector<VertexId>> found;
  Hypertournament target = canonical(kind);
  if (h.n() != target.n() || h.k() != target.k()) return found;

  std::vector<VertexId> perm(static_cast<size_t>(h.n()));
  for (int v = 1; v <= h.n(); ++v) perm[static_cast<size_t>(v - 1)] = v;
  do {
    if (maps_onto(h, target, perm)) {
      std::vector<VertexId> iso(static_cast<size_t>(h.n()) + 1, 0);
      for (int v = 1; v <= h.n(); ++v) {
        iso[static_cast<size_t>(v)] = perm[static_cast<size_t>(v - 1)];
      }
      found.push_back(std::move(iso));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::uint64_t count_labeled_copies(ExceptionalKind kind, bool via_enumeration) {
  Hypertournament base = canonical(kind);
  if (!via_enumeration) {
    std::set<std::vector<std::vector<VertexId>>> images;
    std::vector<VertexId> perm(static_cast<size_t>(base.n()));
    for (int v = 1; v <= base.n(); ++v) perm[static_cast<size_t>(v - 1)] = v;
    do {
      std::vector<std::vector<VertexId>> image;
      image.reserve(base.arcs().size());
      for (const Arc& arc : base.arcs()) {
        std::vector<VertexId> tuple;
        tuple.reserve(arc.entries.size());
        for (VertexId v : arc.entries) {
          tuple.push_back(perm[static_cast<size_t>(v - 1)]);
        }
        image.push_back(std::move(tuple));
      }
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return images.size();
  }

  std::uint64_t copies = 0;
  for_each_labeled(base.n(), base.k(),
                   [&](std::uint64_t, const Hypertournament& h) {
                     auto witness = is_exceptional(h);
                     if (witness && witness->kind == kind) ++copies;
                     return true;
                   });
  return copies;
}

}  // namespace adhp
