#include <vector>

#include "doctest.h"

#include "adhp/core.hpp"

using namespace adhp;

namespace {

Hypertournament mk(int n, int k, std::vector<std::vector<VertexId>> tuples) {
  std::vector<Arc> arcs;
  for (auto& t : tuples) arcs.push_back(Arc{std::move(t)});
  return Hypertournament::build(n, k, std::move(arcs));
}

// The 4-vertex 3-hypertournament used as a fixture throughout; arc ids 0-3.
Hypertournament quad() {
  return mk(4, 3, {{2, 3, 4}, {4, 1, 2}, {3, 4, 1}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("binomial basics and saturation") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(100, 3) == 161700);
  // Past 64 bits the value pins at the maximum instead of wrapping.
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("arc membership and precedence") {
  Arc a{{3, 1, 4}};
  CHECK(a.contains(3));
  CHECK(!a.contains(2));
  CHECK(a.position_of(4) == 2);
  CHECK(a.position_of(2) == -1);
  CHECK(precedes(a, 3, 4));
  CHECK(!precedes(a, 4, 1));
  try {
    precedes(a, 1, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SameVertex);
  }
  try {
    precedes(a, 1, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VertexNotInArc);
  }
}

TEST_CASE("build validates the shape") {
  CHECK_NOTHROW(mk(3, 2, {{1, 2}, {2, 3}, {3, 1}}));

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;  // placeholder: "did not throw"
  };

  CHECK(kind_of([] { mk(3, 2, {{1, 2}, {2, 3}}); }) ==
        ErrorKind::WrongArcCount);
  CHECK(kind_of([] { mk(3, 2, {{1, 2}, {2, 1}, {3, 1}}); }) ==
        ErrorKind::DuplicateSubset);
  CHECK(kind_of([] { mk(3, 2, {{1, 2}, {2, 3}, {3, 1, 2}}); }) ==
        ErrorKind::MalformedArc);
  CHECK(kind_of([] { mk(3, 2, {{1, 2}, {2, 3}, {3, 3}}); }) ==
        ErrorKind::MalformedArc);
  CHECK(kind_of([] { mk(3, 2, {{1, 2}, {2, 3}, {3, 4}}); }) ==
        ErrorKind::MalformedArc);
  CHECK(kind_of([] { mk(1, 2, {}); }) == ErrorKind::PreconditionViolated);
  // Signature whose arc table would not fit under the storage cap.
  CHECK(kind_of([] { Hypertournament::build(80, 40, {}, 1000); }) ==
        ErrorKind::CapExceeded);
}

TEST_CASE("precedence lists") {
  Hypertournament h = quad();
  // Arcs with 1 before 2: (4,1,2) id 1 and (1,2,3) id 3.
  CHECK(h.arcs_preceding(1, 2) == std::vector<ArcId>{1, 3});
  CHECK(h.arcs_preceding(2, 1).empty());
  CHECK(h.count_preceding(3, 4) == 2);  // (2,3,4) and (3,4,1)
  CHECK(h.count_preceding(4, 3) == 0);

  // Complement identity: |A(x,y)| + |A(y,x)| = C(n-2, k-2) for every pair.
  for (VertexId x = 1; x <= 4; ++x) {
    for (VertexId y = x + 1; y <= 4; ++y) {
      CHECK(h.count_preceding(x, y) + h.count_preceding(y, x) ==
            binomial(2, 1));
    }
  }
}

TEST_CASE("arc lookup by subset") {
  Hypertournament h = quad();
  CHECK(h.arc_on_subset({1, 2, 4}) == ArcId{1});
  CHECK(h.arc_on_subset({4, 2, 1}) == ArcId{1});  // order irrelevant
  CHECK(!h.arc_on_subset({1, 2}).has_value());
  CHECK(!h.arc_on_subset({1, 2, 5}).has_value());
}

TEST_CASE("reverse flips every tuple and is an involution") {
  Hypertournament h = quad();
  Hypertournament r = reverse(h);
  CHECK(r.arc(0).entries == std::vector<VertexId>{4, 3, 2});
  CHECK(r.arcs_preceding(2, 1) == std::vector<ArcId>{1, 3});
  Hypertournament rr = reverse(r);
  for (ArcId id = 0; id < h.arc_count(); ++id) {
    CHECK(rr.arc(id).entries == h.arc(id).entries);
  }
}

TEST_CASE("relabelings") {
  Relabeling id = Relabeling::identity(4);
  CHECK(id.parent_n() == 4);
  CHECK(id.child_of(3) == 3);
  CHECK(id.parent_of(3) == 3);

  Relabeling rho = Relabeling::permutation({0, 3, 1, 2});
  CHECK(rho.child_of(1) == 3);
  CHECK(rho.parent_of(3) == 1);
  CHECK_THROWS_AS(Relabeling::permutation({0, 1, 1, 3}), Error);

  Hypertournament g = apply_relabeling(
      mk(3, 2, {{1, 2}, {2, 3}, {3, 1}}), rho);
  // Ids stay put while the labels move: (1,2)->(3,1), (2,3)->(1,2), (3,1)->(2,3).
  CHECK(g.arc(0).entries == std::vector<VertexId>{3, 1});
  CHECK(g.arc(1).entries == std::vector<VertexId>{1, 2});
  CHECK(g.arc(2).entries == std::vector<VertexId>{2, 3});
}

TEST_CASE("partial relabelings reject unmapped lookups") {
  Relabeling drop;
  drop.parent_to_child = {0, 1, 0, 2};  // vertex 2 removed
  CHECK(drop.child_of(2) == 0);
  CHECK(drop.parent_of(2) == 3);
  CHECK_THROWS_AS(drop.parent_of(3), Error);
}

TEST_CASE("delete_vertex compacts labels and tracks provenance") {
  // (5,3): delete vertex 3; arcs avoiding 3 survive with labels 4->3, 5->4.
  std::vector<std::vector<VertexId>> tuples = {
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
      {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  Hypertournament h = mk(5, 3, tuples);
  auto res = delete_vertex(h, 3);
  CHECK(res.child.n() == 4);
  CHECK(res.child.k() == 3);
  CHECK(res.child.arc_count() == 4);
  CHECK(res.corr.deleted_vertices == std::vector<VertexId>{3});
  CHECK(res.corr.deleted_arcs == std::vector<ArcId>{0, 3, 4, 6, 7, 9});
  CHECK(res.corr.child_to_parent == std::vector<ArcId>{1, 2, 5, 8});
  CHECK(res.relabel.child_of(4) == 3);
  CHECK(res.relabel.child_of(3) == 0);
  CHECK(res.child.arc(2).entries == std::vector<VertexId>{1, 3, 4});  // (1,4,5)
  CHECK(res.corr.parent_arc(2) == 5);
  CHECK_THROWS_AS(res.corr.parent_arc(4), Error);

  // Deleting from k = n-1 would leave k > n', which is no longer an instance.
  try {
    delete_vertex(quad(), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArityTooLarge);
  }
}

TEST_CASE("case1_reduce normalizes arc a and drops one vertex per arc") {
  Hypertournament h = quad();
  auto red = case1_reduce(h);
  // Arc 0 is already (2,3,4), so the relabeling is the identity here.
  CHECK(red.arc_a == 0);
  CHECK(red.arc_b == 3);  // (1,2,3) avoids the top vertex
  CHECK(red.relabel.child_of(1) == 1);
  CHECK(red.relabel.child_of(4) == 4);
  CHECK(red.child.n() == 3);
  CHECK(red.child.k() == 2);
  // (4,1,2) drops 4, (3,4,1) drops 4, (1,2,3) drops 1.
  CHECK(red.child.arc(0).entries == std::vector<VertexId>{1, 2});
  CHECK(red.child.arc(1).entries == std::vector<VertexId>{3, 1});
  CHECK(red.child.arc(2).entries == std::vector<VertexId>{2, 3});
  CHECK(red.corr.child_to_parent == std::vector<ArcId>{1, 2, 3});
  CHECK(red.corr.deleted_arcs == std::vector<ArcId>{0});

  // Non-trivial tuple order: arc 0 = (3,1,4) maps 3->2, 1->3, 4->4, 2->1.
  Hypertournament g = mk(4, 3, {{3, 1, 4}, {4, 1, 2}, {2, 3, 4}, {1, 2, 3}});
  auto red2 = case1_reduce(g);
  CHECK(red2.relabel.child_of(3) == 2);
  CHECK(red2.relabel.child_of(2) == 1);
  CHECK(red2.child.arc_count() == 3);

  CHECK_THROWS_AS(case1_reduce(mk(3, 2, {{1, 2}, {2, 3}, {3, 1}})), Error);
}

TEST_CASE("format_instance prints header plus one tuple per line") {
  CHECK(format_instance(mk(3, 2, {{1, 2}, {2, 3}, {3, 1}})) ==
        "3 2\n1 2\n2 3\n3 1\n");
}
