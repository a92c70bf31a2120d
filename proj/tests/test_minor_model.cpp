#include <catch2/catch_amalgamated.hpp>

#include "sct/generators.hpp"
#include "sct/minor_model.hpp"
#include "support/graph_enum.hpp"

using namespace sct;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

InducedMinorModel singleton_model(int n, int s, int t, const std::vector<int>& verts) {
  InducedMinorModel m;
  m.s = s;
  m.t = t;
  for (int v : verts) m.branch_sets.push_back(VertexSet::of(n, {v}));
  return m;
}

}  // namespace

TEST_CASE("verify model") {
  Graph c4 = cycle(4);
  CHECK(verify_model(c4, singleton_model(4, 1, 4, {0, 1, 2, 3})).ok);

  auto bad = verify_model(c4, singleton_model(4, 1, 4, {0, 2, 1, 3}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("adjacency mismatch") == 0);

  // 2C5 host with the identity model
  Graph g(12);
  for (int b : {0, 5})
    for (int i = 0; i < 5; ++i) g.add_edge(b + i, b + (i + 1) % 5);
  CHECK(verify_model(g, singleton_model(12, 2, 5, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9})).ok);

  auto m = singleton_model(4, 1, 4, {0, 1, 2});
  CHECK(verify_model(c4, m).diagnostic.find("shape") == 0);
  m.branch_sets.push_back(VertexSet(4));
  CHECK(verify_model(c4, m).diagnostic.find("empty") == 0);

  InducedMinorModel ov = singleton_model(4, 1, 4, {0, 1, 2, 2});
  CHECK(verify_model(c4, ov).diagnostic.find("overlap") == 0);

  InducedMinorModel dis;
  dis.s = 1;
  dis.t = 3;
  dis.branch_sets = {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1}), VertexSet::of(4, {3})};
  CHECK(verify_model(c4, dis).diagnostic.find("disconnected") == 0);
}

TEST_CASE("sC_t brute force, fixed graphs") {
  CHECK(contains_sct_bruteforce(cycle(7), 1, 4));  // contract arcs

  Graph tree(8);
  for (int i = 1; i < 8; ++i) tree.add_edge(i, (i - 1) / 2);
  CHECK_FALSE(contains_sct_bruteforce(tree, 1, 4));
  CHECK_FALSE(contains_sct_bruteforce(tree, 2, 4));

  // 2C4 joined by one edge: the bridge makes every split adjacent
  Graph joined(8);
  for (int b : {0, 4})
    for (int i = 0; i < 4; ++i) joined.add_edge(b + i, b + (i + 1) % 4);
  joined.add_edge(0, 4);
  CHECK_FALSE(contains_sct_bruteforce(joined, 2, 4));
  CHECK(contains_sct_bruteforce(joined, 1, 4));

  Graph big(13);
  CHECK_THROWS_AS(contains_sct_bruteforce(big, 1, 4), oracle_cap_exceeded);
}

TEST_CASE("brute force matches definitional expansion at s=1") {
  for (const Graph& g : testsupport::all_graphs_up_to(6)) {
    bool holes = !all_holes_bruteforce(g, 4).empty();
    CHECK(contains_sct_bruteforce(g, 1, 4) == holes);
  }
}

TEST_CASE("chordality") {
  CHECK(is_chordal(Graph(0)));
  CHECK(is_chordal(cycle(3)));
  CHECK_FALSE(is_chordal(cycle(4)));
  CHECK_FALSE(is_chordal(cycle(6)));
  for (uint64_t seed = 0; seed < 25; ++seed) {
    InstanceSpec spec;
    spec.kind = "chordal";
    spec.n = 12;
    spec.seed = seed;
    CHECK(is_chordal(generate(spec).graph));
  }
  // chordal iff no hole at all
  for (const Graph& g : testsupport::all_graphs_up_to(6))
    CHECK(is_chordal(g) == all_holes_bruteforce(g, 4).empty());
}

TEST_CASE("hole-packing characterization matches the assignment oracle") {
  for (const Graph& g : testsupport::all_graphs_up_to(6)) {
    for (int s : {1, 2})
      for (int t : {4, 5})
        CHECK(contains_sct_via_holes(g, s, t) == contains_sct_bruteforce(g, s, t));
  }
  // s = 0 is vacuous
  CHECK(contains_sct_via_holes(Graph(3), 0, 4));
}

TEST_CASE("planted patterns are found") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    InstanceSpec spec;
    spec.kind = "planted_sct";
    spec.n = 12;
    spec.s = 2;
    spec.t = 4;
    spec.noise = int(seed);
    spec.seed = seed;
    Graph g = generate(spec).graph;
    CHECK(contains_sct_bruteforce(g, 2, 4));
    CHECK(contains_sct_via_holes(g, 2, 4));
  }
}
