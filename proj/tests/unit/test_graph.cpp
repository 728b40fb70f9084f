#include <gtest/gtest.h>

#include <set>

#include "fullerene/graph.hpp"
#include "test_support.hpp"

using namespace fullerene;
using testing_support::relabel;

namespace {

EmbeddedCubicGraph k4() { return EmbeddedCubicGraph::build(std::vector<Rotation>{{{1, 2, 3}}, {{0, 3, 2}}, {{0, 1, 3}}, {{0, 2, 1}}}); }

// Every rotation of K3,3 has genus 1.
EmbeddedCubicGraph k33() {
  return EmbeddedCubicGraph::build(std::vector<Rotation>{{{3, 4, 5}}, {{3, 4, 5}}, {{3, 4, 5}}, {{0, 1, 2}}, {{0, 1, 2}}, {{0, 1, 2}}});
}

// Two copies of K4 minus an edge joined by two edges: {0, 1} separates.
EmbeddedCubicGraph two_connected_only() {
  // copy A: 0,1 degree two in K4-e, 2,3 the others; copy B: 4..7 likewise.
  return EmbeddedCubicGraph::build(std::vector<Rotation>{{{2, 3, 4}}, {{3, 2, 5}}, {{0, 1, 3}}, {{0, 2, 1}},
                                    {{0, 7, 6}}, {{1, 6, 7}}, {{4, 7, 5}}, {{4, 5, 6}}});
}

GraphErrorCode build_error(const std::vector<std::vector<Vertex>>& lists) {
  try {
    EmbeddedCubicGraph::build(lists);
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "build accepted an invalid graph";
  return GraphErrorCode::GenusNonZero;
}

}  // namespace

TEST(Graph, DodecahedronIsAFullerene) {
  const auto g = fixture_dodecahedron();
  EXPECT_EQ(g.vertex_count(), 20);
  EXPECT_EQ(g.edge_count(), 30);
  const auto report = verify_fullerene(g);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.census.by_size, (std::map<int, int>{{5, 12}}));
  EXPECT_EQ(report.census.face_count, 12);
  EXPECT_EQ(report.axioms().size(), 6u);
}

TEST(Graph, RotationsAreNormalizedWithoutChangingCyclicOrder) {
  auto a = k4();
  auto b = EmbeddedCubicGraph::build(std::vector<Rotation>{{{2, 3, 1}}, {{3, 2, 0}}, {{1, 3, 0}}, {{2, 1, 0}}});
  EXPECT_EQ(a, b);
  for (Vertex v = 0; v < 4; ++v) {
    const auto& r = a.rotation(v);
    EXPECT_LT(r[0], r[1]);
    EXPECT_LT(r[0], r[2]);
  }
  // A different cyclic order is a different embedding.
  auto c = EmbeddedCubicGraph::build(std::vector<Rotation>{{{1, 3, 2}}, {{0, 3, 2}}, {{0, 1, 3}}, {{0, 2, 1}}});
  EXPECT_NE(a, c);
}

TEST(Graph, BuildErrors) {
  EXPECT_EQ(build_error({{1, 2}, {0, 2}, {0, 1}}), GraphErrorCode::NonCubic);
  EXPECT_EQ(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 1}}), GraphErrorCode::NonCubic);
  // 0 lists 3 but 3 does not list 0.
  EXPECT_EQ(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {1, 2, 4}, {3, 5, 6}, {4, 6, 7}}),
            GraphErrorCode::BadIdentifier);
  EXPECT_EQ(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {1, 2, 1}}), GraphErrorCode::NonCubic);
  EXPECT_EQ(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}, {5, 6, 7}, {4, 6, 7}, {4, 5, 7}, {4, 5, 6}}),
            GraphErrorCode::Disconnected);
  EXPECT_EQ(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 4}, {5, 6, 7}, {4, 6, 7}, {4, 5, 7}, {4, 5, 6}}),
            GraphErrorCode::AsymmetricAdjacency);
  EXPECT_EQ(build_error({{1, 2, -1}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), GraphErrorCode::BadIdentifier);
}

TEST(Graph, SuccessorAndPredecessorAreInverse) {
  const auto g = testing_support::c80();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.rotation(v)) {
      EXPECT_EQ(g.predecessor(v, g.successor(v, w)), w);
      EXPECT_EQ(g.slot_of(v, w) >= 0, true);
    }
  }
  EXPECT_EQ(g.slot_of(0, 0), -1);
  EXPECT_THROW(g.successor(0, 0), std::invalid_argument);
}

TEST(Graph, FacesPartitionTheDarts) {
  for (const auto& g : testing_support::all_data_graphs()) {
    const auto faces = trace_faces(g);
    std::vector<int> hits(3 * g.vertex_count(), 0);
    for (std::size_t f = 0; f < faces.faces.size(); ++f) {
      const auto& b = faces.faces[f].boundary;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const Vertex u = b[i], v = b[(i + 1) % b.size()];
        ASSERT_TRUE(g.adjacent(u, v));
        const int d = dart_index(u, g.slot_of(u, v));
        ++hits[d];
        EXPECT_EQ(faces.dart_face[d], static_cast<int>(f));
        EXPECT_EQ(faces.face_of(g, u, v), static_cast<int>(f));
        // the walk turns by the successor rule
        EXPECT_EQ(b[(i + 2) % b.size()], g.successor(v, u));
      }
    }
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_EQ(g.vertex_count() - g.edge_count() + static_cast<int>(faces.faces.size()), 2);
  }
}

TEST(Graph, FacesAroundFollowTheRotation) {
  const auto g = fixture_dodecahedron();
  const auto faces = trace_faces(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto around = faces.faces_around(g, v);
    const auto& r = g.rotation(v);
    std::set<int> distinct(around.begin(), around.end());
    EXPECT_EQ(distinct.size(), 3u);
    for (int k = 0; k < 3; ++k) {
      const auto& face = faces.faces[around[k]];
      EXPECT_TRUE(face.contains(v));
      EXPECT_TRUE(face.contains(r[k]));
      EXPECT_TRUE(face.contains(r[(k + 2) % 3]));
    }
  }
}

TEST(Graph, NonFullerenesFailTheRightAxioms) {
  const auto t = verify_fullerene(k4());
  EXPECT_FALSE(t.passed());
  EXPECT_TRUE(t.cubic.passed);
  EXPECT_TRUE(t.genus_zero.passed);
  EXPECT_TRUE(t.three_connected.passed);
  EXPECT_FALSE(t.faces_only_5_6.passed);
  EXPECT_EQ(t.faces_only_5_6.witness.size(), 3u);
  EXPECT_FALSE(t.exactly_12_pentagons.passed);

  const auto k = verify_fullerene(k33());
  EXPECT_FALSE(k.genus_zero.passed);
  EXPECT_THROW(face_census(k33()), GraphError);
  try {
    face_census(k33());
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrorCode::GenusNonZero);
  }
  EXPECT_NE(face_census(k33(), GenusPolicy::Report).euler_characteristic(), 2);

  const auto s = two_connected_only();
  EXPECT_TRUE(vertex_connectivity_at_least(s, 2));
  EXPECT_FALSE(vertex_connectivity_at_least(s, 3));
  const auto pair = find_separating_pair(s);
  ASSERT_TRUE(pair.has_value());
  const auto r = verify_fullerene(s);
  EXPECT_FALSE(r.three_connected.passed);
  EXPECT_EQ(r.three_connected.witness.size(), 2u);
}

TEST(Graph, ConnectivityOfFullerenes) {
  const auto g = fixture_dodecahedron();
  EXPECT_TRUE(vertex_connectivity_at_least(g, 3));
  EXPECT_FALSE(find_separating_pair(g).has_value());
  EXPECT_THROW(vertex_connectivity_at_least(g, 4), std::invalid_argument);
}

TEST(Graph, RelabellingPreservesTheAxiomsAndCensus) {
  for (const auto& g : {fixture_dodecahedron(), testing_support::c80(), testing_support::load_one("c60_ih.pc")}) {
    const auto base = verify_fullerene(g);
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
      const auto h = relabel(g, testing_support::random_permutation(g.vertex_count(), seed));
      const auto report = verify_fullerene(h);
      EXPECT_TRUE(report.passed());
      EXPECT_EQ(report.census.by_size, base.census.by_size);
    }
  }
}

TEST(Graph, DigestIsStableAndDiscriminating) {
  const auto g = fixture_dodecahedron();
  EXPECT_EQ(graph_digest(g), graph_digest(fixture_dodecahedron()));
  EXPECT_EQ(digest_hex(graph_digest(g)).size(), 16u);
  const auto h = relabel(g, testing_support::random_permutation(20, 7));
  EXPECT_NE(graph_digest(g), graph_digest(h));
  EXPECT_NE(graph_digest(g), graph_digest(testing_support::c80()));
}
