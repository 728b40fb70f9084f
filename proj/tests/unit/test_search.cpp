#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <set>

#include "fullerene/search.hpp"
#include "fullerene/transforms.hpp"
#include "test_support.hpp"

using namespace fullerene;
namespace ts = testing_support;

namespace {

EmbeddedCubicGraph petersen() {
  std::vector<Rotation> rot(10);
  for (int i = 0; i < 5; ++i) {
    rot[i] = {(i + 1) % 5, (i + 4) % 5, i + 5};
    rot[i + 5] = {i, 5 + (i + 2) % 5, 5 + (i + 3) % 5};
  }
  return EmbeddedCubicGraph::build(rot);
}

EmbeddedCubicGraph cube() {
  // 0..3 bottom square, 4..7 top square
  return EmbeddedCubicGraph::build(std::vector<Rotation>{{{1, 3, 4}}, {{2, 0, 5}}, {{3, 1, 6}}, {{0, 2, 7}},
                                    {{0, 7, 5}}, {{1, 4, 6}}, {{2, 5, 7}}, {{3, 6, 4}}});
}

std::size_t boost_matching_size(const std::vector<std::vector<int>>& adj) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G g(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (int w : adj[v]) {
      if (static_cast<int>(v) < w) boost::add_edge(v, w, g);
    }
  }
  std::vector<boost::graph_traits<G>::vertex_descriptor> mate(adj.size());
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  return boost::matching_size(g, &mate[0]);
}

}  // namespace

TEST(StarSearch, ModuloRejectWithoutSearch) {
  for (const auto& g : ts::all_data_graphs()) {
    if (g.vertex_count() % 8 == 0) continue;
    const auto r = find_star_packings(g, 1, SearchBudget::nodes(0));
    EXPECT_EQ(r.status, SearchStatus::ModuloReject) << g.vertex_count();
    EXPECT_EQ(r.nodes, 0u);
    EXPECT_TRUE(proven_absent(r.status, false));
  }
}

TEST(StarSearch, AgreesWithNaiveEnumeratorOnSmallFullerenes) {
  for (const auto& g : ts::load("small_fullerenes.pc")) {
    const auto naive = ts::naive_claw_partitions(g);
    const auto r = find_star_packings(g, 1000, SearchBudget::unlimited());
    ASSERT_NE(r.status, SearchStatus::BudgetExceeded);
    std::vector<std::vector<Vertex>> got;
    for (const auto& p : r.packings) {
      EXPECT_TRUE(validate_star_packing(g, p));
      got.push_back(p.centers());
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, naive) << g.vertex_count();
    EXPECT_EQ(ts::has_claw_partition(g), !naive.empty());
  }
}

TEST(StarSearch, C80PackingsAreDistinctValidAndRelabellingInvariant) {
  const auto g = ts::c80();
  const auto base = find_star_packings(g, 1000, SearchBudget::unlimited());
  ASSERT_EQ(base.status, SearchStatus::Exhausted);
  std::set<std::vector<Vertex>> distinct;
  for (const auto& p : base.packings) {
    EXPECT_TRUE(validate_star_packing(g, p));
    distinct.insert(p.centers());
  }
  EXPECT_EQ(distinct.size(), base.packings.size());
  EXPECT_GE(base.packings.size(), 1u);
  EXPECT_TRUE(ts::has_claw_partition(g));
  for (std::uint32_t seed : {11u, 12u, 13u}) {
    const auto perm = ts::random_permutation(80, seed);
    const auto h = ts::relabel(g, perm);
    const auto r = find_star_packings(h, 1000, SearchBudget::unlimited());
    EXPECT_EQ(r.packings.size(), base.packings.size());
    std::set<std::vector<Vertex>> mapped;
    for (const auto& p : base.packings) {
      std::vector<Vertex> c;
      for (Vertex v : p.centers()) c.push_back(perm[v]);
      std::sort(c.begin(), c.end());
      mapped.insert(c);
    }
    std::set<std::vector<Vertex>> found;
    for (const auto& p : r.packings) found.insert(p.centers());
    EXPECT_EQ(found, mapped);
  }
}

TEST(StarSearch, P0OnlyFindsTheP0Packing) {
  const auto g = ts::c80();
  const auto r = find_star_packings(g, 10, SearchBudget::unlimited(), {true});
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  ASSERT_EQ(r.packings.size(), 1u);
  EXPECT_TRUE(classify_packing(g, r.packings[0]).is_p0);
}

TEST(StarSearch, LimitStopsWithFound) {
  const auto r = find_star_packings(ts::c80(), 1, SearchBudget::unlimited());
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.packings.size(), 1u);
  EXPECT_THROW(find_star_packings(ts::c80(), 0, SearchBudget::unlimited()), InvalidInput);
}

TEST(StarSearch, BudgetExceededIsNotANegative) {
  const auto r = find_star_packings(ts::c80(), 1, SearchBudget::nodes(1));
  EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
  EXPECT_FALSE(proven_absent(r.status, false));
  SearchBudget tiny;
  tiny.time_limit = 1e-9;
  const auto t = find_star_packings(chamfer(ts::load_one("c40.pc")), 1000, tiny);
  EXPECT_EQ(t.status, SearchStatus::BudgetExceeded);
}

TEST(StarSearch, RejectsNonFullerenes) { EXPECT_THROW(find_star_packings(cube(), 1, SearchBudget::unlimited()), InvalidInput); }

TEST(Matching, BlossomAgreesWithBoostOnRandomGraphs) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    std::bernoulli_distribution edge(0.05 + 0.4 * (trial % 7) / 7.0);
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (edge(rng)) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
      }
    }
    const auto mate = maximum_matching(adj);
    ASSERT_EQ(static_cast<int>(mate.size()), n);
    std::size_t size = 0;
    for (int v = 0; v < n; ++v) {
      if (mate[v] < 0) continue;
      ASSERT_EQ(mate[mate[v]], v);
      ASSERT_NE(std::find(adj[v].begin(), adj[v].end(), mate[v]), adj[v].end());
      if (v < mate[v]) ++size;
    }
    EXPECT_EQ(size, boost_matching_size(adj)) << "trial " << trial;
  }
}

TEST(Matching, PerfectMatchingOnFixtures) {
  for (const auto& g : {fixture_dodecahedron(), ts::c80(), ts::load_one("c60_ih.pc"), petersen()}) {
    const auto m = find_perfect_matching(g);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(static_cast<int>(m->size()), g.vertex_count() / 2);
    EXPECT_TRUE(validate_perfect_matching(g, *m));
  }
}

TEST(PseudoMatching, Arithmetic) {
  const auto g = fixture_dodecahedron();
  EXPECT_EQ(find_pseudo_matching(g, 6, SearchBudget::unlimited()).status, SearchStatus::ArithmeticInfeasible);
  EXPECT_EQ(find_pseudo_matching(g, -1, SearchBudget::unlimited()).status, SearchStatus::ArithmeticInfeasible);
  const auto zero = find_pseudo_matching(g, 0, SearchBudget::unlimited());
  ASSERT_TRUE(zero.witness);
  EXPECT_EQ(zero.witness->pairs.size(), 10u);
  EXPECT_TRUE(validate_pseudo_matching(g, *zero.witness));
}

TEST(PseudoMatching, AllStarsOnC20IsExhausted) {
  // five stars would be a perfect star packing of C20, which the naive
  // enumerator shows does not exist
  ASSERT_TRUE(ts::naive_claw_partitions(fixture_dodecahedron()).empty());
  const auto r = find_pseudo_matching(fixture_dodecahedron(), 5, SearchBudget::unlimited());
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  EXPECT_FALSE(r.witness);
}

TEST(PseudoMatching, StarsOnC80) {
  const auto g = ts::c80();
  for (int k : {1, 2, 3, 4}) {
    const auto r = find_pseudo_matching(g, k, SearchBudget::nodes(1'000'000));
    ASSERT_TRUE(r.witness) << k;
    EXPECT_EQ(static_cast<int>(r.witness->stars.size()), k);
    EXPECT_EQ(static_cast<int>(r.witness->pairs.size()), (80 - 4 * k) / 2);
    EXPECT_TRUE(validate_pseudo_matching(g, *r.witness));
  }
}

TEST(CycleFactor, NoneOnC20AgreesWithMatchingEnumeration) {
  const auto g = fixture_dodecahedron();
  bool oracle = false;
  for (const auto& m : ts::all_perfect_matchings(g)) {
    const auto lengths = ts::complement_cycle_lengths(g, m);
    oracle = oracle || std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 5 || l == 6; });
  }
  EXPECT_FALSE(oracle);
  const auto r = find_cycle_factor_5_6(g, nullptr, SearchBudget::unlimited());
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  EXPECT_FALSE(r.witness);
}

TEST(CycleFactor, ShortCyclesOfTheDodecahedronAreItsFaces) {
  EXPECT_EQ(ts::short_cycles(fixture_dodecahedron()).size(), 12u);
  EXPECT_EQ(ts::short_cycles(ts::c80()).size(), 42u);
}

TEST(CycleFactor, ExistenceAgreesWithExactCoverOracle) {
  std::vector<EmbeddedCubicGraph> graphs = ts::all_data_graphs();
  graphs.push_back(ts::c80());
  const auto star = star_transform(ts::c80(), chamfer_center_packing(fixture_dodecahedron()));
  graphs.push_back(star.graph);
  graphs.push_back(semi_star_transform(ts::c80(), chamfer_center_packing(fixture_dodecahedron())).graph);
  for (const auto& g : graphs) {
    const auto r = find_cycle_factor_5_6(g, nullptr, SearchBudget::nodes(50'000'000));
    ASSERT_NE(r.status, SearchStatus::BudgetExceeded) << g.vertex_count();
    EXPECT_EQ(r.witness.has_value(), ts::has_short_cycle_cover(g)) << g.vertex_count();
    if (r.witness) {
      EXPECT_TRUE(validate_cycle_factor(g, *r.witness));
    }
  }
}

TEST(CycleFactor, HintsAreCheckedBeforeUse) {
  const auto star = star_transform(ts::c80(), chamfer_center_packing(fixture_dodecahedron()));
  const auto& g = star.graph;
  const auto hint = extract_cycle_factor_from_provenance(g, star.provenance);
  const auto used = find_cycle_factor_5_6(g, &hint, SearchBudget::nodes(0));
  EXPECT_TRUE(used.hint_used);
  EXPECT_EQ(used.status, SearchStatus::Found);
  CycleFactor bad = hint;
  bad.cycles.pop_back();
  const auto rejected = find_cycle_factor_5_6(g, &bad, SearchBudget::nodes(50'000'000));
  EXPECT_TRUE(rejected.hint_rejected);
  EXPECT_FALSE(rejected.hint_used);
  ASSERT_TRUE(rejected.witness);
  EXPECT_TRUE(validate_cycle_factor(g, *rejected.witness));
}

TEST(Hamilton, FixturesHaveCycles) {
  for (const auto& g : {fixture_dodecahedron(), ts::c80(), ts::load_one("c60_ih.pc")}) {
    const auto r = find_hamiltonian_cycle(g, SearchBudget::nodes(10'000'000));
    ASSERT_EQ(r.status, SearchStatus::Found);
    const auto& c = *r.cycle;
    EXPECT_TRUE(validate_hamiltonian_cycle(g, c));
    EXPECT_EQ(c.front(), 0);
    EXPECT_LT(c[1], c.back());
  }
}

TEST(Hamilton, PetersenIsExhausted) {
  const auto r = find_hamiltonian_cycle(petersen(), SearchBudget::unlimited());
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  EXPECT_TRUE(proven_absent(r.status, false));
}

TEST(Hamilton, RelabelledInputs) {
  const auto g = ts::c80();
  for (std::uint32_t seed = 1; seed <= 4; ++seed) {
    const auto h = ts::relabel(g, ts::random_permutation(80, seed));
    const auto r = find_hamiltonian_cycle(h, SearchBudget::nodes(10'000'000));
    ASSERT_TRUE(r.cycle) << seed;
    EXPECT_TRUE(validate_hamiltonian_cycle(h, *r.cycle));
  }
}

TEST(Hamilton, BudgetExceeded) {
  EXPECT_EQ(find_hamiltonian_cycle(ts::c80(), SearchBudget::nodes(1)).status, SearchStatus::BudgetExceeded);
}

TEST(SplitCycle, DivisorsOfTwenty) {
  const auto g = fixture_dodecahedron();
  const auto r = find_hamiltonian_cycle(g, SearchBudget::unlimited());
  ASSERT_TRUE(r.cycle);
  for (int k : {1, 2, 4, 5, 10, 20}) {
    const auto p = split_cycle_into_paths(*r.cycle, k);
    EXPECT_EQ(p.k, k);
    EXPECT_EQ(static_cast<int>(p.paths.size()), 20 / k);
    EXPECT_TRUE(validate_path_packing(g, p));
    EXPECT_EQ(p.paths.front().front(), 0);
  }
  EXPECT_THROW(split_cycle_into_paths(*r.cycle, 3), NotDivisible);
  EXPECT_THROW(split_cycle_into_paths(*r.cycle, 0), NotDivisible);
}

TEST(SplitCycle, StartsAtLowestVertexAndKeepsDirection) {
  const std::vector<Vertex> cycle = {4, 2, 0, 5, 1, 3};
  const auto p = split_cycle_into_paths(cycle, 3);
  EXPECT_EQ(p.paths, (std::vector<std::vector<Vertex>>{{0, 5, 1}, {3, 4, 2}}));
}
