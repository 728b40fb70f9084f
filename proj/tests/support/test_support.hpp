#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// The oracles deliberately use different algorithms from the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fullerene/codec.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/packing.hpp"
#include "fullerene/transforms.hpp"

#ifndef FULLERENE_TEST_DATA
#error "FULLERENE_TEST_DATA must point at tests/data"
#endif

namespace testing_support {

using namespace fullerene;

inline std::string data_path(const std::string& name) { return std::string(FULLERENE_TEST_DATA) + "/" + name; }

inline std::vector<EmbeddedCubicGraph> load(const std::string& name) {
  return decode_planar_code(read_file_bytes(data_path(name)));
}

inline EmbeddedCubicGraph load_one(const std::string& name) { return load(name).front(); }

inline EmbeddedCubicGraph c80() { return chamfer(fixture_dodecahedron()); }

/// The planar_code files holding one graph each, C30 to C40 and C60.
inline const std::vector<std::string>& single_files() {
  static const std::vector<std::string> files = {"c30.pc", "c32.pc", "c34.pc", "c36.pc",
                                                 "c38.pc", "c40.pc", "c60_ih.pc"};
  return files;
}

/// Every fullerene in tests/data.
inline std::vector<EmbeddedCubicGraph> all_data_graphs() {
  auto out = load("small_fullerenes.pc");
  for (const auto& f : single_files()) out.push_back(load_one(f));
  return out;
}

inline std::vector<Vertex> random_permutation(int n, std::uint32_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Vertex v becomes perm[v]; cyclic orders are carried over unchanged.
inline EmbeddedCubicGraph relabel(const EmbeddedCubicGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Rotation> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& r = g.rotation(v);
    rot[perm[v]] = {perm[r[0]], perm[r[1]], perm[r[2]]};
  }
  return EmbeddedCubicGraph::build(std::move(rot));
}

inline StarPacking relabel(const EmbeddedCubicGraph& relabelled, const StarPacking& p,
                           const std::vector<Vertex>& perm) {
  std::vector<Vertex> centers;
  for (const auto& s : p.stars) centers.push_back(perm[s.center]);
  return packing_from_centers(relabelled, centers);
}

/// All perfect star packings, as sorted center sets, by trying every
/// n/4-subset of vertices as centers and checking that the closed
/// neighbourhoods partition V.
inline std::vector<std::vector<Vertex>> naive_claw_partitions(const EmbeddedCubicGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> found;
  if (n % 4 != 0) return found;
  const int k = n / 4;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> covered(n, 0);
    bool ok = true;
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!pick[v]) continue;
      centers.push_back(v);
      ok = ++covered[v] == 1;
      for (Vertex w : g.rotation(v)) ok = ok && ++covered[w] == 1;
    }
    if (ok) found.push_back(centers);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(found.begin(), found.end());
  return found;
}

/// Whether V splits into closed neighbourhoods: recursion on the lowest
/// uncovered vertex, trying each star that contains it.
inline bool has_claw_partition(const EmbeddedCubicGraph& g) {
  std::vector<char> covered(g.vertex_count(), 0);
  std::function<bool()> rec = [&] {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) return true;
    const Vertex v = static_cast<Vertex>(it - covered.begin());
    std::vector<Vertex> candidates = {v};
    for (Vertex w : g.rotation(v)) candidates.push_back(w);
    for (Vertex c : candidates) {
      std::vector<Vertex> star = {c};
      for (Vertex w : g.rotation(c)) star.push_back(w);
      if (std::any_of(star.begin(), star.end(), [&](Vertex x) { return covered[x]; })) continue;
      for (Vertex x : star) covered[x] = 1;
      if (rec()) return true;
      for (Vertex x : star) covered[x] = 0;
    }
    return false;
  };
  return rec();
}

/// Every perfect matching, by recursion on the lowest unmatched vertex.
inline std::vector<std::vector<Edge>> all_perfect_matchings(const EmbeddedCubicGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Edge>> out;
  std::vector<char> used(n, 0);
  std::vector<Edge> current;
  std::function<void()> rec = [&] {
    Vertex v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      out.push_back(current);
      return;
    }
    used[v] = 1;
    for (Vertex w : g.rotation(v)) {
      if (used[w]) continue;
      used[w] = 1;
      current.emplace_back(v, w);
      rec();
      current.pop_back();
      used[w] = 0;
    }
    used[v] = 0;
  };
  rec();
  return out;
}

/// Cycle lengths of the 2-factor left after deleting a perfect matching.
inline std::vector<int> complement_cycle_lengths(const EmbeddedCubicGraph& g, const std::vector<Edge>& m) {
  const int n = g.vertex_count();
  std::vector<Vertex> mate(n, -1);
  for (const Edge& e : m) {
    mate[e.first] = e.second;
    mate[e.second] = e.first;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    Vertex prev = -1, v = s;
    while (!seen[v]) {
      seen[v] = 1;
      ++len;
      Vertex next = -1;
      for (Vertex w : g.rotation(v)) {
        if (w != mate[v] && w != prev) {
          next = w;
          break;
        }
      }
      prev = v;
      v = next;
    }
    lengths.push_back(len);
  }
  return lengths;
}

/// All cycles of length 5 or 6, each once, by depth-first search from its
/// lowest vertex.
inline std::vector<std::vector<Vertex>> short_cycles(const EmbeddedCubicGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::function<void(Vertex)> extend = [&](Vertex v) {
    for (Vertex w : g.rotation(v)) {
      if (w == path.front() && path.size() >= 5 && path[1] < path.back()) out.push_back(path);
      if (w <= path.front() || path.size() == 6 || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      extend(w);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    extend(s);
  }
  return out;
}

/// Whether the 5- and 6-cycles of g can partition its vertices: plain exact
/// cover over the cycle list.
inline bool has_short_cycle_cover(const EmbeddedCubicGraph& g) {
  const auto cycles = short_cycles(g);
  std::vector<std::vector<int>> through(g.vertex_count());
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    for (Vertex v : cycles[i]) through[v].push_back(i);
  }
  std::vector<char> covered(g.vertex_count(), 0);
  std::function<bool()> rec = [&] {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) return true;
    for (int i : through[it - covered.begin()]) {
      const auto& c = cycles[i];
      if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return covered[v]; })) continue;
      for (Vertex v : c) covered[v] = 1;
      if (rec()) return true;
      for (Vertex v : c) covered[v] = 0;
    }
    return false;
  };
  return rec();
}

}  // namespace testing_support
