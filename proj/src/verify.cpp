// Independent verifiers. Only adjacency queries are used here.

#include <algorithm>
#include <set>

#include "fullerene/packing.hpp"

namespace fullerene {

namespace {

std::string id(Vertex v) { return std::to_string(v + 1); }

// Marks vertices as covered; reports the first double cover or bad id.
class Cover {
 public:
  explicit Cover(int n) : seen_(n, 0) {}

  Validation take(Vertex v) {
    if (v < 0 || v >= static_cast<int>(seen_.size())) return Validation::fail("vertex id out of range");
    if (seen_[v]) return Validation::fail("vertex " + id(v) + " covered twice");
    seen_[v] = 1;
    return Validation::pass();
  }

  Validation spanning() const {
    for (std::size_t v = 0; v < seen_.size(); ++v) {
      if (!seen_[v]) return Validation::fail("vertex " + id(static_cast<Vertex>(v)) + " not covered");
    }
    return Validation::pass();
  }

 private:
  std::vector<char> seen_;
};

Validation check_star(const EmbeddedCubicGraph& g, const Star& s, Cover& cover) {
  if (auto r = cover.take(s.center); !r) return r;
  for (Vertex leaf : s.leaves) {
    if (leaf == s.center) return Validation::fail("center " + id(s.center) + " is its own leaf");
    if (auto r = cover.take(leaf); !r) return r;
    if (!g.adjacent(s.center, leaf)) {
      return Validation::fail("leaf " + id(leaf) + " not adjacent to center " + id(s.center));
    }
  }
  return Validation::pass();
}

Validation check_path_edges(const EmbeddedCubicGraph& g, const std::vector<Vertex>& seq, bool closed) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1])) {
      return Validation::fail(id(seq[i]) + "-" + id(seq[i + 1]) + " is not an edge");
    }
  }
  if (closed && !g.adjacent(seq.back(), seq.front())) {
    return Validation::fail(id(seq.back()) + "-" + id(seq.front()) + " is not an edge");
  }
  return Validation::pass();
}

}  // namespace

Validation validate_star_packing(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  Cover cover(g.vertex_count());
  for (const Star& s : packing.stars) {
    if (auto r = check_star(g, s, cover); !r) return r;
  }
  if (4 * static_cast<int>(packing.stars.size()) != g.vertex_count()) {
    return Validation::fail("star count does not match vertex count / 4");
  }
  return cover.spanning();
}

Validation validate_perfect_matching(const EmbeddedCubicGraph& g, const std::vector<Edge>& matching) {
  Cover cover(g.vertex_count());
  for (const Edge& e : matching) {
    if (!g.adjacent(e.first, e.second)) {
      return Validation::fail(id(e.first) + "-" + id(e.second) + " is not an edge");
    }
    if (auto r = cover.take(e.first); !r) return r;
    if (auto r = cover.take(e.second); !r) return r;
  }
  return cover.spanning();
}

Validation validate_pseudo_matching(const EmbeddedCubicGraph& g, const PseudoMatching& pm) {
  Cover cover(g.vertex_count());
  for (const Star& s : pm.stars) {
    if (auto r = check_star(g, s, cover); !r) return r;
  }
  for (const Edge& e : pm.pairs) {
    if (!g.adjacent(e.first, e.second)) {
      return Validation::fail(id(e.first) + "-" + id(e.second) + " is not an edge");
    }
    if (auto r = cover.take(e.first); !r) return r;
    if (auto r = cover.take(e.second); !r) return r;
  }
  if (2 * pm.pairs.size() + 4 * pm.stars.size() != static_cast<std::size_t>(g.vertex_count())) {
    return Validation::fail("component sizes do not sum to the vertex count");
  }
  return cover.spanning();
}

Validation validate_cycle_factor(const EmbeddedCubicGraph& g, const CycleFactor& factor) {
  Cover cover(g.vertex_count());
  for (const auto& cycle : factor.cycles) {
    if (cycle.size() != 5 && cycle.size() != 6) {
      return Validation::fail("cycle of length " + std::to_string(cycle.size()));
    }
    for (Vertex v : cycle) {
      if (auto r = cover.take(v); !r) return r;
    }
    if (auto r = check_path_edges(g, cycle, true); !r) return r;
  }
  return cover.spanning();
}

Validation validate_hamiltonian_cycle(const EmbeddedCubicGraph& g, const std::vector<Vertex>& cycle) {
  if (static_cast<int>(cycle.size()) != g.vertex_count()) {
    return Validation::fail("cycle has " + std::to_string(cycle.size()) + " vertices");
  }
  Cover cover(g.vertex_count());
  for (Vertex v : cycle) {
    if (auto r = cover.take(v); !r) return r;
  }
  return check_path_edges(g, cycle, true);
}

Validation validate_path_packing(const EmbeddedCubicGraph& g, const PathPacking& packing) {
  if (packing.k <= 0) return Validation::fail("path order must be positive");
  Cover cover(g.vertex_count());
  for (const auto& path : packing.paths) {
    if (static_cast<int>(path.size()) != packing.k) {
      return Validation::fail("path with " + std::to_string(path.size()) + " vertices");
    }
    for (Vertex v : path) {
      if (auto r = cover.take(v); !r) return r;
    }
    if (auto r = check_path_edges(g, path, false); !r) return r;
  }
  if (packing.k * static_cast<int>(packing.paths.size()) != g.vertex_count()) {
    return Validation::fail("k * paths != vertex count");
  }
  return cover.spanning();
}

int CycleFactor::count_of_length(std::size_t length) const {
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(),
                                        [length](const auto& c) { return c.size() == length; }));
}

}  // namespace fullerene
