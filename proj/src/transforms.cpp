#include "fullerene/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fullerene {

const char* to_string(TransformErrorCode code) {
  switch (code) {
    case TransformErrorCode::InvalidInput: return "InvalidInput";
    case TransformErrorCode::NotP0: return "NotP0";
    case TransformErrorCode::NotBalanced: return "NotBalanced";
    case TransformErrorCode::OddStarCount: return "OddStarCount";
    case TransformErrorCode::ChordInfeasible: return "ChordInfeasible";
    case TransformErrorCode::PostconditionFailed: return "PostconditionFailed";
    case TransformErrorCode::NotDirect: return "NotDirect";
    case TransformErrorCode::ProvenanceMismatch: return "ProvenanceMismatch";
  }
  return "?";
}

namespace {

// Rotated to start at its minimum; direction kept.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  return cycle;
}

std::set<std::vector<Vertex>> face_set(const FaceSet& faces) {
  std::set<std::vector<Vertex>> out;
  for (const auto& f : faces.faces) out.insert(canonical_cycle(f.boundary));
  return out;
}

void require_fullerene(const EmbeddedCubicGraph& g) {
  auto report = verify_fullerene(g);
  if (!report.passed()) throw TransformError(TransformErrorCode::InvalidInput, "input is not a fullerene graph");
}

void postcondition(bool ok, const std::string& what) {
  if (!ok) throw TransformError(TransformErrorCode::PostconditionFailed, what);
}

// Validates the packing and checks P0 and balance.
PackingClassification require_balanced_p0(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  if (auto v = validate_star_packing(g, packing); !v) {
    throw TransformError(TransformErrorCode::InvalidInput, "invalid star packing: " + v.reason);
  }
  auto cls = classify_packing(g, packing);
  if (!cls.is_p0) throw TransformError(TransformErrorCode::NotP0, "a star center lies on a pentagon");
  if (!cls.is_balanced) {
    throw TransformError(TransformErrorCode::NotBalanced,
                         std::to_string(cls.unbalanced_hexagons.size()) +
                             " hexagon(s) with one center or non-antipodal centers");
  }
  return cls;
}

// Packing with stars sorted by center and leaves in rotation order.
StarPacking canonical_packing(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  return packing_from_centers(g, packing.centers());
}

std::vector<Vertex> center_of(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  std::vector<Vertex> owner(g.vertex_count(), -1);
  for (const Star& s : packing.stars) {
    owner[s.center] = s.center;
    for (Vertex l : s.leaves) owner[l] = s.center;
  }
  return owner;
}

}  // namespace

EmbeddedCubicGraph chamfer(const EmbeddedCubicGraph& g) {
  require_fullerene(g);
  const int n = g.vertex_count();
  auto corner = [&](Vertex tail, Vertex head) { return n + dart_index(tail, g.slot_of(tail, head)); };

  std::vector<Rotation> rot(4 * n);
  for (Vertex u = 0; u < n; ++u) {
    const Rotation& r = g.rotation(u);
    rot[u] = {corner(u, r[0]), corner(u, r[1]), corner(u, r[2])};
    for (Vertex y : r) {
      // b(f,u) for the face f through x -> u -> y: neighbours b(f,x), b(f,y), u.
      const Vertex x = g.predecessor(u, y);
      const Vertex z = g.successor(y, u);
      rot[corner(u, y)] = {corner(x, u), corner(y, z), u};
    }
  }
  auto out = EmbeddedCubicGraph::build(std::move(rot));

  postcondition(out.vertex_count() == 4 * n, "chamfer vertex count");
  const auto in_census = face_census(g);
  const auto out_census = face_census(out, GenusPolicy::Report);
  postcondition(out_census.genus_zero(), "chamfer output is not planar");
  postcondition(out_census.pentagons() == in_census.pentagons(), "chamfer pentagon count");
  postcondition(out_census.hexagons() == in_census.hexagons() + g.edge_count(), "chamfer hexagon count");
  return out;
}

StarPacking chamfer_center_packing(const EmbeddedCubicGraph& g) {
  const EmbeddedCubicGraph c = chamfer(g);
  std::vector<Vertex> centers(g.vertex_count());
  std::iota(centers.begin(), centers.end(), 0);
  return packing_from_centers(c, centers);
}

StarTransformResult star_transform(const EmbeddedCubicGraph& g, const StarPacking& packing_in) {
  require_fullerene(g);
  const auto cls = require_balanced_p0(g, packing_in);
  const StarPacking packing = canonical_packing(g, packing_in);
  const FaceSet faces = trace_faces(g);
  const int n = g.vertex_count();
  const int stars = static_cast<int>(packing.stars.size());

  StarTransformProvenance prov;
  prov.input_digest = graph_digest(g);
  prov.input_vertices = n;
  prov.packing = packing;
  prov.renumber.assign(n, -1);
  std::vector<int> star_index(n, -1);
  for (int i = 0; i < stars; ++i) star_index[packing.stars[i].center] = i;

  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (star_index[v] < 0) prov.renumber[v] = next++;
  }
  const Vertex ring_base = next;
  const int total = ring_base + 6 * stars;

  // Ring vertex pointing into each face, per face.
  std::vector<std::vector<Vertex>> inward(faces.faces.size());
  prov.stars.resize(stars);
  for (int i = 0; i < stars; ++i) {
    const Star& s = packing.stars[i];
    auto& img = prov.stars[i];
    img.center = s.center;
    img.leaves = s.leaves;
    for (int k = 0; k < 6; ++k) img.ring[k] = ring_base + 6 * i + k;
    // v2 sits in the corner u1-u-u2, i.e. the face of the dart u -> u2.
    for (int k = 0; k < 3; ++k) {
      const int face = faces.face_of(g, s.center, s.leaves[(k + 1) % 3]);
      inward[face].push_back(img.ring[2 * k + 1]);
    }
  }

  std::vector<Vertex> partner(total, -1);
  for (std::size_t f = 0; f < inward.size(); ++f) {
    if (inward[f].empty()) continue;
    postcondition(inward[f].size() == 2, "face with a single inward ring vertex");
    partner[inward[f][0]] = inward[f][1];
    partner[inward[f][1]] = inward[f][0];
    prov.cross_edges.emplace_back(inward[f][0], inward[f][1]);
  }
  std::sort(prov.cross_edges.begin(), prov.cross_edges.end());

  std::vector<Rotation> rot(total);
  for (Vertex v = 0; v < n; ++v) {
    if (star_index[v] >= 0) continue;
    Rotation r = g.rotation(v);
    for (Vertex& w : r) {
      if (star_index[w] >= 0) {
        const auto& img = prov.stars[star_index[w]];
        const int k = static_cast<int>(std::find(img.leaves.begin(), img.leaves.end(), v) - img.leaves.begin());
        w = img.ring[2 * k];
      } else {
        w = prov.renumber[w];
      }
    }
    rot[prov.renumber[v]] = r;
  }
  for (auto& img : prov.stars) {
    for (int k = 0; k < 6; ++k) {
      const Vertex self = img.ring[k];
      const Vertex after = img.ring[(k + 1) % 6];
      const Vertex before = img.ring[(k + 5) % 6];
      const Vertex outward = (k % 2 == 0) ? prov.renumber[img.leaves[k / 2]] : partner[self];
      rot[self] = {outward, after, before};
      if (k % 2 == 1) img.cross[k / 2] = partner[self];
    }
  }

  EmbeddedCubicGraph out = [&] {
    try {
      return EmbeddedCubicGraph::build(std::move(rot));
    } catch (const GraphError& e) {
      throw TransformError(TransformErrorCode::PostconditionFailed, std::string("star transform: ") + e.what());
    }
  }();

  for (const auto& f : faces.faces) {
    std::vector<Vertex> mapped;
    bool has_center = false;
    for (Vertex v : f.boundary) {
      if (star_index[v] >= 0) has_center = true;
      mapped.push_back(prov.renumber[v]);
    }
    if (f.size() == 5) prov.pentagons.push_back(mapped);
    if (f.size() == 6 && !has_center) prov.empty_hexagons.push_back(mapped);
  }

  // Postconditions.
  postcondition(4 * out.vertex_count() == 9 * n, "vertex count is not 9n/4");
  postcondition(8 * out.edge_count() == 27 * n, "edge count is not 27n/8");
  const VerificationReport report = verify_fullerene(out);
  postcondition(report.passed(), "output is not a fullerene");
  postcondition(8 * (report.census.face_count - 2) == 9 * n, "face count is not 9n/8 + 2");
  postcondition(2 * static_cast<int>(prov.cross_edges.size()) == 3 * stars, "cross edge count is not 3 stars / 2");
  const auto out_faces = face_set(trace_faces(out));
  for (const auto& p : prov.pentagons) postcondition(out_faces.count(canonical_cycle(p)) == 1, "a pentagon did not survive");
  for (const auto& h : prov.empty_hexagons) postcondition(out_faces.count(canonical_cycle(h)) == 1, "a 0-center hexagon did not survive");
  for (const auto& img : prov.stars) {
    // The ring is traversed v6 -> v5 -> ... under the face successor rule.
    std::vector<Vertex> ring(img.ring.rbegin(), img.ring.rend());
    postcondition(out_faces.count(canonical_cycle(ring)) == 1, "a star ring is not a face");
  }
  const int two_center = cls.hexagon_center_histogram.count(2) ? cls.hexagon_center_histogram.at(2) : 0;
  postcondition(report.census.hexagons() ==
                    static_cast<int>(prov.empty_hexagons.size()) + 2 * two_center + stars,
                "2-center hexagons did not split in two");

  prov.output_vertices = out.vertex_count();
  prov.output_digest = graph_digest(out);
  return {std::move(out), std::move(prov)};
}

ChordAssignment solve_chord_assignment(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  require_balanced_p0(g, packing);
  const FaceSet faces = trace_faces(g);
  std::vector<char> is_center(g.vertex_count(), 0);
  for (const Star& s : packing.stars) is_center[s.center] = 1;

  ChordAssignment out;
  std::map<StarEdge, std::vector<std::pair<int, int>>> membership;  // -> (hexagon, pair)
  for (int f = 0; f < static_cast<int>(faces.faces.size()); ++f) {
    const auto& b = faces.faces[f].boundary;
    if (b.size() != 6) continue;
    int first = -1;
    for (int i = 0; i < 3; ++i) {
      if (is_center[b[i]]) first = i;
    }
    if (first < 0 || !is_center[b[first + 3]]) continue;
    const Vertex c = b[first];
    const Vertex q = b[first + 3];
    HexagonChord h;
    h.face = f;
    h.candidates[0] = {StarEdge{c, b[(first + 5) % 6]}, StarEdge{q, b[(first + 2) % 6]}};
    h.candidates[1] = {StarEdge{c, b[(first + 1) % 6]}, StarEdge{q, b[(first + 4) % 6]}};
    const int index = static_cast<int>(out.hexagons.size());
    for (int p = 0; p < 2; ++p) {
      for (const StarEdge& e : h.candidates[p]) membership[e].emplace_back(index, p);
    }
    out.hexagons.push_back(h);
  }

  // Union-find with parity: parity_[x] is x's value relative to its parent.
  const int m = static_cast<int>(out.hexagons.size());
  std::vector<int> parent(m);
  std::vector<int> parity(m, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<std::pair<int, StarEdge>>> forest(m);
  auto find = [&](int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::make_pair(x, p);
  };
  auto forest_path = [&](int from, int to) {
    std::vector<int> prev(m, -2);
    std::vector<StarEdge> via(m);
    std::vector<int> queue{from};
    prev[from] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& [w, e] : forest[queue[i]]) {
        if (prev[w] == -2) {
          prev[w] = queue[i];
          via[w] = e;
          queue.push_back(w);
        }
      }
    }
    std::vector<StarEdge> path;
    for (int x = to; prev[x] >= 0; x = prev[x]) path.push_back(via[x]);
    return path;
  };

  for (const auto& [edge, where] : membership) {
    if (where.size() != 2) {
      throw TransformError(TransformErrorCode::ChordInfeasible,
                           "star edge " + std::to_string(edge.center + 1) + "-" +
                               std::to_string(edge.leaf + 1) + " lies on " +
                               std::to_string(where.size()) + " 2-center hexagon(s)");
    }
    const auto [h, ph] = where[0];
    const auto [k, pk] = where[1];
    const int want = 1 ^ ph ^ pk;  // x_h xor x_k
    auto [rh, xh] = find(h);
    auto [rk, xk] = find(k);
    if (rh == rk) {
      if ((xh ^ xk) != want) {
        std::string cycle;
        for (const StarEdge& e : forest_path(h, k)) {
          cycle += " " + std::to_string(e.center + 1) + "-" + std::to_string(e.leaf + 1);
        }
        throw TransformError(TransformErrorCode::ChordInfeasible,
                             "parity cycle through star edges" + cycle + " " +
                                 std::to_string(edge.center + 1) + "-" + std::to_string(edge.leaf + 1));
      }
      continue;
    }
    parent[rk] = rh;
    parity[rk] = xh ^ xk ^ want;
    forest[h].emplace_back(k, edge);
    forest[k].emplace_back(h, edge);
  }
  for (int h = 0; h < m; ++h) out.hexagons[h].choice = find(h).second;
  return out;
}

std::vector<StarEdge> chord_violations(const StarPacking& packing, const ChordAssignment& assignment) {
  std::map<StarEdge, int> chords;
  for (const Star& s : packing.stars) {
    for (Vertex l : s.leaves) chords[StarEdge{s.center, l}] = 0;
  }
  for (const auto& h : assignment.hexagons) {
    for (const StarEdge& e : h.candidates[h.choice]) ++chords[e];
  }
  std::vector<StarEdge> out;
  for (const auto& [e, count] : chords) {
    if (count != 1) out.push_back(e);
  }
  return out;
}

SemiStarResult semi_star_transform(const EmbeddedCubicGraph& g, const StarPacking& packing_in) {
  require_fullerene(g);
  const auto cls = require_balanced_p0(g, packing_in);
  if (packing_in.stars.size() % 2 != 0) {
    throw TransformError(TransformErrorCode::OddStarCount,
                         std::to_string(packing_in.stars.size()) + " stars");
  }
  const StarPacking packing = canonical_packing(g, packing_in);
  const ChordAssignment assignment = solve_chord_assignment(g, packing);
  const FaceSet faces = trace_faces(g);
  const int n = g.vertex_count();
  const int stars = static_cast<int>(packing.stars.size());
  const int total = n + 3 * stars;
  const std::vector<Vertex> owner = center_of(g, packing);

  SemiStarProvenance prov;
  prov.input_digest = graph_digest(g);
  prov.input_vertices = n;
  prov.packing = packing;

  std::map<StarEdge, Vertex> subdivision;
  for (int i = 0; i < stars; ++i) {
    const Star& s = packing.stars[i];
    for (int k = 0; k < 3; ++k) {
      const Vertex id = n + 3 * i + k;
      subdivision[StarEdge{s.center, s.leaves[k]}] = id;
      prov.subdivisions.push_back({id, StarEdge{s.center, s.leaves[k]}});
    }
  }
  auto star_edge_between = [&](Vertex a, Vertex b) -> std::optional<StarEdge> {
    if (owner[a] == a && owner[b] == a) return StarEdge{a, b};
    if (owner[b] == b && owner[a] == b) return StarEdge{b, a};
    return std::nullopt;
  };

  std::vector<Vertex> chord_partner(total, -1);
  std::vector<int> chord_face(total, -1);
  for (const auto& h : assignment.hexagons) {
    const auto& pair = h.candidates[h.choice];
    const Vertex a = subdivision.at(pair[0]);
    const Vertex b = subdivision.at(pair[1]);
    chord_partner[a] = b;
    chord_partner[b] = a;
    chord_face[a] = chord_face[b] = h.face;
    prov.choices.push_back({h.face, h.choice, Edge(a, b)});
  }

  std::vector<Rotation> rot(total);
  for (Vertex v = 0; v < n; ++v) {
    Rotation r = g.rotation(v);
    for (Vertex& w : r) {
      if (auto e = star_edge_between(v, w)) w = subdivision.at(*e);
    }
    rot[v] = r;
  }
  for (const auto& sub : prov.subdivisions) {
    const Vertex s = sub.vertex;
    const Vertex c = sub.edge.center;
    const Vertex l = sub.edge.leaf;
    const Vertex t = chord_partner[s];
    postcondition(t >= 0, "subdivision vertex without a chord");
    // The chord goes into the corner of its face at s.
    if (faces.face_of(g, c, l) == chord_face[s]) {
      rot[s] = {c, t, l};
    } else {
      rot[s] = {l, t, c};
    }
  }

  EmbeddedCubicGraph out = [&] {
    try {
      return EmbeddedCubicGraph::build(std::move(rot));
    } catch (const GraphError& e) {
      throw TransformError(TransformErrorCode::PostconditionFailed, std::string("semi-star transform: ") + e.what());
    }
  }();

  postcondition(4 * out.vertex_count() == 7 * n, "vertex count is not 7n/4");
  postcondition(8 * out.edge_count() == 21 * n, "edge count is not 21n/8");
  const VerificationReport report = verify_fullerene(out);
  postcondition(report.passed(), "output is not a fullerene");
  postcondition(2 * static_cast<int>(prov.choices.size()) == 3 * stars, "chord count is not 3 stars / 2");
  const int two_center = cls.hexagon_center_histogram.count(2) ? cls.hexagon_center_histogram.at(2) : 0;
  const int zero_center = cls.hexagon_center_histogram.count(0) ? cls.hexagon_center_histogram.at(0) : 0;
  postcondition(report.census.hexagons() == 2 * two_center + zero_center, "hexagon count");
  const auto out_faces = face_set(trace_faces(out));
  for (const auto& f : faces.faces) {
    if (f.size() == 5) postcondition(out_faces.count(canonical_cycle(f.boundary)) == 1, "a pentagon did not survive");
  }

  prov.output_vertices = out.vertex_count();
  prov.output_digest = graph_digest(out);
  return {std::move(out), std::move(prov)};
}

CycleFactor extract_cycle_factor_from_provenance(const EmbeddedCubicGraph& f,
                                                 const StarTransformProvenance& prov) {
  if (graph_digest(f) != prov.output_digest || f.vertex_count() != prov.output_vertices) {
    throw TransformError(TransformErrorCode::ProvenanceMismatch, "provenance does not describe this graph");
  }
  CycleFactor factor;
  factor.cycles = prov.pentagons;
  for (const auto& img : prov.stars) factor.cycles.emplace_back(img.ring.begin(), img.ring.end());
  for (const auto& h : prov.empty_hexagons) factor.cycles.push_back(h);
  if (auto v = validate_cycle_factor(f, factor); !v) {
    throw TransformError(TransformErrorCode::NotDirect, v.reason);
  }
  return factor;
}

SpiderPacking extract_subdivided_star_packing(const EmbeddedCubicGraph& f, const SemiStarProvenance& prov) {
  if (graph_digest(f) != prov.output_digest || f.vertex_count() != prov.output_vertices) {
    throw TransformError(TransformErrorCode::ProvenanceMismatch, "provenance does not describe this graph");
  }
  std::map<StarEdge, Vertex> subdivision;
  for (const auto& s : prov.subdivisions) subdivision[s.edge] = s.vertex;
  SpiderPacking out;
  for (const Star& s : prov.packing.stars) {
    Spider spider;
    spider.center = s.center;
    for (int k = 0; k < 3; ++k) {
      auto it = subdivision.find(StarEdge{s.center, s.leaves[k]});
      if (it == subdivision.end()) {
        throw TransformError(TransformErrorCode::ProvenanceMismatch, "star edge without subdivision vertex");
      }
      spider.legs[k] = {it->second, s.leaves[k]};
    }
    out.spiders.push_back(spider);
  }
  return out;
}

Validation validate_spider_packing(const EmbeddedCubicGraph& g, const SpiderPacking& packing) {
  std::vector<char> seen(g.vertex_count(), 0);
  auto take = [&](Vertex v) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    return true;
  };
  for (const Spider& s : packing.spiders) {
    if (!take(s.center)) return Validation::fail("spider center " + std::to_string(s.center + 1) + " reused");
    for (const auto& leg : s.legs) {
      if (!take(leg[0]) || !take(leg[1])) return Validation::fail("spider vertex reused");
      if (!g.adjacent(s.center, leg[0]) || !g.adjacent(leg[0], leg[1])) {
        return Validation::fail("spider leg is not a path of the graph");
      }
    }
  }
  if (7 * packing.spiders.size() != static_cast<std::size_t>(g.vertex_count())) {
    return Validation::fail("spiders do not cover the vertex set");
  }
  return Validation::pass();
}

}  // namespace fullerene
