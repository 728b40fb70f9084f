#include "fullerene/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <sstream>

namespace fullerene {

const char* to_string(GraphErrorCode code) {
  switch (code) {
    case GraphErrorCode::NonCubic: return "NonCubic";
    case GraphErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case GraphErrorCode::Disconnected: return "Disconnected";
    case GraphErrorCode::BadIdentifier: return "BadIdentifier";
    case GraphErrorCode::GenusNonZero: return "GenusNonZero";
  }
  return "?";
}

namespace {

Rotation normalize(const Rotation& r) {
  auto lowest = std::min_element(r.begin(), r.end()) - r.begin();
  return {r[lowest], r[(lowest + 1) % 3], r[(lowest + 2) % 3]};
}

// Connectivity of the graph with `removed` vertices deleted.
bool connected_without(const std::vector<Rotation>& rot, Vertex skip_a, Vertex skip_b) {
  const int n = static_cast<int>(rot.size());
  std::vector<char> seen(n, 0);
  if (skip_a >= 0) seen[skip_a] = 1;
  if (skip_b >= 0) seen[skip_b] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rot[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

}  // namespace

EmbeddedCubicGraph EmbeddedCubicGraph::build(std::vector<Rotation> rotations) {
  const int n = static_cast<int>(rotations.size());
  if (n == 0) throw GraphError(GraphErrorCode::BadIdentifier, "graph has no vertices");
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = rotations[v];
    for (Vertex w : r) {
      if (w < 0 || w >= n) {
        throw GraphError(GraphErrorCode::BadIdentifier,
                         "vertex " + std::to_string(v + 1) + " lists neighbour " +
                             std::to_string(w + 1) + " outside 1.." + std::to_string(n));
      }
    }
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2] || r[0] == v || r[1] == v || r[2] == v) {
      throw GraphError(GraphErrorCode::NonCubic,
                       "vertex " + std::to_string(v + 1) + " does not have 3 distinct neighbours");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotations[v]) {
      const auto& back = rotations[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw GraphError(GraphErrorCode::AsymmetricAdjacency,
                         "vertex " + std::to_string(v + 1) + " lists " + std::to_string(w + 1) +
                             " but not vice versa");
      }
    }
  }
  if (!connected_without(rotations, -1, -1)) {
    throw GraphError(GraphErrorCode::Disconnected, "graph is not connected");
  }
  for (auto& r : rotations) r = normalize(r);
  return EmbeddedCubicGraph(std::move(rotations));
}

EmbeddedCubicGraph EmbeddedCubicGraph::build(const std::vector<std::vector<Vertex>>& neighbours) {
  std::vector<Rotation> rotations;
  rotations.reserve(neighbours.size());
  for (std::size_t v = 0; v < neighbours.size(); ++v) {
    if (neighbours[v].size() != 3) {
      throw GraphError(GraphErrorCode::NonCubic,
                       "vertex " + std::to_string(v + 1) + " has " +
                           std::to_string(neighbours[v].size()) + " neighbours");
    }
    rotations.push_back({neighbours[v][0], neighbours[v][1], neighbours[v][2]});
  }
  return build(std::move(rotations));
}

int EmbeddedCubicGraph::slot_of(Vertex v, Vertex w) const {
  const auto& r = rotations_.at(v);
  for (int k = 0; k < 3; ++k) {
    if (r[k] == w) return k;
  }
  return -1;
}

Vertex EmbeddedCubicGraph::successor(Vertex at, Vertex from) const {
  int k = slot_of(at, from);
  if (k < 0) throw std::invalid_argument("successor: vertices are not adjacent");
  return rotations_[at][(k + 1) % 3];
}

Vertex EmbeddedCubicGraph::predecessor(Vertex at, Vertex from) const {
  int k = slot_of(at, from);
  if (k < 0) throw std::invalid_argument("predecessor: vertices are not adjacent");
  return rotations_[at][(k + 2) % 3];
}

std::vector<Edge> EmbeddedCubicGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : rotations_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Face::contains(Vertex v) const { return position(v) >= 0; }

int Face::position(Vertex v) const {
  auto it = std::find(boundary.begin(), boundary.end(), v);
  return it == boundary.end() ? -1 : static_cast<int>(it - boundary.begin());
}

int FaceSet::face_of(const EmbeddedCubicGraph& g, Vertex tail, Vertex head) const {
  int k = g.slot_of(tail, head);
  if (k < 0) throw std::invalid_argument("face_of: vertices are not adjacent");
  return dart_face[dart_index(tail, k)];
}

std::array<int, 3> FaceSet::faces_around(const EmbeddedCubicGraph& g, Vertex v) const {
  (void)g;
  return {dart_face[dart_index(v, 0)], dart_face[dart_index(v, 1)], dart_face[dart_index(v, 2)]};
}

FaceSet trace_faces(const EmbeddedCubicGraph& g) {
  const int n = g.vertex_count();
  FaceSet out;
  out.dart_face.assign(3 * n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int k = 0; k < 3; ++k) {
      if (out.dart_face[dart_index(v, k)] >= 0) continue;
      const int id = static_cast<int>(out.faces.size());
      Face face;
      Vertex tail = v;
      int slot = k;
      while (out.dart_face[dart_index(tail, slot)] < 0) {
        out.dart_face[dart_index(tail, slot)] = id;
        face.boundary.push_back(tail);
        Vertex head = g.rotation(tail)[slot];
        Vertex next = g.successor(head, tail);
        tail = head;
        slot = g.slot_of(head, next);
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

int FaceCensus::count(int size) const {
  auto it = by_size.find(size);
  return it == by_size.end() ? 0 : it->second;
}

FaceCensus face_census(const EmbeddedCubicGraph& g, GenusPolicy policy) {
  return face_census(g, trace_faces(g), policy);
}

FaceCensus face_census(const EmbeddedCubicGraph& g, const FaceSet& faces, GenusPolicy policy) {
  FaceCensus census;
  census.vertex_count = g.vertex_count();
  census.edge_count = g.edge_count();
  census.face_count = static_cast<int>(faces.faces.size());
  for (const auto& f : faces.faces) ++census.by_size[static_cast<int>(f.size())];
  if (policy == GenusPolicy::Require && !census.genus_zero()) {
    throw GraphError(GraphErrorCode::GenusNonZero,
                     "Euler characteristic " + std::to_string(census.euler_characteristic()) +
                         " != 2");
  }
  return census;
}

bool vertex_connectivity_at_least(const EmbeddedCubicGraph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("connectivity level must be in 1..3");
  const auto& rot = g.rotations();
  const int n = g.vertex_count();
  if (k == 1) return connected_without(rot, -1, -1);
  if (n <= k) return false;
  for (Vertex a = 0; a < n; ++a) {
    if (!connected_without(rot, a, -1)) return false;
  }
  if (k == 2) return true;
  return !find_separating_pair(g).has_value();
}

std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const EmbeddedCubicGraph& g) {
  const auto& rot = g.rotations();
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!connected_without(rot, a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, const AxiomResult*>> VerificationReport::axioms() const {
  return {{"cubic", &cubic},
          {"connected", &connected},
          {"genus_zero", &genus_zero},
          {"three_connected", &three_connected},
          {"faces_only_5_6", &faces_only_5_6},
          {"exactly_12_pentagons", &exactly_12_pentagons}};
}

VerificationReport verify_fullerene(const EmbeddedCubicGraph& g) {
  VerificationReport report;
  const int n = g.vertex_count();

  // Cubic and connected are construction invariants, re-checked here so the
  // report stands on its own.
  for (Vertex v = 0; v < n && report.cubic.passed; ++v) {
    const auto& r = g.rotation(v);
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]) {
      report.cubic = {false, {v}, "repeated neighbour"};
    }
  }
  if (!vertex_connectivity_at_least(g, 1)) {
    report.connected = {false, {}, "graph is disconnected"};
  }

  const FaceSet faces = trace_faces(g);
  report.census = face_census(g, faces, GenusPolicy::Report);
  if (!report.census.genus_zero()) {
    report.genus_zero = {false, {},
                         "V - E + F = " + std::to_string(report.census.euler_characteristic())};
  }

  if (auto cut = find_separating_pair(g)) {
    report.three_connected = {false, {cut->first, cut->second}, "separating pair"};
  } else if (n < 4) {
    report.three_connected = {false, {}, "fewer than 4 vertices"};
  }

  for (const auto& f : faces.faces) {
    if (f.size() != 5 && f.size() != 6) {
      report.faces_only_5_6 = {false, f.boundary, "face of size " + std::to_string(f.size())};
      break;
    }
  }
  if (report.census.pentagons() != 12) {
    report.exactly_12_pentagons = {false, {},
                                   std::to_string(report.census.pentagons()) + " pentagons"};
  }
  return report;
}

std::uint64_t graph_digest(const EmbeddedCubicGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(g.vertex_count()));
  for (const auto& r : g.rotations()) {
    for (Vertex w : r) mix(static_cast<std::uint32_t>(w));
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace fullerene
