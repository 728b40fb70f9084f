#pragma once

// Cubic graphs with a combinatorial embedding (rotation system), face
// tracing and the fullerene axioms.
//
// Vertices are dense 0-based indices in memory. Every serialized form
// (planar_code, packing and provenance files, CLI reports) uses 1-based ids.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fullerene {

using Vertex = std::int32_t;

/// Undirected edge, always stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Rotation = std::array<Vertex, 3>;

enum class GraphErrorCode {
  NonCubic,
  AsymmetricAdjacency,
  Disconnected,
  BadIdentifier,
  GenusNonZero,
};

const char* to_string(GraphErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GraphErrorCode code() const noexcept { return code_; }

 private:
  GraphErrorCode code_;
};

/// A connected cubic graph together with a counterclockwise cyclic order of
/// the three neighbours at every vertex. Immutable once built.
///
/// Rotations are normalized on construction: each triple is rotated so that
/// it starts at its lowest neighbour. The cyclic order is never changed.
class EmbeddedCubicGraph {
 public:
  /// Validates and builds. Throws GraphError (NonCubic, AsymmetricAdjacency,
  /// Disconnected, BadIdentifier).
  static EmbeddedCubicGraph build(std::vector<Rotation> rotations);

  /// Builds from ragged neighbour lists, as read from a file; lists whose
  /// length is not 3 are reported as NonCubic.
  static EmbeddedCubicGraph build(const std::vector<std::vector<Vertex>>& neighbours);

  int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  int edge_count() const noexcept { return vertex_count() * 3 / 2; }

  const Rotation& rotation(Vertex v) const { return rotations_.at(v); }
  const std::vector<Rotation>& rotations() const noexcept { return rotations_; }

  /// Position of w in the rotation at v, or -1.
  int slot_of(Vertex v, Vertex w) const;
  bool adjacent(Vertex v, Vertex w) const { return slot_of(v, w) >= 0; }

  /// The neighbour immediately after `from` in the rotation at `at`.
  Vertex successor(Vertex at, Vertex from) const;
  /// The neighbour immediately before `from` in the rotation at `at`.
  Vertex predecessor(Vertex at, Vertex from) const;

  /// All edges, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const EmbeddedCubicGraph&, const EmbeddedCubicGraph&) = default;

 private:
  explicit EmbeddedCubicGraph(std::vector<Rotation> rotations)
      : rotations_(std::move(rotations)) {}

  std::vector<Rotation> rotations_;
};

/// Directed edge index: 3 * tail + slot of head in the tail's rotation.
using DartIndex = int;

inline DartIndex dart_index(Vertex tail, int slot) { return 3 * tail + slot; }

struct Face {
  std::vector<Vertex> boundary;

  std::size_t size() const noexcept { return boundary.size(); }
  bool contains(Vertex v) const;
  /// Index of v on the boundary, or -1.
  int position(Vertex v) const;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Faces of an embedding with the directed-edge to face map.
struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> dart_face;  // indexed by DartIndex

  /// Face containing the directed edge tail -> head.
  int face_of(const EmbeddedCubicGraph& g, Vertex tail, Vertex head) const;
  /// Indices of the three faces around v, in rotation order: entry k is the
  /// face entered through rotation(v)[k-1] and left through rotation(v)[k].
  std::array<int, 3> faces_around(const EmbeddedCubicGraph& g, Vertex v) const;
};

/// Faces are the orbits of directed edges under: (u -> v) is followed by
/// (v -> w) where w = successor(v, u). Deterministic: faces are emitted in
/// order of their lowest dart index and start at that dart's tail.
FaceSet trace_faces(const EmbeddedCubicGraph& g);

struct FaceCensus {
  std::map<int, int> by_size;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;

  int pentagons() const { return count(5); }
  int hexagons() const { return count(6); }
  int count(int size) const;
  int euler_characteristic() const { return vertex_count - edge_count + face_count; }
  bool genus_zero() const { return euler_characteristic() == 2; }
};

enum class GenusPolicy { Require, Report };

/// Throws GraphError(GenusNonZero) under GenusPolicy::Require when
/// V - E + F != 2.
FaceCensus face_census(const EmbeddedCubicGraph& g, GenusPolicy policy = GenusPolicy::Require);
FaceCensus face_census(const EmbeddedCubicGraph& g, const FaceSet& faces,
                       GenusPolicy policy = GenusPolicy::Require);

/// True iff removing any k-1 vertices leaves the graph connected.
/// Exhaustive over removal sets; k must be in 1..3.
bool vertex_connectivity_at_least(const EmbeddedCubicGraph& g, int k);

/// Finds a separating pair of vertices, if any.
std::optional<std::pair<Vertex, Vertex>> find_separating_pair(const EmbeddedCubicGraph& g);

struct AxiomResult {
  bool passed = true;
  std::vector<Vertex> witness;  // offending vertex, cut pair or face boundary
  std::string detail;
};

struct VerificationReport {
  AxiomResult cubic;
  AxiomResult connected;
  AxiomResult genus_zero;
  AxiomResult three_connected;
  AxiomResult faces_only_5_6;
  AxiomResult exactly_12_pentagons;
  FaceCensus census;

  bool passed() const {
    return cubic.passed && connected.passed && genus_zero.passed && three_connected.passed &&
           faces_only_5_6.passed && exactly_12_pentagons.passed;
  }
  /// (name, result) for every axiom, in a fixed order.
  std::vector<std::pair<std::string, const AxiomResult*>> axioms() const;
};

VerificationReport verify_fullerene(const EmbeddedCubicGraph& g);

/// FNV-1a over the normalized rotation table; identical for a graph and its
/// planar_code round trip.
std::uint64_t graph_digest(const EmbeddedCubicGraph& g);

std::string digest_hex(std::uint64_t digest);

}  // namespace fullerene
