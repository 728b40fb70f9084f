#pragma once

// Chamfer, star and semi-star transformations, with provenance records and
// the constructive extractors that read them.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"
#include "fullerene/packing.hpp"

namespace fullerene {

enum class TransformErrorCode {
  InvalidInput,
  NotP0,
  NotBalanced,
  OddStarCount,
  ChordInfeasible,
  PostconditionFailed,
  NotDirect,
  ProvenanceMismatch,
};

const char* to_string(TransformErrorCode code);

class TransformError : public std::runtime_error {
 public:
  TransformError(TransformErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  TransformErrorCode code() const noexcept { return code_; }

 private:
  TransformErrorCode code_;
};

/// Quadrupling: every face f and vertex u on f yield a new vertex b(f,u);
/// faces shrink to cycles of these, and every old edge becomes a hexagon.
/// Original vertices keep their ids; b(f,u) for the directed edge u -> w
/// of f gets id n + 3u + slot(w).
EmbeddedCubicGraph chamfer(const EmbeddedCubicGraph& g);

/// The star packing of chamfer(g) whose centers are the original vertices.
StarPacking chamfer_center_packing(const EmbeddedCubicGraph& g);

struct StarTransformProvenance {
  std::uint64_t input_digest = 0;
  std::uint64_t output_digest = 0;
  int input_vertices = 0;
  int output_vertices = 0;
  StarPacking packing;  // input ids

  struct StarImage {
    Vertex center = 0;               // input id
    std::array<Vertex, 3> leaves{};  // input ids, rotation order at the center
    std::array<Vertex, 6> ring{};    // output ids v1..v6; v1, v3, v5 attach to the leaves
    std::array<Vertex, 3> cross{};   // output ids of the partners of v2, v4, v6
  };
  std::vector<StarImage> stars;

  std::vector<Vertex> renumber;                     // input id -> output id, -1 for centers
  std::vector<std::vector<Vertex>> pentagons;       // output ids
  std::vector<std::vector<Vertex>> empty_hexagons;  // 0-center hexagons, output ids
  std::vector<Edge> cross_edges;                    // output ids
};

struct StarTransformResult {
  EmbeddedCubicGraph graph;
  StarTransformProvenance provenance;
};

/// Replaces each star center by a hexagon v1..v6: odd ring vertices take
/// over the center's edges to its leaves, even ones point into the three
/// faces around the center and are joined across every 2-center hexagon.
/// Requires a P0, balanced packing. All structural postconditions are
/// checked; a violation throws PostconditionFailed.
StarTransformResult star_transform(const EmbeddedCubicGraph& g, const StarPacking& packing);

/// Identifies a subdivision vertex by the star edge it splits.
struct StarEdge {
  Vertex center = 0;
  Vertex leaf = 0;

  friend auto operator<=>(const StarEdge&, const StarEdge&) = default;
};

struct HexagonChord {
  int face = 0;  // index into trace_faces(g)
  /// candidates[0] = the pair preceding both centers along the face,
  /// candidates[1] = the pair following them.
  std::array<std::array<StarEdge, 2>, 2> candidates{};
  int choice = 0;
};

struct ChordAssignment {
  std::vector<HexagonChord> hexagons;  // by face index
};

/// Picks one antipodal chord per 2-center hexagon so that every subdivision
/// vertex gets exactly one chord. Parity union-find; throws ChordInfeasible
/// naming the inconsistent constraint cycle.
ChordAssignment solve_chord_assignment(const EmbeddedCubicGraph& g, const StarPacking& packing);

/// Star edges whose subdivision vertex receives a number of chords other
/// than one under `assignment`.
std::vector<StarEdge> chord_violations(const StarPacking& packing, const ChordAssignment& assignment);

struct SemiStarProvenance {
  std::uint64_t input_digest = 0;
  std::uint64_t output_digest = 0;
  int input_vertices = 0;
  int output_vertices = 0;
  StarPacking packing;  // input ids; original vertices keep their ids

  struct Subdivision {
    Vertex vertex = 0;  // output id
    StarEdge edge;      // input ids
  };
  std::vector<Subdivision> subdivisions;  // star order, leaves in rotation order

  struct Choice {
    int face = 0;  // input face index
    int choice = 0;
    Edge chord;  // output ids
  };
  std::vector<Choice> choices;
};

struct SemiStarResult {
  EmbeddedCubicGraph graph;
  SemiStarProvenance provenance;
};

/// Subdivides every star edge and adds one chord per 2-center hexagon.
/// Requires a P0, balanced packing with an even number of stars.
SemiStarResult semi_star_transform(const EmbeddedCubicGraph& g, const StarPacking& packing);

/// Pentagons, star rings and surviving 0-center hexagons, if they partition
/// the vertex set; otherwise NotDirect.
CycleFactor extract_cycle_factor_from_provenance(const EmbeddedCubicGraph& f,
                                                 const StarTransformProvenance& prov);

/// S(K1,3): a center with three legs center - subdivision - leaf.
struct Spider {
  Vertex center = 0;
  std::array<std::array<Vertex, 2>, 3> legs{};
};

struct SpiderPacking {
  std::vector<Spider> spiders;
};

SpiderPacking extract_subdivided_star_packing(const EmbeddedCubicGraph& f,
                                              const SemiStarProvenance& prov);

Validation validate_spider_packing(const EmbeddedCubicGraph& g, const SpiderPacking& packing);

// Line-oriented provenance files; ids are 1-based.
void write_provenance(std::ostream& out, const StarTransformProvenance& prov);
void write_provenance(std::ostream& out, const SemiStarProvenance& prov);
StarTransformProvenance read_star_provenance(std::istream& in);
SemiStarProvenance read_semistar_provenance(std::istream& in);

// Star packing files: "star-packing 1", "vertices N", then one
// "star C L1 L2 L3" line per star; ids are 1-based.
void write_packing(std::ostream& out, const EmbeddedCubicGraph& g, const StarPacking& packing);
StarPacking read_packing(std::istream& in);

}  // namespace fullerene
