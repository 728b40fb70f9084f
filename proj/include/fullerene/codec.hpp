#pragma once

// planar_code streams, Tutte layouts, DOT/SVG export and the built-in
// dodecahedron fixture.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

enum class CodecErrorCode {
  TruncatedStream,
  IdentifierOutOfRange,
  ValidationFailed,
  TooLarge,
};

const char* to_string(CodecErrorCode code);

class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrorCode code, std::size_t offset, int graph_index, const std::string& what)
      : std::runtime_error(what), code_(code), offset_(offset), graph_index_(graph_index) {}

  CodecErrorCode code() const noexcept { return code_; }
  /// Byte offset in the stream where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }
  /// 0-based index of the graph being decoded.
  int graph_index() const noexcept { return graph_index_; }

 private:
  CodecErrorCode code_;
  std::size_t offset_;
  int graph_index_;
};

/// Decodes an 8-bit planar_code stream. The header is optional. Each graph
/// is validated with EmbeddedCubicGraph::build.
std::vector<EmbeddedCubicGraph> decode_planar_code(std::span<const std::uint8_t> bytes);

/// Encodes one graph; the header is prepended when `with_header` is set.
/// Throws CodecError(TooLarge) for more than 255 vertices.
std::vector<std::uint8_t> encode_planar_code(const EmbeddedCubicGraph& g, bool with_header = true);

std::vector<std::uint8_t> encode_planar_code(const std::vector<EmbeddedCubicGraph>& graphs);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

/// The dodecahedron (C20). Vertices 1..5 bound the first pentagon; the
/// remaining ids follow a face spiral. Rotations are counterclockwise.
///
///   1: 2 6 5     2: 3 9 1     3: 4 11 2    4: 5 13 3    5: 1 7 4
///   6: 1 10 8    7: 8 15 5    8: 6 16 7    9: 2 12 10  10: 9 18 6
///  11: 3 14 12  12: 11 19 9  13: 4 15 14  14: 13 20 11 15: 7 17 13
///  16: 8 18 17  17: 16 20 15 18: 10 19 16 19: 12 20 18 20: 14 17 19
EmbeddedCubicGraph fixture_dodecahedron();

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Layout {
  std::vector<Point> positions;  // indexed by vertex
};

enum class LayoutErrorCode { SingularSystem, DidNotConverge, NotAFace, MissingLayout };

const char* to_string(LayoutErrorCode code);

class LayoutError : public std::runtime_error {
 public:
  LayoutError(LayoutErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  LayoutErrorCode code() const noexcept { return code_; }

 private:
  LayoutErrorCode code_;
};

struct TutteOptions {
  double tolerance = 1e-9;
  int max_sweeps = 200000;
};

/// Barycentric layout: the outer face is pinned to a regular polygon on the
/// unit circle and every other vertex sits at the average of its neighbours.
/// Solved by Gauss-Seidel sweeps from the polygon centroid until the largest
/// residual |p - mean(neighbours)| is at most `tolerance`.
Layout layout_tutte(const EmbeddedCubicGraph& g, const Face& outer_face,
                    const TutteOptions& options = {});

/// Style classes for exported drawings. Vertex and edge classes are free-form
/// names; SVG uses `center`, `star-edge` and `chord` by convention.
struct Annotations {
  std::map<std::string, std::set<Vertex>> vertex_classes;
  std::map<std::string, std::set<Edge>> edge_classes;
  /// SVG only: draw inner faces as polygons classed `pentagon`/`hexagon`.
  bool shade_faces = false;
};

std::string export_dot(const EmbeddedCubicGraph& g, const Annotations& annotations = {});

/// Throws LayoutError(MissingLayout) unless the layout covers every vertex.
std::string export_svg(const EmbeddedCubicGraph& g, const Layout& layout,
                       const Annotations& annotations = {});

}  // namespace fullerene
