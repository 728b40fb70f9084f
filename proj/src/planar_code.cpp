#include <algorithm>
#include <fstream>
#include <iterator>

#include "fullerene/codec.hpp"

namespace fullerene {

const char* to_string(CodecErrorCode code) {
  switch (code) {
    case CodecErrorCode::TruncatedStream: return "TruncatedStream";
    case CodecErrorCode::IdentifierOutOfRange: return "IdentifierOutOfRange";
    case CodecErrorCode::ValidationFailed: return "ValidationFailed";
    case CodecErrorCode::TooLarge: return "TooLarge";
  }
  return "?";
}

std::vector<EmbeddedCubicGraph> decode_planar_code(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  if (bytes.size() >= kPlanarCodeHeader.size() &&
      std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin())) {
    pos = kPlanarCodeHeader.size();
  }

  std::vector<EmbeddedCubicGraph> graphs;
  while (pos < bytes.size()) {
    const int index = static_cast<int>(graphs.size());
    const std::size_t start = pos;
    const int n = bytes[pos++];
    if (n == 0) {
      throw CodecError(CodecErrorCode::ValidationFailed, start, index,
                       "graph " + std::to_string(index) + " declares 0 vertices");
    }
    std::vector<std::vector<Vertex>> neighbours(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) {
          throw CodecError(CodecErrorCode::TruncatedStream, pos, index,
                           "stream ends at byte " + std::to_string(pos) + " inside graph " +
                               std::to_string(index));
        }
        const int id = bytes[pos];
        if (id == 0) {
          ++pos;
          break;
        }
        if (id > n) {
          throw CodecError(CodecErrorCode::IdentifierOutOfRange, pos, index,
                           "neighbour " + std::to_string(id) + " at byte " + std::to_string(pos) +
                               " exceeds vertex count " + std::to_string(n));
        }
        neighbours[v].push_back(id - 1);
        ++pos;
      }
    }
    try {
      graphs.push_back(EmbeddedCubicGraph::build(neighbours));
    } catch (const GraphError& e) {
      throw CodecError(CodecErrorCode::ValidationFailed, start, index,
                       "graph " + std::to_string(index) + ": " + to_string(e.code()) + ": " +
                           e.what());
    }
  }
  return graphs;
}

std::vector<std::uint8_t> encode_planar_code(const EmbeddedCubicGraph& g, bool with_header) {
  const int n = g.vertex_count();
  if (n > 255) {
    throw CodecError(CodecErrorCode::TooLarge, 0, 0,
                     std::to_string(n) + " vertices do not fit 8-bit planar_code");
  }
  std::vector<std::uint8_t> out;
  if (with_header) out.assign(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  out.reserve(out.size() + 1 + 4 * n);
  out.push_back(static_cast<std::uint8_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    // Rotations are already normalized to start at the lowest neighbour.
    for (Vertex w : g.rotation(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
    out.push_back(0);
  }
  return out;
}

std::vector<std::uint8_t> encode_planar_code(const std::vector<EmbeddedCubicGraph>& graphs) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& g : graphs) {
    auto body = encode_planar_code(g, false);
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

EmbeddedCubicGraph fixture_dodecahedron() {
  static const int table[20][3] = {
      {2, 6, 5},    {3, 9, 1},    {4, 11, 2},   {5, 13, 3},   {1, 7, 4},
      {1, 10, 8},   {8, 15, 5},   {6, 16, 7},   {2, 12, 10},  {9, 18, 6},
      {3, 14, 12},  {11, 19, 9},  {4, 15, 14},  {13, 20, 11}, {7, 17, 13},
      {8, 18, 17},  {16, 20, 15}, {10, 19, 16}, {12, 20, 18}, {14, 17, 19},
  };
  std::vector<Rotation> rotations;
  for (const auto& row : table) rotations.push_back({row[0] - 1, row[1] - 1, row[2] - 1});
  return EmbeddedCubicGraph::build(std::move(rotations));
}

}  // namespace fullerene
