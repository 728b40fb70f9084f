#include <algorithm>
#include <stdexcept>

#include "fullerene/packing.hpp"

namespace fullerene {

std::vector<Vertex> StarPacking::centers() const {
  std::vector<Vertex> out;
  out.reserve(stars.size());
  for (const Star& s : stars) out.push_back(s.center);
  return out;
}

Star star_at(const EmbeddedCubicGraph& g, Vertex center) {
  return Star{center, g.rotation(center)};
}

StarPacking packing_from_centers(const EmbeddedCubicGraph& g, std::vector<Vertex> centers) {
  std::sort(centers.begin(), centers.end());
  StarPacking packing;
  for (Vertex c : centers) packing.stars.push_back(star_at(g, c));
  return packing;
}

PackingClassification classify_packing(const EmbeddedCubicGraph& g, const StarPacking& packing) {
  if (auto v = validate_star_packing(g, packing); !v) {
    throw std::invalid_argument("PackingNotValid: " + v.reason);
  }
  const FaceSet faces = trace_faces(g);
  PackingClassification out;

  std::vector<char> is_center(g.vertex_count(), 0);
  out.is_p0 = true;
  for (const Star& s : packing.stars) {
    is_center[s.center] = 1;
    std::array<int, 3> profile{};
    const auto around = faces.faces_around(g, s.center);
    for (int k = 0; k < 3; ++k) {
      profile[k] = static_cast<int>(faces.faces[around[k]].size());
      if (profile[k] != 6) out.is_p0 = false;
    }
    out.center_face_profile.push_back(profile);
  }

  out.hexagon_center_histogram = {{0, 0}, {1, 0}, {2, 0}};
  out.is_balanced = true;
  for (int f = 0; f < static_cast<int>(faces.faces.size()); ++f) {
    const auto& b = faces.faces[f].boundary;
    if (b.size() != 6) continue;
    std::vector<int> positions;
    for (int i = 0; i < 6; ++i) {
      if (is_center[b[i]]) positions.push_back(i);
    }
    ++out.hexagon_center_histogram[static_cast<int>(positions.size())];
    const bool ok = positions.empty() ||
                    (positions.size() == 2 && positions[1] - positions[0] == 3);
    if (!ok) {
      out.is_balanced = false;
      out.unbalanced_hexagons.push_back(f);
    }
  }
  return out;
}

}  // namespace fullerene
