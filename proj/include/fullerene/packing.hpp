#pragma once

// Spanning-subgraph certificates (star packings, pseudo matchings, cycle
// factors, path packings), their verifiers, and star-packing classification.
//
// The validate_* functions only read adjacency. They share no code with the
// searches in search.hpp so that every search result is checked independently.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

/// K1,3: a center and its three leaves, leaves in the center's rotation order.
struct Star {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};

  friend auto operator<=>(const Star&, const Star&) = default;
};

/// A perfect star packing. Stars are kept sorted by center.
struct StarPacking {
  std::vector<Star> stars;

  std::vector<Vertex> centers() const;
  friend bool operator==(const StarPacking&, const StarPacking&) = default;
};

/// The star centered at c with all three neighbours as leaves.
Star star_at(const EmbeddedCubicGraph& g, Vertex center);

/// Builds a packing from a list of centers (each center takes all its
/// neighbours as leaves). Does not validate.
StarPacking packing_from_centers(const EmbeddedCubicGraph& g, std::vector<Vertex> centers);

struct PseudoMatching {
  std::vector<Edge> pairs;
  std::vector<Star> stars;
};

struct CycleFactor {
  std::vector<std::vector<Vertex>> cycles;

  int count_of_length(std::size_t length) const;
};

struct PathPacking {
  int k = 0;
  std::vector<std::vector<Vertex>> paths;
};

/// Outcome of a verifier: ok, or the first violation found.
struct Validation {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Validation pass() { return {}; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

Validation validate_star_packing(const EmbeddedCubicGraph& g, const StarPacking& packing);
Validation validate_perfect_matching(const EmbeddedCubicGraph& g, const std::vector<Edge>& matching);
Validation validate_pseudo_matching(const EmbeddedCubicGraph& g, const PseudoMatching& pm);
/// Every cycle must have length 5 or 6.
Validation validate_cycle_factor(const EmbeddedCubicGraph& g, const CycleFactor& factor);
Validation validate_hamiltonian_cycle(const EmbeddedCubicGraph& g, const std::vector<Vertex>& cycle);
Validation validate_path_packing(const EmbeddedCubicGraph& g, const PathPacking& packing);

struct PackingClassification {
  bool is_p0 = false;
  bool is_balanced = false;
  /// Sizes of the three faces around each center, in star order.
  std::vector<std::array<int, 3>> center_face_profile;
  /// Number of hexagons containing 0, 1 and 2 centers.
  std::map<int, int> hexagon_center_histogram;
  /// Hexagons with exactly one center, or two centers not antipodal.
  std::vector<int> unbalanced_hexagons;
};

/// Throws std::invalid_argument (PackingNotValid) when the packing fails
/// validate_star_packing.
PackingClassification classify_packing(const EmbeddedCubicGraph& g, const StarPacking& packing);

}  // namespace fullerene
