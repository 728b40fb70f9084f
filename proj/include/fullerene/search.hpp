#pragma once

// Exact searches for spanning structures. Every search is deterministic for a
// fixed input and node budget: branching always takes the lowest-numbered
// open vertex and visits neighbours in rotation order.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fullerene/graph.hpp"
#include "fullerene/packing.hpp"

namespace fullerene {

struct SearchBudget {
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  double time_limit = std::numeric_limits<double>::infinity();  // seconds

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t limit) { return {limit, std::numeric_limits<double>::infinity()}; }
};

enum class SearchStatus {
  Found,                 // a witness (or `limit` witnesses) was found
  Exhausted,             // the whole search space was explored
  ModuloReject,          // rejected by the mod-8 condition, no search run
  ArithmeticInfeasible,  // rejected by counting, no search run
  BudgetExceeded,        // gave up; says nothing about existence
};

const char* to_string(SearchStatus status);

/// Proven negative: Exhausted without a witness, ModuloReject or
/// ArithmeticInfeasible.
bool proven_absent(SearchStatus status, bool has_witness);

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Counts search nodes against a SearchBudget. The clock is only read every
/// 256 nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget);

  /// Charges one node; false once the budget is spent.
  bool charge();
  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

struct StarSearchOptions {
  /// Only vertices whose three faces are hexagons may be centers.
  bool p0_only = false;
};

struct StarPackingSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<StarPacking> packings;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for up to `limit` perfect star packings. The
/// lowest uncovered vertex is either a center or the leaf of one of its
/// neighbours. Graphs whose order is not a multiple of 8 are rejected up
/// front. Throws InvalidInput unless the graph is a fullerene.
StarPackingSearch find_star_packings(const EmbeddedCubicGraph& g, std::size_t limit,
                                     const SearchBudget& budget,
                                     const StarSearchOptions& options = {});

/// Edmonds' blossom algorithm on a general graph given as adjacency lists.
/// Returns mate[v] (or -1). Deterministic.
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adjacency);

/// Perfect matching of a fullerene (always exists for bridgeless cubic
/// graphs). Returns std::nullopt only for inputs without one.
std::optional<std::vector<Edge>> find_perfect_matching(const EmbeddedCubicGraph& g);

struct PseudoMatchingSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<PseudoMatching> witness;
  std::uint64_t nodes = 0;
};

/// Chooses `star_count` centers in increasing order, then completes the
/// uncovered vertices with a perfect matching.
PseudoMatchingSearch find_pseudo_matching(const EmbeddedCubicGraph& g, int star_count,
                                          const SearchBudget& budget);

struct CycleFactorSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<CycleFactor> witness;
  std::uint64_t nodes = 0;
  bool hint_used = false;
  bool hint_rejected = false;
};

/// A valid hint is returned as is; otherwise backtracking over 5- and
/// 6-cycles through the lowest uncovered vertex.
CycleFactorSearch find_cycle_factor_5_6(const EmbeddedCubicGraph& g, const CycleFactor* hint,
                                        const SearchBudget& budget);

struct HamiltonSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<std::vector<Vertex>> cycle;
  std::uint64_t nodes = 0;
};

/// Backtracking over edges with degree-2 forcing, premature-cycle
/// exclusion and a connectivity cut. The cycle starts at vertex 0 and
/// continues to its lower-numbered cycle neighbour.
HamiltonSearch find_hamiltonian_cycle(const EmbeddedCubicGraph& g, const SearchBudget& budget);

class NotDivisible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cuts a cycle into consecutive blocks of k vertices, starting at its
/// lowest-numbered vertex and keeping its direction.
PathPacking split_cycle_into_paths(const std::vector<Vertex>& cycle, int k);

}  // namespace fullerene
