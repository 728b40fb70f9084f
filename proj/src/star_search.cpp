#include <algorithm>

#include "fullerene/search.hpp"

namespace fullerene {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::ModuloReject: return "ModuloReject";
    case SearchStatus::ArithmeticInfeasible: return "ArithmeticInfeasible";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

bool proven_absent(SearchStatus status, bool has_witness) {
  if (status == SearchStatus::ModuloReject || status == SearchStatus::ArithmeticInfeasible) return true;
  return status == SearchStatus::Exhausted && !has_witness;
}

BudgetMeter::BudgetMeter(const SearchBudget& budget)
    : budget_(budget), start_(std::chrono::steady_clock::now()) {
  if (budget.node_limit == 0 || !(budget.time_limit > 0.0)) {
    throw std::invalid_argument("search budget limits must be positive");
  }
}

bool BudgetMeter::charge() {
  if (exceeded_) return false;
  if (nodes_ >= budget_.node_limit) {
    exceeded_ = true;
    return false;
  }
  ++nodes_;
  if ((nodes_ & 0xff) == 0 && budget_.time_limit < std::numeric_limits<double>::infinity()) {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > budget_.time_limit) {
      exceeded_ = true;
      return false;
    }
  }
  return true;
}

namespace {

class StarSearch {
 public:
  StarSearch(const EmbeddedCubicGraph& g, std::vector<char> may_center, std::size_t limit,
             BudgetMeter& meter)
      : g_(g),
        n_(g.vertex_count()),
        covered_(n_, 0),
        may_center_(std::move(may_center)),
        limit_(limit),
        meter_(meter) {}

  void run() { search(0); }

  std::vector<StarPacking> take_results() { return std::move(results_); }
  bool stopped_early() const { return stopped_; }

 private:
  bool can_center(Vertex c) const {
    if (!may_center_[c] || covered_[c]) return false;
    for (Vertex w : g_.rotation(c)) {
      if (covered_[w]) return false;
    }
    return true;
  }

  void set_star(Vertex c, char value) {
    covered_[c] = value;
    for (Vertex w : g_.rotation(c)) covered_[w] = value;
  }

  bool coverable(Vertex x) const {
    if (can_center(x)) return true;
    for (Vertex w : g_.rotation(x)) {
      if (can_center(w)) return true;
    }
    return false;
  }

  // Every uncovered vertex within distance 3 of c must still be coverable.
  bool consistent_around(Vertex c) const {
    for (Vertex leaf : g_.rotation(c)) {
      for (Vertex a : g_.rotation(leaf)) {
        if (!covered_[a] && !coverable(a)) return false;
        for (Vertex b : g_.rotation(a)) {
          if (!covered_[b] && !coverable(b)) return false;
        }
      }
    }
    return true;
  }

  void search(Vertex from) {
    if (stopped_) return;
    if (!meter_.charge()) {
      stopped_ = true;
      return;
    }
    Vertex v = from;
    while (v < n_ && covered_[v]) ++v;
    if (v == n_) {
      results_.push_back(packing_from_centers(g_, centers_));
      if (results_.size() >= limit_) stopped_ = true;
      return;
    }
    const Rotation& nbrs = g_.rotation(v);
    const std::array<Vertex, 4> options{v, nbrs[0], nbrs[1], nbrs[2]};
    for (Vertex c : options) {
      if (!can_center(c)) continue;
      set_star(c, 1);
      centers_.push_back(c);
      if (consistent_around(c)) search(v + 1);
      centers_.pop_back();
      set_star(c, 0);
      if (stopped_) return;
    }
  }

  const EmbeddedCubicGraph& g_;
  int n_;
  std::vector<char> covered_;
  std::vector<char> may_center_;
  std::size_t limit_;
  BudgetMeter& meter_;
  std::vector<Vertex> centers_;
  std::vector<StarPacking> results_;
  bool stopped_ = false;
};

}  // namespace

StarPackingSearch find_star_packings(const EmbeddedCubicGraph& g, std::size_t limit,
                                     const SearchBudget& budget, const StarSearchOptions& options) {
  if (limit == 0) throw InvalidInput("limit must be positive");
  if (!verify_fullerene(g).passed()) throw InvalidInput("input is not a fullerene graph");

  StarPackingSearch out;
  if (g.vertex_count() % 8 != 0) {
    out.status = SearchStatus::ModuloReject;
    return out;
  }

  std::vector<char> may_center(g.vertex_count(), 1);
  if (options.p0_only) {
    const FaceSet faces = trace_faces(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (int f : faces.faces_around(g, v)) {
        if (faces.faces[f].size() != 6) may_center[v] = 0;
      }
    }
  }

  BudgetMeter meter(budget);
  StarSearch search(g, std::move(may_center), limit, meter);
  search.run();
  out.packings = search.take_results();
  out.nodes = meter.nodes();
  if (meter.exceeded()) {
    out.status = SearchStatus::BudgetExceeded;
  } else if (out.packings.size() >= limit) {
    out.status = SearchStatus::Found;
  } else {
    out.status = SearchStatus::Exhausted;
  }
  return out;
}

namespace {

class PseudoSearch {
 public:
  PseudoSearch(const EmbeddedCubicGraph& g, int star_count, BudgetMeter& meter)
      : g_(g), n_(g.vertex_count()), star_count_(star_count), covered_(n_, 0), meter_(meter) {}

  std::optional<PseudoMatching> run() {
    choose(0);
    return std::move(witness_);
  }

 private:
  bool free_star(Vertex c) const {
    if (covered_[c]) return false;
    for (Vertex w : g_.rotation(c)) {
      if (covered_[w]) return false;
    }
    return true;
  }

  void set_star(Vertex c, char value) {
    covered_[c] = value;
    for (Vertex w : g_.rotation(c)) covered_[w] = value;
  }

  void complete() {
    std::vector<int> local(n_, -1);
    std::vector<Vertex> global;
    for (Vertex v = 0; v < n_; ++v) {
      if (!covered_[v]) {
        local[v] = static_cast<int>(global.size());
        global.push_back(v);
      }
    }
    std::vector<std::vector<int>> adjacency(global.size());
    for (std::size_t i = 0; i < global.size(); ++i) {
      for (Vertex w : g_.rotation(global[i])) {
        if (local[w] >= 0) adjacency[i].push_back(local[w]);
      }
    }
    const auto mate = maximum_matching(adjacency);
    PseudoMatching pm;
    for (std::size_t i = 0; i < global.size(); ++i) {
      if (mate[i] < 0) return;
      if (static_cast<int>(i) < mate[i]) pm.pairs.emplace_back(global[i], global[mate[i]]);
    }
    for (Vertex c : centers_) pm.stars.push_back(star_at(g_, c));
    witness_ = std::move(pm);
  }

  void choose(Vertex from) {
    if (witness_ || meter_.exceeded()) return;
    if (static_cast<int>(centers_.size()) == star_count_) {
      if (meter_.charge()) complete();
      return;
    }
    const int still_needed = star_count_ - static_cast<int>(centers_.size());
    for (Vertex c = from; c + still_needed <= n_; ++c) {
      if (!free_star(c)) continue;
      if (!meter_.charge()) return;
      set_star(c, 1);
      centers_.push_back(c);
      choose(c + 1);
      centers_.pop_back();
      set_star(c, 0);
      if (witness_ || meter_.exceeded()) return;
    }
  }

  const EmbeddedCubicGraph& g_;
  int n_;
  int star_count_;
  std::vector<char> covered_;
  std::vector<Vertex> centers_;
  BudgetMeter& meter_;
  std::optional<PseudoMatching> witness_;
};

}  // namespace

PseudoMatchingSearch find_pseudo_matching(const EmbeddedCubicGraph& g, int star_count,
                                          const SearchBudget& budget) {
  PseudoMatchingSearch out;
  const int rest = g.vertex_count() - 4 * star_count;
  if (star_count < 0 || rest < 0 || rest % 2 != 0) {
    out.status = SearchStatus::ArithmeticInfeasible;
    return out;
  }
  BudgetMeter meter(budget);
  PseudoSearch search(g, star_count, meter);
  out.witness = search.run();
  out.nodes = meter.nodes();
  if (out.witness) {
    out.status = SearchStatus::Found;
  } else if (meter.exceeded()) {
    out.status = SearchStatus::BudgetExceeded;
  } else {
    out.status = SearchStatus::Exhausted;
  }
  return out;
}

}  // namespace fullerene
