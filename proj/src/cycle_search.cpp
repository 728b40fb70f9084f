#include <algorithm>
#include <deque>

#include "fullerene/search.hpp"

namespace fullerene {

namespace {

// n = 5a + 6b with a, b >= 0.
bool splits_into_5_and_6(int n) {
  for (int b = 0; 6 * b <= n; ++b) {
    if ((n - 6 * b) % 5 == 0) return true;
  }
  return false;
}

class CycleFactorSearch5_6 {
 public:
  CycleFactorSearch5_6(const EmbeddedCubicGraph& g, BudgetMeter& meter)
      : g_(g), n_(g.vertex_count()), covered_(n_, 0), meter_(meter) {}

  std::optional<CycleFactor> run() {
    search(0, n_);
    return std::move(witness_);
  }

 private:
  // All 5- and 6-cycles through v over uncovered vertices, each listed once
  // (second vertex lower than last).
  std::vector<std::vector<Vertex>> cycles_through(Vertex v) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{v};
    std::vector<char> on_path(n_, 0);
    on_path[v] = 1;
    extend(path, on_path, out);
    return out;
  }

  void extend(std::vector<Vertex>& path, std::vector<char>& on_path,
              std::vector<std::vector<Vertex>>& out) {
    const Vertex tail = path.back();
    for (Vertex w : g_.rotation(tail)) {
      if (w == path.front() && (path.size() == 5 || path.size() == 6) && path[1] < path.back()) {
        out.push_back(path);
        continue;
      }
      if (covered_[w] || on_path[w] || path.size() == 6) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(path, on_path, out);
      path.pop_back();
      on_path[w] = 0;
    }
  }

  bool viable_after(const std::vector<Vertex>& cycle) const {
    for (Vertex v : cycle) {
      for (Vertex w : g_.rotation(v)) {
        if (covered_[w]) continue;
        int free = 0;
        for (Vertex x : g_.rotation(w)) free += !covered_[x];
        if (free < 2) return false;
      }
    }
    return true;
  }

  void search(Vertex from, int uncovered) {
    if (witness_ || !meter_.charge()) return;
    Vertex v = from;
    while (v < n_ && covered_[v]) ++v;
    if (v == n_) {
      witness_ = CycleFactor{chosen_};
      return;
    }
    for (auto& cycle : cycles_through(v)) {
      const int rest = uncovered - static_cast<int>(cycle.size());
      if (!splits_into_5_and_6(rest)) continue;
      for (Vertex x : cycle) covered_[x] = 1;
      if (viable_after(cycle)) {
        chosen_.push_back(cycle);
        search(v + 1, rest);
        if (witness_) return;
        chosen_.pop_back();
      }
      for (Vertex x : cycle) covered_[x] = 0;
      if (meter_.exceeded()) return;
    }
  }

  const EmbeddedCubicGraph& g_;
  int n_;
  std::vector<char> covered_;
  BudgetMeter& meter_;
  std::vector<std::vector<Vertex>> chosen_;
  std::optional<CycleFactor> witness_;
};

}  // namespace

CycleFactorSearch find_cycle_factor_5_6(const EmbeddedCubicGraph& g, const CycleFactor* hint,
                                        const SearchBudget& budget) {
  CycleFactorSearch out;
  if (!splits_into_5_and_6(g.vertex_count())) {
    out.status = SearchStatus::ArithmeticInfeasible;
    return out;
  }
  if (hint != nullptr) {
    if (validate_cycle_factor(g, *hint)) {
      out.status = SearchStatus::Found;
      out.witness = *hint;
      out.hint_used = true;
      return out;
    }
    out.hint_rejected = true;
  }
  BudgetMeter meter(budget);
  CycleFactorSearch5_6 search(g, meter);
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

namespace {

enum class EdgeState : char { Unknown, In, Out };

// Search state, copied at every branch.
struct HamiltonState {
  std::vector<EdgeState> edge;
  std::vector<int> in_count;
  std::vector<int> out_count;
  // For an endpoint of a path fragment: the other endpoint and the fragment
  // size. An isolated vertex is its own endpoint with size 1.
  std::vector<Vertex> other_end;
  std::vector<int> fragment_size;
  int edges_in = 0;
};

class HamiltonSolver {
 public:
  HamiltonSolver(const EmbeddedCubicGraph& g, BudgetMeter& meter)
      : g_(g), n_(g.vertex_count()), meter_(meter) {
    edges_ = g.edges();
    incident_.assign(n_, {});
    std::vector<int> fill(n_, 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      incident_[edges_[e].first][fill[edges_[e].first]++] = e;
      incident_[edges_[e].second][fill[edges_[e].second]++] = e;
    }
    // Incident edges in rotation order.
    for (Vertex v = 0; v < n_; ++v) {
      const Rotation& r = g.rotation(v);
      std::array<int, 3> ordered{};
      for (int k = 0; k < 3; ++k) ordered[k] = edge_between(v, r[k]);
      incident_[v] = ordered;
    }
  }

  std::optional<std::vector<Vertex>> run() {
    HamiltonState s;
    s.edge.assign(edges_.size(), EdgeState::Unknown);
    s.in_count.assign(n_, 0);
    s.out_count.assign(n_, 0);
    s.other_end.resize(n_);
    for (Vertex v = 0; v < n_; ++v) s.other_end[v] = v;
    s.fragment_size.assign(n_, 1);
    search(s);
    return std::move(result_);
  }

 private:
  int edge_between(Vertex a, Vertex b) const {
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<int>(it - edges_.begin()) : -1;
  }

  Vertex other(int e, Vertex v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

  bool set_in(HamiltonState& s, int e, std::deque<Vertex>& dirty, std::vector<int>& to_exclude) {
    if (s.edge[e] == EdgeState::In) return true;
    if (s.edge[e] == EdgeState::Out) return false;
    const Vertex a = edges_[e].first;
    const Vertex b = edges_[e].second;
    if (s.in_count[a] == 2 || s.in_count[b] == 2) return false;
    const Vertex end_a = s.other_end[a];
    const Vertex end_b = s.other_end[b];
    if (end_a == b) {
      // Closes a cycle; only the full cycle is allowed.
      if (s.fragment_size[a] != n_) return false;
    } else {
      const int size = s.fragment_size[a] + s.fragment_size[b];
      s.other_end[end_a] = end_b;
      s.other_end[end_b] = end_a;
      s.fragment_size[end_a] = size;
      s.fragment_size[end_b] = size;
      if (size < n_) {
        int closing = edge_between(end_a, end_b);
        if (closing >= 0) to_exclude.push_back(closing);
      }
    }
    s.edge[e] = EdgeState::In;
    ++s.in_count[a];
    ++s.in_count[b];
    ++s.edges_in;
    dirty.push_back(a);
    dirty.push_back(b);
    return true;
  }

  bool set_out(HamiltonState& s, int e, std::deque<Vertex>& dirty) {
    if (s.edge[e] == EdgeState::Out) return true;
    if (s.edge[e] == EdgeState::In) return false;
    s.edge[e] = EdgeState::Out;
    const Vertex a = edges_[e].first;
    const Vertex b = edges_[e].second;
    if (++s.out_count[a] > 1 || ++s.out_count[b] > 1) return false;
    dirty.push_back(a);
    dirty.push_back(b);
    return true;
  }

  bool propagate(HamiltonState& s, std::deque<Vertex>& dirty, std::vector<int>& to_exclude) {
    while (!dirty.empty() || !to_exclude.empty()) {
      if (!to_exclude.empty()) {
        int e = to_exclude.back();
        to_exclude.pop_back();
        if (s.edge[e] == EdgeState::In) {
          // The fragment endpoints were joined meanwhile; legal only if it
          // completed the cycle, which set_in already checked.
          continue;
        }
        if (!set_out(s, e, dirty)) return false;
        continue;
      }
      const Vertex v = dirty.front();
      dirty.pop_front();
      for (int e : incident_[v]) {
        if (s.edge[e] != EdgeState::Unknown) continue;
        if (s.in_count[v] == 2) {
          if (!set_out(s, e, dirty)) return false;
        } else if (s.out_count[v] == 1) {
          if (!set_in(s, e, dirty, to_exclude)) return false;
        }
      }
    }
    return true;
  }

  bool connected(const HamiltonState& s) const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int e : incident_[v]) {
        if (s.edge[e] == EdgeState::Out) continue;
        Vertex w = other(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  bool decide(HamiltonState& s, int e, bool in) {
    std::deque<Vertex> dirty;
    std::vector<int> to_exclude;
    const bool ok = in ? set_in(s, e, dirty, to_exclude) : set_out(s, e, dirty);
    return ok && propagate(s, dirty, to_exclude) && connected(s);
  }

  int branch_edge(const HamiltonState& s) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (s.in_count[v] != 1) continue;
      for (int e : incident_[v]) {
        if (s.edge[e] == EdgeState::Unknown) return e;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      for (int e : incident_[v]) {
        if (s.edge[e] == EdgeState::Unknown) return e;
      }
    }
    return -1;
  }

  void search(const HamiltonState& s) {
    if (result_ || !meter_.charge()) return;
    if (s.edges_in == n_) {
      result_ = extract(s);
      return;
    }
    const int e = branch_edge(s);
    if (e < 0) return;
    for (bool in : {true, false}) {
      HamiltonState next = s;
      if (decide(next, e, in)) search(next);
      if (result_ || meter_.exceeded()) return;
    }
  }

  std::vector<Vertex> extract(const HamiltonState& s) const {
    std::vector<Vertex> cycle_neighbours;
    for (int e : incident_[0]) {
      if (s.edge[e] == EdgeState::In) cycle_neighbours.push_back(other(e, 0));
    }
    std::vector<Vertex> cycle{0};
    Vertex prev = 0;
    Vertex cur = std::min(cycle_neighbours[0], cycle_neighbours[1]);
    while (cur != 0) {
      cycle.push_back(cur);
      Vertex next = -1;
      for (int e : incident_[cur]) {
        if (s.edge[e] != EdgeState::In) continue;
        Vertex w = other(e, cur);
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
    return cycle;
  }

  const EmbeddedCubicGraph& g_;
  int n_;
  BudgetMeter& meter_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> incident_;
  std::optional<std::vector<Vertex>> result_;
};

}  // namespace

HamiltonSearch find_hamiltonian_cycle(const EmbeddedCubicGraph& g, const SearchBudget& budget) {
  HamiltonSearch out;
  BudgetMeter meter(budget);
  HamiltonSolver solver(g, meter);
  out.cycle = solver.run();
  out.nodes = meter.nodes();
  if (out.cycle) {
    out.status = SearchStatus::Found;
  } else if (meter.exceeded()) {
    out.status = SearchStatus::BudgetExceeded;
  } else {
    out.status = SearchStatus::Exhausted;
  }
  return out;
}

PathPacking split_cycle_into_paths(const std::vector<Vertex>& cycle, int k) {
  if (k <= 0 || cycle.empty() || cycle.size() % static_cast<std::size_t>(k) != 0) {
    throw NotDivisible("cycle of length " + std::to_string(cycle.size()) +
                       " is not divisible into paths of " + std::to_string(k) + " vertices");
  }
  const auto start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  PathPacking packing;
  packing.k = k;
  const std::size_t len = cycle.size();
  for (std::size_t block = 0; block < len / k; ++block) {
    std::vector<Vertex> path;
    for (int i = 0; i < k; ++i) path.push_back(cycle[(start + block * k + i) % len]);
    packing.paths.push_back(std::move(path));
  }
  return packing;
}

}  // namespace fullerene
