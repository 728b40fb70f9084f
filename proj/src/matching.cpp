// Edmonds' blossom algorithm, O(V^3): BFS from each exposed vertex over
// alternating paths, shrinking odd cycles by relabelling their base.

#include <algorithm>
#include <queue>

#include "fullerene/search.hpp"

namespace fullerene {

namespace {

class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adjacency)
      : adj_(adjacency),
        n_(static_cast<int>(adjacency.size())),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      int end = find_augmenting_path(root);
      while (end != -1) {
        int pv = parent_[end];
        int next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adjacency) {
  return Blossom(adjacency).solve();
}

std::optional<std::vector<Edge>> find_perfect_matching(const EmbeddedCubicGraph& g) {
  std::vector<std::vector<int>> adjacency(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    adjacency[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  }
  const auto mate = maximum_matching(adjacency);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] == -1) return std::nullopt;
    if (v < mate[v]) edges.emplace_back(v, mate[v]);
  }
  return edges;
}

}  // namespace fullerene
