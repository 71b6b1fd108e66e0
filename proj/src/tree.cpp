#include "wallkit/tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wallkit {

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ <= 0) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n_ - 1) {
    throw std::invalid_argument("tree must have n-1 edges");
  }
  adj_.assign(n_, {});
  adj_edge_.assign(n_, {});
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
      throw std::invalid_argument("bad tree edge");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adj_edge_[u].push_back(e);
    adj_edge_[v].push_back(e);
  }
  // Connectivity; also orient every edge away from vertex 0.
  std::vector<int> parent_edge(n_, -1), order;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    order.push_back(u);
    for (size_t i = 0; i < adj_[u].size(); ++i) {
      int v = adj_[u][i];
      if (!seen[v]) {
        seen[v] = true;
        parent_edge[v] = adj_edge_[u][i];
        q.push(v);
      }
    }
  }
  if (static_cast<int>(order.size()) != n_) {
    throw std::invalid_argument("tree is not connected");
  }
  // side_[e] = vertex set of the component of e not containing vertex 0;
  // accumulate child masks in reverse BFS order.
  std::vector<Mask> below(n_, Mask(n_));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it].set(*it);
    if (parent_edge[*it] >= 0) {
      auto [a, b] = edges_[parent_edge[*it]];
      int par = (below[*it].test(a)) ? b : a;
      below[par] |= below[*it];
    }
  }
  side_.assign(edge_count(), Mask(n_));
  for (int v = 0; v < n_; ++v) {
    if (parent_edge[v] >= 0) side_[parent_edge[v]] = below[v];
  }
}

Tree Tree::path(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.emplace_back(i, i + 1);
  return Tree(vertex_count, std::move(edges));
}

Tree Tree::star(int leaf_count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaf_count; ++i) edges.emplace_back(0, i);
  return Tree(leaf_count + 1, std::move(edges));
}

std::vector<int> Tree::bfs_distances(int source) const {
  std::vector<int> dist(n_, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

int Tree::distance(int x, int y) const { return bfs_distances(x)[y]; }

WallsStructure tree_to_walls(const Tree& t) {
  std::vector<std::pair<HalfSpace, Rat>> walls;
  walls.reserve(2 * t.edge_count());
  for (int e = 0; e < t.edge_count(); ++e) {
    walls.emplace_back(t.edge_side(e), Rat(1, 2));
    walls.emplace_back(t.edge_side(e).complement(), Rat(1, 2));
  }
  return WallsStructure(t.vertex_count(), std::move(walls));
}

SubtreeHull hull_edges(const Tree& t, const Mask& terminals) {
  if (terminals.empty()) throw std::invalid_argument("hull_edges: empty terminal set");
  SubtreeHull hull;
  hull.terminals = terminals;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (t.edge_side(e).cuts(terminals)) hull.edges.push_back(e);
  }
  return hull;
}

std::vector<int> covering_loop(const Tree& t, int base) {
  if (base < 0 || base >= t.vertex_count()) {
    throw std::invalid_argument("covering_loop: base outside tree");
  }
  std::vector<int> walk{base};
  std::vector<bool> visited(t.vertex_count(), false);
  // Iterative depth-first circuit: down and up once per edge.
  std::vector<std::pair<int, size_t>> stack{{base, 0}};
  visited[base] = true;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    bool descended = false;
    while (next < t.adjacency()[u].size()) {
      int v = t.adjacency()[u][next++];
      if (!visited[v]) {
        visited[v] = true;
        walk.push_back(v);
        stack.emplace_back(v, 0);
        descended = true;
        break;
      }
    }
    if (!descended) {
      stack.pop_back();
      if (!stack.empty()) walk.push_back(stack.back().first);
    }
  }
  return walk;
}

int cover_walk_length(const Tree& t, int start, int end, const Mask& terminals) {
  Mask s = terminals;
  s.set(start);
  s.set(end);
  int hull = static_cast<int>(hull_edges(t, s).edges.size());
  return 2 * hull - t.distance(start, end);
}

int WordTrie::insert(const FreeWord& w) {
  if (parents_.empty()) {
    words_.push_back(FreeWord{});
    parents_.push_back(-1);
    children_.push_back({});
  }
  int v = 0;
  for (int depth = 1; depth <= w.length(); ++depth) {
    int letter = w.letters()[depth - 1];
    int child = -1;
    for (auto [l, c] : children_[v]) {
      if (l == letter) {
        child = c;
        break;
      }
    }
    if (child < 0) {
      child = vertex_count();
      words_.push_back(w.prefix(depth));
      parents_.push_back(v);
      children_.push_back({});
      children_[v].emplace_back(letter, child);
    }
    v = child;
  }
  return v;
}

int WordTrie::vertex_of(const FreeWord& w) const {
  int v = 0;
  for (int depth = 1; depth <= w.length(); ++depth) {
    int letter = w.letters()[depth - 1];
    int child = -1;
    for (auto [l, c] : children_[v]) {
      if (l == letter) {
        child = c;
        break;
      }
    }
    if (child < 0) return -1;
    v = child;
  }
  return v;
}

Tree WordTrie::tree() const {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < vertex_count(); ++v) edges.emplace_back(parents_[v], v);
  return Tree(vertex_count(), std::move(edges));
}

}  // namespace wallkit
