#pragma once

#include <utility>
#include <vector>

#include "wallkit/free_word.hpp"
#include "wallkit/mask.hpp"
#include "wallkit/walls.hpp"

namespace wallkit {

// Undirected tree on vertices 0..n-1. Connectivity and the edge count are
// verified at construction.
class Tree {
 public:
  Tree(int vertex_count, std::vector<std::pair<int, int>> edges);

  static Tree path(int vertex_count);
  static Tree star(int leaf_count);  // center is vertex 0

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  // Vertices on the side of edges()[e] away from vertex 0.
  const Mask& edge_side(int e) const { return side_[e]; }

  std::vector<int> bfs_distances(int source) const;
  int distance(int x, int y) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;       // adjacency as vertex lists
  std::vector<std::vector<int>> adj_edge_;  // parallel edge indices
  std::vector<Mask> side_;
};

// Both half-spaces of every edge, weight 1/2 each; wall distance equals the
// graph distance.
WallsStructure tree_to_walls(const Tree& t);

struct SubtreeHull {
  std::vector<int> edges;  // indices into Tree::edges(), sorted
  Mask terminals;
};

// Edge set of the Steiner subtree spanned by S: exactly the edges whose
// bipartition cuts S. Throws on empty S.
SubtreeHull hull_edges(const Tree& t, const Mask& terminals);

// Closed walk from base traversing every edge of the tree; length is exactly
// twice the edge count. Returned as the vertex sequence (2n+1 entries).
std::vector<int> covering_loop(const Tree& t, int base);

// Minimal length of a walk from start to end visiting every vertex of
// terminals: 2 |hull(S u {start,end})| - d(start,end).
int cover_walk_length(const Tree& t, int start, int end, const Mask& terminals);

// Finite subtree of the Cayley tree of a free group spanned by a set of
// reduced words: the prefix closure, one vertex per distinct prefix. The
// geodesic from the identity to a word is its prefix chain, so the trie
// contains every pairwise geodesic among the inserted words.
class WordTrie {
 public:
  explicit WordTrie(int rank) : rank_(rank) { insert(FreeWord{}); }

  int insert(const FreeWord& w);          // returns the vertex id of w
  int vertex_of(const FreeWord& w) const; // -1 when absent

  int vertex_count() const { return static_cast<int>(parents_.size()); }
  Tree tree() const;

 private:
  int rank_;
  std::vector<FreeWord> words_{};
  std::vector<int> parents_{};
  std::vector<std::vector<std::pair<int, int>>> children_{};  // (letter, child)
};

}  // namespace wallkit
