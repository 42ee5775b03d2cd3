#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoposet/inversions.hpp"
#include "geoposet/permutation.hpp"

namespace geoposet {

/// Vertex sets over {1..n} as bitmasks; vertex v is bit (v - 1).
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }
VertexSet vertex_set(std::initializer_list<int> vertices);
std::vector<int> members(VertexSet s);

struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed graph on vertices 1..n without self-loops.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Arc>& arcs);

  int size() const { return n_; }
  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  bool has_arc(int u, int v) const { return (out_[idx(u)] & vertex_bit(v)) != 0; }
  VertexSet out_neighbors(int v) const { return out_[idx(v)]; }
  VertexSet in_neighbors(int v) const { return in_[idx(v)]; }
  int out_degree(int v) const;
  int in_degree(int v) const;
  int arc_count() const;

  /// Sorted lexicographically.
  std::vector<Arc> arcs() const;

  /// Subdigraph induced by `s`, relabelled 1..|s| in increasing vertex order.
  Digraph induced(VertexSet s) const;

  /// image[v-1] is the new label of v.
  Digraph relabeled(const std::vector<int>& image) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  VertexSet all() const { return n_ == 32 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u - 1)] & vertex_bit(v)) != 0; }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  Graph induced(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

Graph underlying_graph(const Digraph& d);

/// Permutation graph G(pi): i ~ j iff (min, max) in E(pi).
Graph permutation_graph(const Permutation& p);

/// Canonical form of a digraph with at most 16 vertices: the lexicographically
/// smallest row-major adjacency bit string over the leaves of an
/// individualization/refinement search.  Equal keys exactly for isomorphic
/// digraphs.
class CanonicalKey {
 public:
  static constexpr int kMaxN = 16;

  CanonicalKey() = default;
  CanonicalKey(int n, std::array<std::uint64_t, 4> bits) : n_(n), bits_(bits) {}

  int n() const { return n_; }
  const std::array<std::uint64_t, 4>& bits() const { return bits_; }
  bool bit(int row, int col) const;  // 0-indexed

  /// Lowercase hex: two digits of n followed by the matrix bits.
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& text);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, 4> bits_{};
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// D(pi): vertex set 1..n, arc set E(pi).
Digraph from_perm(const Permutation& p);

/// -D: every arc flipped.
Digraph reverse(const Digraph& d);

CanonicalKey canonical_key(const Digraph& d);

/// Vertex order realizing canonical_key: order[k] is the vertex placed at
/// row k.
std::vector<int> canonical_order(const Digraph& d);

bool is_isomorphic(const Digraph& a, const Digraph& b);

/// D1 ~ D2 or D1 ~ -D2.
bool related(const Digraph& a, const Digraph& b);

/// A bijection f (f[u-1] = image of u) with (u,v) in small => (f(u),f(v)) in
/// big, or nullopt.  Both digraphs must have the same vertex count.
std::optional<std::vector<int>> spanning_embeds(const Digraph& small, const Digraph& big);

bool is_transitive(const Digraph& d);

/// Every transitive orientation of the edges of g.  Brute force over the
/// 2^|E| orientations with early cuts; meant as a test oracle for n <= 10.
std::vector<Digraph> enumerate_transitive_orientations(const Graph& g);

/// The permutation induced by superimposing transitive orientations f on G
/// and f1 on the complement of G.  Throws InputError when f u f1 is not a
/// transitive tournament.
Permutation induced_permutation(const Digraph& f, const Digraph& f1);

}  // namespace geoposet
