#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoposet/digraph.hpp"
#include "geoposet/permutation.hpp"

namespace geoposet {

enum class NodeKind { Leaf, Degenerate0, Degenerate1, Prime };

const char* to_string(NodeKind k);

/// A strong module of the decomposed graph.
struct MDNode {
  NodeKind kind = NodeKind::Leaf;
  VertexSet vertices = 0;
  std::vector<MDNode> children;  // sorted by lowest vertex
};

struct MDTree {
  Graph graph;
  MDNode root;
};

/// Every vertex outside m sees either all of m or none of it.
bool is_module(const Graph& g, VertexSet m);

/// Smallest module of g containing `seed`.
VertexSet module_closure(const Graph& g, VertexSet seed);

/// Modular decomposition: components for a disconnected node, co-components
/// for a connected node with disconnected complement, and maximal proper
/// submodules otherwise.
MDTree decompose(const Graph& g);

/// Q(M): one vertex per child of `node`, children adjacent when their members
/// are adjacent in g.  Child k of the node becomes vertex k + 1.
Graph quotient(const Graph& g, const MDNode& node);

/// Transitive orientability of a graph by implication classes of the forcing
/// relation: orientable iff no class holds an edge in both directions.
bool is_transitively_orientable(const Graph& g);

/// 2^s * k_1! * ... * k_t! over the prime and degenerate-1 nodes of the
/// decomposition; 0 when some prime quotient has no transitive orientation.
std::uint64_t count_transitive_orientations(const Graph& g);

/// No prime node in the decomposition.
bool is_cograph(const Graph& g);

/// Raised by cograph_class_size when G(pi) has a prime node.
class NotCographError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ClassSizeReport {
  std::uint64_t represented = 0;  // n(D)
  std::uint64_t class_size = 0;
  bool self_related = false;      // D isomorphic to -D
};

/// Class size of [pi] for a permutation whose graph is a cograph: n(D) is the
/// product over degenerate-0 nodes of k! / (n_1! ... n_t!), where the n_j
/// count children by isomorphism type of the subdigraph they induce in D(pi).
ClassSizeReport cograph_class_size(const Permutation& pi);

/// For every prime node M, Q(M) has either no transitive orientation or
/// exactly two (checked by brute-force enumeration).
bool prime_unique_orientability_check(const Graph& g);

/// Verifies that relabelling the complement orientation f1 by the digraph
/// automorphism `f` (f[v-1] = image of v) yields another transitive
/// orientation inducing the same permutation together with `f_arcs`.
/// Returns false if f is not an automorphism of f_arcs or any step fails.
bool orientation_symmetry_holds(const Digraph& f_arcs, const Digraph& f1, const std::vector<int>& f);

}  // namespace geoposet
