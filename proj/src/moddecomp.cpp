#include "geoposet/moddecomp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace geoposet {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Degenerate0: return "degenerate-0";
    case NodeKind::Degenerate1: return "degenerate-1";
    case NodeKind::Prime: return "prime";
  }
  return "?";
}

namespace {

std::vector<VertexSet> components(const Graph& g, VertexSet m) {
  std::vector<VertexSet> out;
  VertexSet rest = m;
  while (rest != 0) {
    VertexSet comp = rest & (~rest + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      next &= m & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

MDNode decompose_node(const Graph& g, const Graph& gc, VertexSet m) {
  MDNode node;
  node.vertices = m;
  if (std::popcount(m) == 1) {
    node.kind = NodeKind::Leaf;
    return node;
  }
  std::vector<VertexSet> parts = components(g, m);
  if (parts.size() > 1) {
    node.kind = NodeKind::Degenerate0;
  } else if (parts = components(gc, m); parts.size() > 1) {
    node.kind = NodeKind::Degenerate1;
  } else {
    // Both G|M and its complement are connected, so the maximal proper
    // modules inside M partition it; the one holding u is u together with
    // every v whose pair-closure {u,v} stays proper.
    node.kind = NodeKind::Prime;
    parts.clear();
    VertexSet assigned = 0;
    for (int u : members(m)) {
      if (assigned & vertex_bit(u)) continue;
      VertexSet part = vertex_bit(u);
      for (int v : members(m & ~vertex_bit(u)))
        if (module_closure(g, vertex_bit(u) | vertex_bit(v)) != m) part |= vertex_bit(v);
      parts.push_back(part);
      assigned |= part;
    }
  }
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  for (VertexSet p : parts) node.children.push_back(decompose_node(g, gc, p));
  return node;
}

void visit(const MDNode& node, const std::function<void(const MDNode&)>& fn) {
  fn(node);
  for (const MDNode& c : node.children) visit(c, fn);
}

std::uint64_t factorial64(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

bool is_module(const Graph& g, VertexSet m) {
  for (int w : members(g.all() & ~m)) {
    const VertexSet seen = g.neighbors(w) & m;
    if (seen != 0 && seen != m) return false;
  }
  return true;
}

VertexSet module_closure(const Graph& g, VertexSet seed) {
  VertexSet s = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w : members(g.all() & ~s)) {
      const VertexSet seen = g.neighbors(w) & s;
      if (seen != 0 && seen != s) {
        s |= vertex_bit(w);
        changed = true;
      }
    }
  }
  return s;
}

MDTree decompose(const Graph& g) {
  if (g.size() < 1) throw InputError("decompose: graph must have at least one vertex");
  return MDTree{g, decompose_node(g, g.complement(), g.all())};
}

Graph quotient(const Graph& g, const MDNode& node) {
  const int k = static_cast<int>(node.children.size());
  Graph q(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const int x = std::countr_zero(node.children[static_cast<std::size_t>(a)].vertices) + 1;
      const int y = std::countr_zero(node.children[static_cast<std::size_t>(b)].vertices) + 1;
      if (g.has_edge(x, y)) q.add_edge(a + 1, b + 1);
    }
  return q;
}

bool is_transitively_orientable(const Graph& g) {
  const int n = g.size();
  auto id = [n](int u, int v) { return static_cast<std::size_t>((u - 1) * n + (v - 1)); };
  UnionFind uf(static_cast<std::size_t>(n * n));
  // (a,b) forces (a,b') whenever b and b' are distinct, non-adjacent
  // neighbours of a; dually (b,a) forces (b',a).
  for (int a = 1; a <= n; ++a) {
    const std::vector<int> nb = members(g.neighbors(a));
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        if (g.has_edge(nb[x], nb[y])) continue;
        uf.unite(id(a, nb[x]), id(a, nb[y]));
        uf.unite(id(nb[x], a), id(nb[y], a));
      }
  }
  for (auto [u, v] : g.edges())
    if (uf.find(id(u, v)) == uf.find(id(v, u))) return false;
  return true;
}

std::uint64_t count_transitive_orientations(const Graph& g) {
  const MDTree tree = decompose(g);
  std::uint64_t count = 1;
  bool orientable = true;
  visit(tree.root, [&](const MDNode& node) {
    if (node.kind == NodeKind::Prime) {
      if (!is_transitively_orientable(quotient(g, node))) orientable = false;
      count *= 2;
    } else if (node.kind == NodeKind::Degenerate1) {
      count *= factorial64(static_cast<int>(node.children.size()));
    }
  });
  return orientable ? count : 0;
}

bool is_cograph(const Graph& g) {
  bool prime = false;
  visit(decompose(g).root, [&](const MDNode& node) { prime = prime || node.kind == NodeKind::Prime; });
  return !prime;
}

ClassSizeReport cograph_class_size(const Permutation& pi) {
  const Graph g = permutation_graph(pi);
  const Digraph d = from_perm(pi);
  const MDTree tree = decompose(g);
  if (!is_cograph(g))
    throw NotCographError("G(" + to_string(pi) +
                          ") has a prime node; use class enumeration to size its class");

  ClassSizeReport report;
  report.represented = 1;
  visit(tree.root, [&](const MDNode& node) {
    if (node.kind != NodeKind::Degenerate0) return;
    std::map<CanonicalKey, int> types;
    for (const MDNode& c : node.children) ++types[canonical_key(d.induced(c.vertices))];
    std::uint64_t term = factorial64(static_cast<int>(node.children.size()));
    for (const auto& [key, count] : types) term /= factorial64(count);
    report.represented *= term;
  });
  report.self_related = is_isomorphic(d, reverse(d));
  report.class_size = report.self_related ? report.represented : 2 * report.represented;
  return report;
}

bool prime_unique_orientability_check(const Graph& g) {
  bool ok = true;
  visit(decompose(g).root, [&](const MDNode& node) {
    if (node.kind != NodeKind::Prime) return;
    const std::size_t count = enumerate_transitive_orientations(quotient(g, node)).size();
    if (count != 0 && count != 2) ok = false;
  });
  return ok;
}

bool orientation_symmetry_holds(const Digraph& f_arcs, const Digraph& f1, const std::vector<int>& f) {
  const int n = f_arcs.size();
  if (f1.size() != n || static_cast<int>(f.size()) != n) return false;
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[static_cast<std::size_t>(k)] != k + 1) return false;

  if (f_arcs.relabeled(f) != f_arcs) return false;
  const Digraph f2 = f1.relabeled(f);
  if (!is_transitive(f2) || underlying_graph(f2) != underlying_graph(f1)) return false;
  try {
    return induced_permutation(f_arcs, f1) == induced_permutation(f_arcs, f2);
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace geoposet
