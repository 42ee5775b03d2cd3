#include "geoposet/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

namespace geoposet {

VertexSet vertex_set(std::initializer_list<int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= vertex_bit(v);
  return s;
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw InputError("digraph size out of range: " + std::to_string(n));
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (const Arc& a : arcs) add_arc(a.from, a.to);
}

void Digraph::add_arc(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
    throw InputError("invalid arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  out_[idx(u)] |= vertex_bit(v);
  in_[idx(v)] |= vertex_bit(u);
}

void Digraph::remove_arc(int u, int v) {
  out_[idx(u)] &= ~vertex_bit(v);
  in_[idx(v)] &= ~vertex_bit(u);
}

int Digraph::out_degree(int v) const { return std::popcount(out_[idx(v)]); }
int Digraph::in_degree(int v) const { return std::popcount(in_[idx(v)]); }

int Digraph::arc_count() const {
  int c = 0;
  for (VertexSet s : out_) c += std::popcount(s);
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : members(out_[idx(u)])) out.push_back({u, v});
  return out;
}

Digraph Digraph::induced(VertexSet s) const {
  const std::vector<int> keep = members(s);
  std::vector<int> label(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) label[static_cast<std::size_t>(keep[k])] = static_cast<int>(k) + 1;
  Digraph out(static_cast<int>(keep.size()));
  for (int u : keep)
    for (int v : members(out_[idx(u)] & s))
      out.add_arc(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return out;
}

Digraph Digraph::relabeled(const std::vector<int>& image) const {
  Digraph out(n_);
  for (const Arc& a : arcs()) out.add_arc(image[idx(a.from)], image[idx(a.to)]);
  return out;
}

// ------------------------------------------------------------------ Graph

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw InputError("graph size out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
    throw InputError("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  adj_[static_cast<std::size_t>(u - 1)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
}

int Graph::edge_count() const {
  int c = 0;
  for (VertexSet s : adj_) c += std::popcount(s);
  return c / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : members(neighbors(u)))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (int u = 1; u <= n_; ++u)
    out.adj_[static_cast<std::size_t>(u - 1)] = all() & ~adj_[static_cast<std::size_t>(u - 1)] & ~vertex_bit(u);
  return out;
}

Graph Graph::induced(VertexSet s) const {
  const std::vector<int> keep = members(s);
  std::vector<int> label(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) label[static_cast<std::size_t>(keep[k])] = static_cast<int>(k) + 1;
  Graph out(static_cast<int>(keep.size()));
  for (int u : keep)
    for (int v : members(neighbors(u) & s))
      if (u < v) out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return out;
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.size());
  for (const Arc& a : d.arcs()) g.add_edge(a.from, a.to);
  return g;
}

Graph permutation_graph(const Permutation& p) {
  Graph g(p.size());
  for (const Pair& e : inversion_set(p).pairs()) g.add_edge(e.i, e.j);
  return g;
}

// ----------------------------------------------------------- CanonicalKey

bool CanonicalKey::bit(int row, int col) const {
  const int b = row * n_ + col;
  return (bits_[static_cast<std::size_t>(b / 64)] >> (63 - b % 64)) & 1U;
}

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out += digits[(n_ >> 4) & 0xF];
  out += digits[n_ & 0xF];
  const int nbits = n_ * n_;
  for (int nib = 0; nib * 4 < nbits; ++nib) {
    int value = 0;
    for (int k = 0; k < 4; ++k) {
      const int b = nib * 4 + k;
      int bitv = 0;
      if (b < nbits) bitv = static_cast<int>((bits_[static_cast<std::size_t>(b / 64)] >> (63 - b % 64)) & 1U);
      value = (value << 1) | bitv;
    }
    out += digits[value];
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& text) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InputError("bad hex digit in canonical key");
  };
  if (text.size() < 2) throw InputError("canonical key too short");
  const int n = nibble(text[0]) * 16 + nibble(text[1]);
  if (n > kMaxN) throw InputError("canonical key n out of range");
  const std::size_t expected = 2 + static_cast<std::size_t>((n * n + 3) / 4);
  if (text.size() != expected) throw InputError("canonical key has wrong length");
  std::array<std::uint64_t, 4> bits{};
  for (std::size_t nib = 0; nib + 2 < text.size(); ++nib) {
    const int value = nibble(text[nib + 2]);
    for (int k = 0; k < 4; ++k) {
      const int b = static_cast<int>(nib) * 4 + k;
      if (b < n * n && ((value >> (3 - k)) & 1))
        bits[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (63 - b % 64);
    }
  }
  return CanonicalKey(n, bits);
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(k.n()) * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : k.bits()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ------------------------------------------------------- digraph builders

Digraph from_perm(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxVertices) throw InputError("permutation too large for a digraph");
  Digraph d(n);
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(p(k))] = k;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) d.add_arc(i, j);
  return d;
}

Digraph reverse(const Digraph& d) {
  Digraph out(d.size());
  for (const Arc& a : d.arcs()) out.add_arc(a.to, a.from);
  return out;
}

// ------------------------------------------------------ canonical labeling

namespace {

constexpr int kMax = CanonicalKey::kMaxN;

struct Coloring {
  std::array<std::uint8_t, kMax> color{};
  int num_colors = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Digraph& d) : n_(d.size()) {
    if (n_ > kMax) throw InputError("canonical_key supports at most 16 vertices");
    for (int v = 0; v < n_; ++v) {
      out_[static_cast<std::size_t>(v)] = d.out_neighbors(v + 1);
      in_[static_cast<std::size_t>(v)] = d.in_neighbors(v + 1);
    }
    // Twins (same neighbourhoods apart from each other, joined both ways or
    // not at all) are exchanged by an automorphism that fixes everything else.
    for (int v = 0; v < n_; ++v) {
      twin_rep_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
      for (int u = 0; u < v; ++u) {
        const VertexSet bu = VertexSet{1} << u;
        const VertexSet bv = VertexSet{1} << v;
        const auto su = static_cast<std::size_t>(u);
        const auto sv = static_cast<std::size_t>(v);
        if (((out_[su] & bv) != 0) != ((in_[su] & bv) != 0)) continue;
        if ((out_[su] & ~bv) == (out_[sv] & ~bu) && (in_[su] & ~bv) == (in_[sv] & ~bu)) {
          twin_rep_[sv] = twin_rep_[su];
          break;
        }
      }
    }
  }

  void run() {
    Coloring c;
    c.num_colors = n_ == 0 ? 0 : 1;
    search(c);
  }

  const std::array<std::uint64_t, 4>& best_bits() const { return best_; }
  const std::array<std::uint8_t, kMax>& best_order() const { return best_order_; }

 private:
  using Signature = std::array<std::uint8_t, 1 + 2 * kMax>;

  void refine(Coloring& c) const {
    std::array<Signature, kMax> sig{};
    std::array<std::uint8_t, kMax> order{};
    while (true) {
      for (int v = 0; v < n_; ++v) {
        Signature& s = sig[static_cast<std::size_t>(v)];
        s.fill(0);
        s[0] = c.color[static_cast<std::size_t>(v)];
        for (VertexSet m = out_[static_cast<std::size_t>(v)]; m; m &= m - 1)
          ++s[1 + c.color[static_cast<std::size_t>(std::countr_zero(m))]];
        for (VertexSet m = in_[static_cast<std::size_t>(v)]; m; m &= m - 1)
          ++s[1 + kMax + c.color[static_cast<std::size_t>(std::countr_zero(m))]];
        order[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
      }
      std::sort(order.begin(), order.begin() + n_, [&](std::uint8_t a, std::uint8_t b) {
        return sig[a] < sig[b];
      });
      int next = 0;
      Coloring r;
      for (int k = 0; k < n_; ++k) {
        const auto v = order[static_cast<std::size_t>(k)];
        if (k > 0 && sig[v] != sig[order[static_cast<std::size_t>(k - 1)]]) ++next;
        r.color[v] = static_cast<std::uint8_t>(next);
      }
      r.num_colors = n_ == 0 ? 0 : next + 1;
      const bool stable = r.num_colors == c.num_colors;
      c = r;
      if (stable) return;
    }
  }

  void search(Coloring c) {
    refine(c);
    if (c.num_colors == n_) {
      evaluate(c);
      return;
    }
    std::array<int, kMax> cell_size{};
    for (int v = 0; v < n_; ++v) ++cell_size[c.color[static_cast<std::size_t>(v)]];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;

    VertexSet tried_twins = 0;
    for (int v = 0; v < n_; ++v) {
      if (c.color[static_cast<std::size_t>(v)] != target) continue;
      const VertexSet rep = VertexSet{1} << twin_rep_[static_cast<std::size_t>(v)];
      if (tried_twins & rep) continue;
      tried_twins |= rep;

      Coloring child;
      child.num_colors = c.num_colors + 1;
      for (int w = 0; w < n_; ++w) {
        const int cw = c.color[static_cast<std::size_t>(w)];
        int nc = cw;
        if (cw > target || (cw == target && w != v)) nc = cw + 1;
        child.color[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(nc);
      }
      search(child);
    }
  }

  void evaluate(const Coloring& c) {
    std::array<std::uint8_t, kMax> order{};
    for (int v = 0; v < n_; ++v) order[c.color[static_cast<std::size_t>(v)]] = static_cast<std::uint8_t>(v);
    std::array<std::uint64_t, 4> bits{};
    int b = 0;
    for (int r = 0; r < n_; ++r) {
      const VertexSet row = out_[order[static_cast<std::size_t>(r)]];
      for (int col = 0; col < n_; ++col, ++b)
        if (row & (VertexSet{1} << order[static_cast<std::size_t>(col)]))
          bits[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (63 - b % 64);
    }
    if (!have_best_ || bits < best_) {
      best_ = bits;
      best_order_ = order;
      have_best_ = true;
    }
  }

  int n_;
  std::array<VertexSet, kMax> out_{};
  std::array<VertexSet, kMax> in_{};
  std::array<std::uint8_t, kMax> twin_rep_{};
  std::array<std::uint64_t, 4> best_{};
  std::array<std::uint8_t, kMax> best_order_{};
  bool have_best_ = false;
};

}  // namespace

CanonicalKey canonical_key(const Digraph& d) {
  Canonizer c(d);
  c.run();
  return CanonicalKey(d.size(), c.best_bits());
}

std::vector<int> canonical_order(const Digraph& d) {
  Canonizer c(d);
  c.run();
  std::vector<int> order;
  for (int k = 0; k < d.size(); ++k) order.push_back(c.best_order()[static_cast<std::size_t>(k)] + 1);
  return order;
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.size() != b.size() || a.arc_count() != b.arc_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

bool related(const Digraph& a, const Digraph& b) { return is_isomorphic(a, b) || is_isomorphic(a, reverse(b)); }

// ------------------------------------------------------ spanning embedding

std::optional<std::vector<int>> spanning_embeds(const Digraph& small, const Digraph& big) {
  const int n = small.size();
  if (big.size() != n) throw InputError("spanning_embeds: vertex counts differ");
  if (small.arc_count() > big.arc_count()) return std::nullopt;

  // Map high-degree vertices first so adjacency constraints bite early.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) order[static_cast<std::size_t>(v - 1)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return small.out_degree(a) + small.in_degree(a) > small.out_degree(b) + small.in_degree(b);
  });

  // Domain of each small vertex by degree dominance.
  std::vector<VertexSet> domain(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    for (int w = 1; w <= n; ++w)
      if (big.out_degree(w) >= small.out_degree(v) && big.in_degree(w) >= small.in_degree(v))
        domain[static_cast<std::size_t>(v)] |= vertex_bit(w);
  for (int v = 1; v <= n; ++v)
    if (domain[static_cast<std::size_t>(v)] == 0) return std::nullopt;

  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  VertexSet used = 0;

  auto candidates = [&](int v) {
    VertexSet cand = domain[static_cast<std::size_t>(v)] & ~used;
    for (int u : members(small.out_neighbors(v)))
      if (int fu = image[static_cast<std::size_t>(u)]; fu) cand &= big.in_neighbors(fu);
    for (int u : members(small.in_neighbors(v)))
      if (int fu = image[static_cast<std::size_t>(u)]; fu) cand &= big.out_neighbors(fu);
    return cand;
  };

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (VertexSet cand = candidates(v); cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand) + 1;
      image[static_cast<std::size_t>(v)] = w;
      used |= vertex_bit(w);
      if (self(self, depth + 1)) return true;
      used &= ~vertex_bit(w);
      image[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };

  if (!extend(extend, 0)) return std::nullopt;
  return std::vector<int>(image.begin() + 1, image.end());
}

// ---------------------------------------------------- transitive orientation

bool is_transitive(const Digraph& d) {
  for (int u = 1; u <= d.size(); ++u)
    for (int v : members(d.out_neighbors(u)))
      if ((d.out_neighbors(v) & ~d.out_neighbors(u) & ~vertex_bit(u)) != 0) return false;
  // A 2-cycle u->v->u would demand a loop; reject those too.
  for (int u = 1; u <= d.size(); ++u)
    if (d.out_neighbors(u) & d.in_neighbors(u)) return false;
  return true;
}

std::vector<Digraph> enumerate_transitive_orientations(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Digraph> out;
  Digraph partial(g.size());

  // Rejects a new arc x->y that closes a path whose transitive arc is absent
  // from G or already points the wrong way.
  auto consistent = [&](int x, int y) {
    for (int w : members(partial.out_neighbors(y))) {
      if (w == x) return false;
      if (!g.has_edge(x, w) || partial.has_arc(w, x)) return false;
    }
    for (int w : members(partial.in_neighbors(x))) {
      if (w == y) return false;
      if (!g.has_edge(w, y) || partial.has_arc(y, w)) return false;
    }
    return true;
  };

  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == edges.size()) {
      out.push_back(partial);
      return;
    }
    const auto [u, v] = edges[k];
    for (int dir = 0; dir < 2; ++dir) {
      const int x = dir == 0 ? u : v;
      const int y = dir == 0 ? v : u;
      if (!consistent(x, y)) continue;
      partial.add_arc(x, y);
      self(self, k + 1);
      partial.remove_arc(x, y);
    }
  };
  assign(assign, 0);
  return out;
}

Permutation induced_permutation(const Digraph& f, const Digraph& f1) {
  const int n = f.size();
  if (f1.size() != n) throw InputError("induced_permutation: vertex counts differ");
  const VertexSet all = n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  VertexSet seen_labels = 0;
  for (int v = 1; v <= n; ++v) {
    const VertexSet out = f.out_neighbors(v) | f1.out_neighbors(v);
    const VertexSet in = f.in_neighbors(v) | f1.in_neighbors(v);
    if ((f.out_neighbors(v) | f.in_neighbors(v)) & (f1.out_neighbors(v) | f1.in_neighbors(v)))
      throw InputError("induced_permutation: orientations share an edge");
    if ((out & in) || (out | in) != (all & ~vertex_bit(v)))
      throw InputError("induced_permutation: union is not a tournament");
    const int l = std::popcount(in) + 1;
    label[static_cast<std::size_t>(v)] = l;
    seen_labels |= vertex_bit(l);
  }
  if (seen_labels != all) throw InputError("induced_permutation: union is not a transitive tournament");

  std::vector<Pair> pairs;
  for (const Arc& a : f.arcs())
    pairs.push_back({label[static_cast<std::size_t>(a.from)], label[static_cast<std::size_t>(a.to)]});
  return perm_from_inversion_set(PairSet(n, std::move(pairs)));
}

}  // namespace geoposet
