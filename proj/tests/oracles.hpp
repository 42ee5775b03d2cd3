#pragma once

// Brute-force reference implementations used by the tests.  They work from
// the definitions on plain vectors and deliberately avoid the library's
// algorithms (canonical labelling, modular decomposition, embedding search).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using PairList = std::vector<std::pair<int, int>>;

// n x n adjacency matrix, 0-indexed.
using Matrix = std::vector<std::vector<char>>;

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Word word_of(int digits) {
  Word w;
  for (; digits > 0; digits /= 10) w.insert(w.begin(), digits % 10);
  return w;
}

inline Word inverse(const Word& w) {
  Word inv(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) inv[static_cast<std::size_t>(w[k] - 1)] = static_cast<int>(k + 1);
  return inv;
}

// (i, j), i < j, with j written before i.
inline PairList inversions(const Word& w) {
  PairList out;
  const int n = static_cast<int>(w.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)])
        out.emplace_back(w[static_cast<std::size_t>(b)], w[static_cast<std::size_t>(a)]);
  std::sort(out.begin(), out.end());
  return out;
}

inline Matrix digraph(const Word& w) {
  const std::size_t n = w.size();
  Matrix m(n, std::vector<char>(n, 0));
  for (auto [i, j] : inversions(w)) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
  return m;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t = m;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) t[a][b] = m[b][a];
  return t;
}

// Some bijection f with a->b arc in `small` implying f(a)->f(b) in `big`
// (or, with `exact`, arcs of `big` pulled back as well).
inline bool maps_into(const Matrix& small, const Matrix& big, bool exact) {
  const std::size_t n = small.size();
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (small[a][b] && !big[f[a]][f[b]]) ok = false;
        if (exact && !small[a][b] && big[f[a]][f[b]]) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) { return maps_into(a, b, true); }

inline bool geo_equivalent(const Word& s, const Word& p) {
  if (inversions(s).size() != inversions(p).size()) return false;
  const Matrix ds = digraph(s);
  return isomorphic(ds, digraph(p)) || isomorphic(ds, transpose(digraph(p)));
}

// Existence of rho with rho * E(s) inside E(p), rho preserving the order of
// every pair or reversing every pair.
inline bool homomorphic(const Word& s, const Word& p) {
  const PairList es = inversions(s);
  const std::set<std::pair<int, int>> ep_set = [&] {
    const PairList ep = inversions(p);
    return std::set<std::pair<int, int>>(ep.begin(), ep.end());
  }();
  if (es.size() > ep_set.size()) return false;
  Word rho(s.size());
  std::iota(rho.begin(), rho.end(), 1);
  do {
    bool keep = true;
    bool flip = true;
    for (auto [i, j] : es) {
      const int a = rho[static_cast<std::size_t>(i - 1)];
      const int b = rho[static_cast<std::size_t>(j - 1)];
      if (a < b) {
        flip = false;
        if (!ep_set.count({a, b})) keep = false;
      } else {
        keep = false;
        if (!ep_set.count({b, a})) flip = false;
      }
      if (!keep && !flip) break;
    }
    if (keep || flip) return true;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return false;
}

// Classes of S_n under geo_equivalent, each sorted, in order of first member.
inline std::vector<std::vector<Word>> classes(int n) {
  std::vector<std::vector<Word>> out;
  for (const Word& w : all_words(n)) {
    bool placed = false;
    for (auto& c : out)
      if (geo_equivalent(c.front(), w)) {
        c.push_back(w);
        placed = true;
        break;
      }
    if (!placed) out.push_back({w});
  }
  return out;
}

// Undirected graph as a symmetric matrix.
inline Matrix graph(int n, const PairList& edges) {
  Matrix m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) {
    m[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = 1;
    m[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = 1;
  }
  return m;
}

inline Matrix permutation_graph(const Word& w) {
  return graph(static_cast<int>(w.size()), inversions(w));
}

// Transitive orientations by trying all 2^|E| orientations.
inline std::uint64_t count_transitive_orientations(const Matrix& g) {
  const std::size_t n = g.size();
  PairList edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g[a][b]) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    Matrix d(n, std::vector<char>(n, 0));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (mask >> e & 1) std::swap(a, b);
      d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (d[a][b] && d[b][c] && !d[a][c]) transitive = false;
    if (transitive) ++count;
  }
  return count;
}

// Cographs are exactly the graphs without an induced path on four vertices.
inline bool is_cograph(const Matrix& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> q(4);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          q = {a, b, c, d};
          std::sort(q.begin(), q.end());
          do {
            auto e = [&](int x, int y) {
              return g[static_cast<std::size_t>(q[static_cast<std::size_t>(x)])]
                      [static_cast<std::size_t>(q[static_cast<std::size_t>(y)])] != 0;
            };
            if (e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(0, 3) && !e(1, 3)) return false;
          } while (std::next_permutation(q.begin(), q.end()));
        }
  return true;
}

// OEIS A006318, large Schroeder numbers, offset 0.
inline const std::vector<std::uint64_t> kLargeSchroeder{1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};

}  // namespace oracle
