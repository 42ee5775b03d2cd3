#include <doctest.h>

#include <random>

#include "geoposet/digraph.hpp"
#include "oracles.hpp"

using namespace geoposet;

namespace {

oracle::Matrix matrix_of(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.size());
  oracle::Matrix m(n, std::vector<char>(n, 0));
  for (const Arc& a : d.arcs()) m[static_cast<std::size_t>(a.from - 1)][static_cast<std::size_t>(a.to - 1)] = 1;
  return m;
}

Digraph random_digraph(int n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Digraph d(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

}  // namespace

TEST_CASE("digraph basics") {
  Digraph d(4, {{1, 2}, {3, 4}});
  CHECK(d.has_arc(1, 2));
  CHECK_FALSE(d.has_arc(2, 1));
  CHECK(d.arc_count() == 2);
  CHECK(d.out_degree(1) == 1);
  CHECK(d.in_degree(4) == 1);
  CHECK_THROWS_AS(d.add_arc(2, 2), InputError);
  CHECK_THROWS_AS(d.add_arc(1, 5), InputError);
  d.remove_arc(1, 2);
  CHECK(d.arc_count() == 1);
  CHECK(reverse(Digraph(3, {{1, 2}, {2, 3}})) == Digraph(3, {{2, 1}, {3, 2}}));
  CHECK(Digraph(4, {{1, 3}, {3, 4}, {2, 4}}).induced(vertex_set({1, 3, 4})) == Digraph(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("permutation digraph and graph") {
  const Permutation p = parse_permutation("2431");
  const Digraph d = from_perm(p);
  CHECK(d == Digraph(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}}));
  CHECK(underlying_graph(d) == permutation_graph(p));
  CHECK(permutation_graph(p).edge_count() == 4);
}

TEST_CASE("reversing D(pi) gives a copy of D(pi^-1)") {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n)) CHECK(is_isomorphic(reverse(from_perm(p)), from_perm(inverse(p))));
}

TEST_CASE("canonical key is a complete invariant on S5 digraphs") {
  const auto words = oracle::all_words(5);
  std::vector<CanonicalKey> keys;
  std::vector<oracle::Matrix> mats;
  for (const auto& w : words) {
    keys.push_back(canonical_key(from_perm(Permutation(w))));
    mats.push_back(oracle::digraph(w));
  }
  std::size_t disagreements = 0;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a; b < words.size(); ++b) {
      if (oracle::inversions(words[a]).size() != oracle::inversions(words[b]).size()) {
        if (keys[a] == keys[b]) ++disagreements;
        continue;
      }
      if ((keys[a] == keys[b]) != oracle::isomorphic(mats[a], mats[b])) ++disagreements;
    }
  CHECK(disagreements == 0);
}

TEST_CASE("canonical key on arbitrary digraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const Digraph a = random_digraph(n, rng, 0.35);
    std::vector<int> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 1);
    std::shuffle(f.begin(), f.end(), rng);
    CHECK(canonical_key(a.relabeled(f)) == canonical_key(a));
    const Digraph b = random_digraph(n, rng, 0.35);
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(matrix_of(a), matrix_of(b)));
  }
}

TEST_CASE("canonical order realises the key") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = random_digraph(2 + trial % 7, rng, 0.4);
    const std::vector<int> order = canonical_order(d);
    std::vector<int> image(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) image[static_cast<std::size_t>(order[k] - 1)] = static_cast<int>(k + 1);
    const Digraph c = d.relabeled(image);
    const CanonicalKey key = canonical_key(d);
    for (int r = 1; r <= d.size(); ++r)
      for (int s = 1; s <= d.size(); ++s) CHECK(key.bit(r - 1, s - 1) == c.has_arc(r, s));
  }
}

TEST_CASE("canonical key survives a hex round trip") {
  const CanonicalKey k = canonical_key(from_perm(parse_permutation("51284367")));
  CHECK(CanonicalKey::from_hex(k.hex()) == k);
  CHECK_THROWS_AS(CanonicalKey::from_hex("zz"), InputError);
}

TEST_CASE("highly symmetric digraphs canonise quickly") {
  Digraph empty(16);
  Digraph complete(16);
  for (int u = 1; u <= 16; ++u)
    for (int v = u + 1; v <= 16; ++v) complete.add_arc(u, v), complete.add_arc(v, u);
  CHECK(canonical_key(empty).n() == 16);
  CHECK(canonical_key(complete) == canonical_key(complete.relabeled({16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1})));
}

TEST_CASE("related digraphs") {
  CHECK(related(from_perm(parse_permutation("3421")), from_perm(parse_permutation("4312"))));
  CHECK_FALSE(related(from_perm(parse_permutation("3421")), from_perm(parse_permutation("4231"))));
}

TEST_CASE("spanning embeddings agree with exhaustive search") {
  const auto words = oracle::all_words(4);
  for (const auto& s : words)
    for (const auto& p : words) {
      const Digraph ds = from_perm(Permutation(s));
      const Digraph dp = from_perm(Permutation(p));
      const auto f = spanning_embeds(ds, dp);
      CHECK(f.has_value() == oracle::maps_into(oracle::digraph(s), oracle::digraph(p), false));
      if (f) {
        for (const Arc& a : ds.arcs())
          CHECK(dp.has_arc((*f)[static_cast<std::size_t>(a.from - 1)], (*f)[static_cast<std::size_t>(a.to - 1)]));
      }
    }
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(Digraph(3, {{1, 2}, {2, 3}, {1, 3}})));
  CHECK_FALSE(is_transitive(Digraph(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_transitive(Digraph(2, {{1, 2}, {2, 1}})));
  for (const Permutation& p : all_permutations(5)) CHECK(is_transitive(from_perm(p)));
}

TEST_CASE("brute-force orientation enumeration") {
  Graph k3(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(enumerate_transitive_orientations(k3).size() == 6);
  Graph p3(3, {{1, 2}, {2, 3}});
  CHECK(enumerate_transitive_orientations(p3).size() == 2);
  Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(enumerate_transitive_orientations(c5).empty());
  for (const Digraph& d : enumerate_transitive_orientations(k3)) CHECK(is_transitive(d));
}

TEST_CASE("superimposed orientations give back the permutation") {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n)) {
      const Digraph f = from_perm(p);
      Digraph f1(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!f.has_arc(i, j)) f1.add_arc(i, j);
      CHECK(induced_permutation(f, f1) == p);
    }
}

TEST_CASE("superimposed orientations must form a transitive tournament") {
  CHECK_THROWS_AS(induced_permutation(Digraph(3, {{1, 2}}), Digraph(3, {{2, 3}})), InputError);
  CHECK_THROWS_AS(induced_permutation(Digraph(3, {{1, 2}, {2, 3}}), Digraph(3, {{3, 1}})), InputError);
}
