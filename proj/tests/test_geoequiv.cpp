#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "geoposet/geoequiv.hpp"
#include "oracles.hpp"

using namespace geoposet;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::set<std::string> names(const std::vector<Permutation>& ps) {
  std::set<std::string> out;
  for (const Permutation& p : ps) out.insert(to_string(p));
  return out;
}

}  // namespace

TEST_CASE("class counts for n = 1..7") {
  const std::vector<std::size_t> expected{1, 2, 4, 12, 39, 182, 1033};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_classes(n).count() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("enumeration range") {
  CHECK_THROWS_AS(enumerate_classes(0), InputError);
  CHECK_THROWS_AS(enumerate_classes(10), InputError);
}

TEST_CASE("classes of S5 by inversion count") {
  const ClassTable t = enumerate_classes(5);
  std::vector<int> per(11, 0);
  for (const GeoClass& c : t.classes()) ++per[static_cast<std::size_t>(c.inversions)];
  CHECK(per == std::vector<int>{1, 1, 2, 4, 6, 6, 7, 5, 4, 2, 1});
}

TEST_CASE("enumeration matches the brute-force partition for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::set<std::string>> ours;
    for (const GeoClass& c : enumerate_classes(n).classes()) ours.insert(names(c.members));
    std::set<std::set<std::string>> brute;
    for (const auto& c : oracle::classes(n)) {
      std::set<std::string> s;
      for (const auto& w : c) s.insert(to_string(Permutation(w)));
      brute.insert(s);
    }
    CHECK(ours == brute);
  }
}

TEST_CASE("enumeration does not depend on the worker count") {
  for (int n = 4; n <= 7; ++n) {
    const ClassTable one = enumerate_classes(n, 1);
    CHECK(enumerate_classes(n, 3) == one);
    CHECK(enumerate_classes(n, 8) == one);
  }
}

TEST_CASE("labels and representatives") {
  const ClassTable t = enumerate_classes(4);
  CHECK(t[0].label == "0.1");
  CHECK(to_string(t[0].representative) == "1234");
  CHECK(t[t.count() - 1].label == "6.1");
  for (const GeoClass& c : t.classes()) {
    CHECK(std::is_sorted(c.members.begin(), c.members.end()));
    CHECK(c.representative == c.members.front());
    for (const Permutation& p : c.members) CHECK(inversion_count(p) == c.inversions);
  }
  CHECK(t.find_label("5.2").has_value());
  CHECK_FALSE(t.find_label("7.1").has_value());
}

TEST_CASE("S4 classes with five inversions") {
  const ClassTable t = enumerate_classes(4);
  CHECK(names(t[t.index_of(P("3421"))].members) == std::set<std::string>{"3421", "4312"});
  CHECK(names(t[t.index_of(P("4231"))].members) == std::set<std::string>{"4231"});
}

TEST_CASE("distinct permutation graphs and their class counts") {
  for (auto [n, graphs, split] : {std::tuple{4, 11, 1}, std::tuple{5, 33, 6}}) {
    const ClassTable t = enumerate_classes(n);
    std::map<CanonicalKey, std::set<std::size_t>> by_graph;
    for (const Permutation& p : all_permutations(n)) {
      Digraph sym(n);
      for (auto [u, v] : permutation_graph(p).edges()) sym.add_arc(u, v), sym.add_arc(v, u);
      by_graph[canonical_key(sym)].insert(t.index_of(p));
    }
    int two = 0;
    for (const auto& [key, cls] : by_graph) {
      CHECK(cls.size() <= 2);
      if (cls.size() == 2) ++two;
    }
    CHECK(static_cast<int>(by_graph.size()) == graphs);
    CHECK(two == split);
  }
}

TEST_CASE("four-family") {
  const auto fam = four_family(P("2431"));
  CHECK(names({fam.begin(), fam.end()}) == std::set<std::string>{"2431", "4132", "3241", "4213"});
  for (const char* fixed : {"3412", "351624"})
    for (const Permutation& q : four_family(P(fixed))) CHECK(q == P(fixed));
}

TEST_CASE("four-family stays inside one class") {
  for (int n = 2; n <= 6; ++n) {
    const ClassTable t = enumerate_classes(n);
    for (const Permutation& p : all_permutations(n))
      for (const Permutation& q : four_family(p)) CHECK(t.index_of(q) == t.index_of(p));
  }
}

TEST_CASE("an involution equivalent to a six-cycle") {
  CHECK(class_key(P("465132")) == class_key(P("465213")));
  const auto w = equivalent_bruteforce(P("465213"), P("465132"));
  REQUIRE(w.has_value());
  CHECK(w->orientation != OrientationClass::Mixed);
  CHECK(act(w->rho, inversion_set(P("465213")).pairs()).image == inversion_set(P("465132")).pairs());
  // The published witness works as well.
  const ActionResult r = act(P("231456"), inversion_set(P("465213")).pairs());
  CHECK(r.image == inversion_set(P("465132")).pairs());
}

TEST_CASE("singleton class of 351624") {
  CHECK(class_members(P("351624")) == std::vector<Permutation>{P("351624")});
}

TEST_CASE("class of the eight-point example") {
  CHECK(names(class_members(P("51284367"))) == std::set<std::string>{"51284367", "23651784"});
}

TEST_CASE("fast test agrees with brute force on S4 x S4") {
  const auto perms = all_permutations(4);
  for (const Permutation& a : perms)
    for (const Permutation& b : perms) {
      const auto w = equivalent_bruteforce(a, b);
      CHECK(equivalent_fast(a, b) == w.has_value());
      std::vector<int> aw(a.word().begin(), a.word().end()), bw(b.word().begin(), b.word().end());
      CHECK(w.has_value() == oracle::geo_equivalent(aw, bw));
    }
}

TEST_CASE("fast test agrees with brute force on sampled S6 pairs") {
  const auto perms = all_permutations(6);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  int positives = 0;
  for (int k = 0; k < 400; ++k) {
    const Permutation& a = perms[pick(rng)];
    // Half of the pairs come from the same four-family so positives occur.
    const Permutation b = k % 2 ? perms[pick(rng)] : four_family(a)[static_cast<std::size_t>(k / 2 % 4)];
    const bool fast = equivalent_fast(a, b);
    CHECK(fast == equivalent_bruteforce(a, b).has_value());
    positives += fast;
  }
  CHECK(positives >= 200);
}

TEST_CASE("empty inversion sets are equivalent via the identity") {
  const auto w = equivalent_bruteforce(P("123"), P("123"));
  REQUIRE(w.has_value());
  CHECK(w->rho.is_identity());
  CHECK(w->orientation == OrientationClass::AllPreserving);
}

TEST_CASE("size mismatch is an input error") {
  CHECK_THROWS_AS(equivalent_fast(P("12"), P("123")), InputError);
  CHECK_THROWS_AS(equivalent_bruteforce(P("12"), P("123")), InputError);
}

TEST_CASE("classes are closed under inverse") {
  for (int n = 1; n <= 7; ++n) {
    const ClassTable t = enumerate_classes(n);
    for (const GeoClass& c : t.classes())
      for (const Permutation& p : c.members) CHECK(t.index_of(inverse(p)) == t.index_of(p));
  }
}
