#include <doctest.h>

#include "geoposet/permutation.hpp"
#include "oracles.hpp"

using namespace geoposet;

TEST_CASE("parse and print") {
  CHECK(to_string(parse_permutation("2431")) == "2431");
  CHECK(to_string(parse_permutation("3,1,2")) == "312");
  const Permutation ten = parse_permutation("10,2,3,1,4,5,6,7,8,9");
  CHECK(ten.size() == 10);
  CHECK(ten(1) == 10);
  CHECK(to_string(ten) == "10,2,3,1,4,5,6,7,8,9");
  CHECK(parse_permutation(" 1 ").size() == 1);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(parse_permutation(""), InputError);
  CHECK_THROWS_AS(parse_permutation("1224"), InputError);
  CHECK_THROWS_AS(parse_permutation("1245"), InputError);
  CHECK_THROWS_AS(parse_permutation("12a"), InputError);
  CHECK_THROWS_AS(parse_permutation("0,1"), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 3}), InputError);
}

TEST_CASE("inverse of the eight-point example") {
  CHECK(to_string(inverse(parse_permutation("51284367"))) == "23651784");
}

TEST_CASE("composition applies the inner permutation first") {
  const Permutation rho = parse_permutation("231");
  const Permutation sigma = parse_permutation("213");
  // rho(sigma(1)) = rho(2) = 3
  CHECK(to_string(compose(rho, sigma)) == "321");
  CHECK(compose(rho, inverse(rho)).is_identity());
}

TEST_CASE("reverse reads the word backwards") {
  CHECK(to_string(reverse(parse_permutation("2431"))) == "1342");
}

TEST_CASE("lexicographic ranking round-trips") {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    REQUIRE(perms.size() == factorial(n));
    for (std::size_t r = 0; r < perms.size(); ++r) {
      CHECK(lex_rank(perms[r].word()) == r);
      CHECK(lex_unrank(n, r) == perms[r]);
    }
  }
}

TEST_CASE("inversion count agrees with the definition") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : oracle::all_words(n))
      CHECK(inversion_count(Permutation(w)) == static_cast<int>(oracle::inversions(w).size()));
}

TEST_CASE("inverse agrees with the definition") {
  for (const auto& w : oracle::all_words(5)) CHECK(inverse(Permutation(w)) == Permutation(oracle::inverse(w)));
}
