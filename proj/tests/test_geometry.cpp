#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "geoposet/geometry.hpp"
#include "oracles.hpp"

using namespace geoposet;

namespace {

PairSet from_oracle(int n, const oracle::PairList& l) {
  std::vector<Pair> ps;
  for (auto [i, j] : l) ps.push_back({i, j});
  return PairSet(n, std::move(ps));
}

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

// Random spokes on both sides of the line ab, retried until in general
// position.
Realization random_realization(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-60, 60);
  for (;;) {
    Realization r;
    r.b = pt(coord(rng), coord(rng));
    r.a = pt(coord(rng), coord(rng));
    for (int k = 0; k < n; ++k) r.spokes.push_back({Rational(coord(rng), 7), Rational(coord(rng), 3)});
    try {
      validate_general_position(r);
      return r;
    } catch (const DegenerateConfiguration&) {
    }
  }
}

}  // namespace

TEST_CASE("orientation predicate") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, -1)) == -1);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(segments_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
  CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 1), pt(1, 1), pt(2, 0)));
  CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
}

TEST_CASE("template crossings are the inversion set") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : oracle::all_words(n)) {
      const Realization r = build_realization(Permutation(w));
      CHECK(crossings(r) == from_oracle(n, oracle::inversions(w)));
      CHECK(all_crossings(r).size() == oracle::inversions(w).size());
    }
}

TEST_CASE("template stays in general position for larger n") {
  for (const char* s : {"51284367", "10,9,8,7,6,5,4,3,2,1", "2,4,6,8,10,12,1,3,5,7,9,11"}) {
    const Permutation p = parse_permutation(s);
    const Realization r = build_realization(p);
    CHECK_NOTHROW(validate_general_position(r));
    CHECK(crossings(r) == inversion_set(p).pairs());
  }
}

TEST_CASE("recovery from the template") {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& p : all_permutations(n)) {
      const Recovery rec = recover_permutation(build_realization(p));
      CHECK(rec.perm == p);
      for (int v = 1; v <= n; ++v) CHECK(rec.relabel[static_cast<std::size_t>(v - 1)] == v);
    }
}

TEST_CASE("recovery from arbitrary realizations") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const Realization r = random_realization(n, rng);
    for (HalfPlane side : {HalfPlane::Left, HalfPlane::Right}) {
      const Recovery rec = recover_permutation(r, side);
      std::vector<Pair> relabelled;
      for (auto [i, j] : all_crossings(r)) {
        int x = rec.relabel[static_cast<std::size_t>(i - 1)];
        int y = rec.relabel[static_cast<std::size_t>(j - 1)];
        // Only pairs where the b-edge endpoint gets the smaller label may cross.
        CHECK(x < y);
        relabelled.push_back({std::min(x, y), std::max(x, y)});
      }
      CHECK(PairSet(n, relabelled) == inversion_set(rec.perm).pairs());
    }
  }
}

TEST_CASE("mirror image swaps the half-plane") {
  const Permutation p = parse_permutation("25314");
  Realization r = build_realization(p);
  for (Point& s : r.spokes) s.y = -s.y;
  CHECK(recover_permutation(r, HalfPlane::Right).perm == p);
}

TEST_CASE("degenerate configurations are rejected") {
  Realization r;
  r.b = pt(0, 0);
  r.a = pt(10, 0);
  r.spokes = {pt(2, 2), pt(4, 4), pt(3, 5)};
  CHECK_THROWS_AS(validate_general_position(r), DegenerateConfiguration);
  CHECK_THROWS_AS(crossings(r), DegenerateConfiguration);
  r.spokes = {pt(5, 0)};
  CHECK_THROWS_AS(validate_general_position(r), DegenerateConfiguration);
  r.spokes = {pt(2, 3), pt(2, 3)};
  CHECK_THROWS_AS(validate_general_position(r), DegenerateConfiguration);
}

TEST_CASE("rational text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("realization JSON round trip") {
  const Realization r = build_realization(parse_permutation("2431"));
  const nlohmann::json j = realization_to_json(r);
  CHECK(j["schema_version"] == 1);
  CHECK(realization_from_json(j) == r);
  CHECK(realization_from_json(nlohmann::json::parse(j.dump())) == r);
  nlohmann::json bad = j;
  bad["vertices"].erase("2");
  bad["vertices"]["7"] = bad["vertices"]["1"];
  CHECK_THROWS_AS(realization_from_json(bad), InputError);
  CHECK_THROWS_AS(realization_from_json(nlohmann::json{{"a", 1}}), InputError);
}

TEST_CASE("svg output") {
  const std::string svg = realization_svg(build_realization(parse_permutation("2431")));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("#d62728") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 8);
}
