#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "geoposet/inversions.hpp"
#include "geoposet/permutation.hpp"

namespace geoposet {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A straight-line drawing of K_{2,n}: apexes a and b, and spoke vertex v at
/// spokes[v-1].  Each spoke is joined to both apexes.
struct Realization {
  Point a;
  Point b;
  std::vector<Point> spokes;

  int n() const { return static_cast<int>(spokes.size()); }
  const Point& spoke(int v) const { return spokes[static_cast<std::size_t>(v - 1)]; }

  friend bool operator==(const Realization&, const Realization&) = default;
};

/// Collinear points, concurrent edges or angle ties.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign of the cross product (q - p) x (r - p).
int orientation(const Point& p, const Point& q, const Point& r);

/// Open segments pq and rs cross at a single interior point.
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s);

/// Template realization: b = (0,0), a = (100,0), b-rays and a-rays fanned on
/// the upper side of line ab.  Vertex i sits where the b-ray ranked i meets the
/// a-ray ranked pi^-1(i).
Realization build_realization(const Permutation& pi);

/// Throws DegenerateConfiguration when three points are collinear or three
/// edges meet at an interior point.
void validate_general_position(const Realization& r);

/// Every (i, j), i != j, such that edge b-i crosses edge a-j.  Sorted.
std::vector<std::pair<int, int>> all_crossings(const Realization& r);

/// The pairs (i, j), i < j, with b-i crossing a-j.  Validates general
/// position first.
PairSet crossings(const Realization& r);

enum class HalfPlane { Left, Right };  // relative to the directed line b -> a

struct Recovery {
  Permutation perm;
  std::vector<int> relabel;  // relabel[v-1] = new label of vertex v
};

/// Relabels vertices by increasing angle abv (chosen half-plane first, then
/// the other one) and reads the induced permutation from the angle order at a.
Recovery recover_permutation(const Realization& r, HalfPlane first = HalfPlane::Left);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

nlohmann::json realization_to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);

/// SVG drawing; edges involved in a crossing are drawn in red.
std::string realization_svg(const Realization& r);

}  // namespace geoposet
