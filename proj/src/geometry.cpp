#include "geoposet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace geoposet {

namespace {

constexpr long kDirectionScale = 10000;

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Point sub(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Integer direction at `degrees` from the positive x-axis.
Point direction(double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  return {Rational(std::lround(std::cos(rad) * kDirectionScale)),
          Rational(std::lround(std::sin(rad) * kDirectionScale))};
}

Point ray_intersection(const Point& p, const Point& u, const Point& q, const Point& v) {
  // p + s u = q + t v
  const Rational det = cross(u, v);
  if (det == 0) throw DegenerateConfiguration("parallel rays in template");
  const Rational s = cross(sub(q, p), v) / det;
  return {p.x + s * u.x, p.y + s * u.y};
}

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) { return sign(cross(sub(q, p), sub(r, p))); }

bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
  const int o1 = orientation(p, q, r);
  const int o2 = orientation(p, q, s);
  const int o3 = orientation(r, s, p);
  const int o4 = orientation(r, s, q);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Realization build_realization(const Permutation& pi) {
  const int n = pi.size();
  Realization r;
  r.b = {Rational(0), Rational(0)};
  r.a = {Rational(100), Rational(0)};
  // Interior angles at b span (25, 75) degrees and at a span (35, 75), so
  // every b-ray meets every a-ray above the line ab.
  const double step_b = 50.0 / (n + 1);
  const double step_a = 40.0 / (n + 1);
  const Permutation inv = inverse(pi);
  r.spokes.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Point u = direction(25.0 + i * step_b);
    const int rank_at_a = inv(i);
    const Point v = direction(180.0 - (35.0 + rank_at_a * step_a));
    r.spokes[static_cast<std::size_t>(i - 1)] = ray_intersection(r.b, u, r.a, v);
  }
  return r;
}

void validate_general_position(const Realization& r) {
  std::vector<Point> pts{r.a, r.b};
  pts.insert(pts.end(), r.spokes.begin(), r.spokes.end());
  auto name = [&](std::size_t k) {
    if (k == 0) return std::string("a");
    if (k == 1) return std::string("b");
    return std::to_string(k - 1);
  };
  for (std::size_t x = 0; x < pts.size(); ++x)
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      if (pts[x] == pts[y]) throw DegenerateConfiguration("points " + name(x) + " and " + name(y) + " coincide");
      for (std::size_t z = y + 1; z < pts.size(); ++z)
        if (orientation(pts[x], pts[y], pts[z]) == 0)
          throw DegenerateConfiguration("points " + name(x) + ", " + name(y) + ", " + name(z) + " are collinear");
    }

  struct Segment {
    Point p, q;
  };
  std::vector<Segment> edges;
  for (const Point& s : r.spokes) {
    edges.push_back({r.b, s});
    edges.push_back({r.a, s});
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (!segments_cross(edges[e].p, edges[e].q, edges[f].p, edges[f].q)) continue;
      const Point x = ray_intersection(edges[e].p, sub(edges[e].q, edges[e].p), edges[f].p,
                                       sub(edges[f].q, edges[f].p));
      for (std::size_t g = 0; g < edges.size(); ++g) {
        if (g == e || g == f) continue;
        if (orientation(edges[g].p, edges[g].q, x) != 0) continue;
        const Rational lo_x = std::min(edges[g].p.x, edges[g].q.x), hi_x = std::max(edges[g].p.x, edges[g].q.x);
        const Rational lo_y = std::min(edges[g].p.y, edges[g].q.y), hi_y = std::max(edges[g].p.y, edges[g].q.y);
        if (lo_x <= x.x && x.x <= hi_x && lo_y <= x.y && x.y <= hi_y)
          throw DegenerateConfiguration("three edges meet at an interior point");
      }
    }
}

std::vector<std::pair<int, int>> all_crossings(const Realization& r) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= r.n(); ++i)
    for (int j = 1; j <= r.n(); ++j)
      if (i != j && segments_cross(r.b, r.spoke(i), r.a, r.spoke(j))) out.emplace_back(i, j);
  return out;
}

PairSet crossings(const Realization& r) {
  validate_general_position(r);
  std::vector<Pair> pairs;
  for (auto [i, j] : all_crossings(r))
    if (i < j) pairs.push_back({i, j});
  return PairSet(r.n(), std::move(pairs));
}

Recovery recover_permutation(const Realization& r, HalfPlane first) {
  validate_general_position(r);
  const int n = r.n();
  std::vector<int> chosen;
  std::vector<int> other;
  for (int v = 1; v <= n; ++v) {
    const bool left = orientation(r.b, r.a, r.spoke(v)) > 0;
    ((left == (first == HalfPlane::Left)) ? chosen : other).push_back(v);
  }

  // Sorts `group` by angle at `apex` measured from the ray towards `toward`.
  auto by_angle = [&](std::vector<int> group, const Point& apex, const Point& toward) {
    const Point base = sub(toward, apex);
    std::sort(group.begin(), group.end(), [&](int v, int w) {
      const Point pv = sub(r.spoke(v), apex);
      const Point pw = sub(r.spoke(w), apex);
      const int side = sign(cross(base, pv));
      const int turn = sign(cross(pv, pw));
      return turn == side;
    });
    for (std::size_t k = 1; k < group.size(); ++k)
      if (cross(sub(r.spoke(group[k - 1]), apex), sub(r.spoke(group[k]), apex)) == 0)
        throw DegenerateConfiguration("two vertices subtend equal angles");
    return group;
  };

  Recovery out;
  out.relabel.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> word;
  int next_label = 1;
  for (const std::vector<int>* group : {&chosen, &other}) {
    for (int v : by_angle(*group, r.b, r.a)) out.relabel[static_cast<std::size_t>(v - 1)] = next_label++;
    for (int v : by_angle(*group, r.a, r.b)) word.push_back(out.relabel[static_cast<std::size_t>(v - 1)]);
  }
  out.perm = Permutation(std::move(word));
  return out;
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int p(text.substr(0, slash));
    const boost::multiprecision::cpp_int q(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad rational '" + text + "'");
  }
}

nlohmann::json realization_to_json(const Realization& r) {
  auto pt = [](const Point& p) { return nlohmann::json::array({to_string(p.x), to_string(p.y)}); };
  nlohmann::json vertices = nlohmann::json::object();
  for (int v = 1; v <= r.n(); ++v) vertices[std::to_string(v)] = pt(r.spoke(v));
  return {{"schema_version", 1}, {"a", pt(r.a)}, {"b", pt(r.b)}, {"vertices", vertices}};
}

Realization realization_from_json(const nlohmann::json& j) {
  auto pt = [](const nlohmann::json& p) {
    if (!p.is_array() || p.size() != 2) throw InputError("point must be a two-element array");
    auto coord = [](const nlohmann::json& c) {
      if (c.is_string()) return parse_rational(c.get<std::string>());
      if (c.is_number_integer()) return Rational(c.get<long long>());
      throw InputError("coordinates must be \"p/q\" strings or integers");
    };
    return Point{coord(p[0]), coord(p[1])};
  };
  try {
    Realization r;
    r.a = pt(j.at("a"));
    r.b = pt(j.at("b"));
    const auto& vs = j.at("vertices");
    const int n = static_cast<int>(vs.size());
    if (n < 1) throw InputError("realization needs at least one spoke vertex");
    r.spokes.resize(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (auto it = vs.begin(); it != vs.end(); ++it) {
      const int v = std::stoi(it.key());
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw InputError("vertex labels must be exactly 1..n");
      seen[static_cast<std::size_t>(v - 1)] = true;
      r.spokes[static_cast<std::size_t>(v - 1)] = pt(it.value());
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed realization JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed realization JSON: ") + e.what());
  }
}

std::string realization_svg(const Realization& r) {
  auto d = [](const Rational& q) { return static_cast<double>(q); };
  std::vector<Point> pts{r.a, r.b};
  pts.insert(pts.end(), r.spokes.begin(), r.spokes.end());
  double min_x = d(pts[0].x), max_x = min_x, min_y = d(pts[0].y), max_y = min_y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, d(p.x));
    max_x = std::max(max_x, d(p.x));
    min_y = std::min(min_y, d(p.y));
    max_y = std::max(max_y, d(p.y));
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double size = 600.0;
  const double margin = 30.0;
  auto sx = [&](const Point& p) { return margin + (d(p.x) - min_x) / span * size; };
  auto sy = [&](const Point& p) { return margin + (max_y - d(p.y)) / span * size; };

  std::vector<bool> b_crossed(static_cast<std::size_t>(r.n()), false);
  std::vector<bool> a_crossed(static_cast<std::size_t>(r.n()), false);
  for (auto [i, j] : all_crossings(r)) {
    b_crossed[static_cast<std::size_t>(i - 1)] = true;
    a_crossed[static_cast<std::size_t>(j - 1)] = true;
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
     << size + 2 * margin << "\">\n";
  auto line = [&](const Point& p, const Point& q, bool hot) {
    os << "  <line x1=\"" << sx(p) << "\" y1=\"" << sy(p) << "\" x2=\"" << sx(q) << "\" y2=\"" << sy(q)
       << "\" stroke=\"" << (hot ? "#d62728" : "#555555") << "\" stroke-width=\"1.5\"/>\n";
  };
  for (int v = 1; v <= r.n(); ++v) {
    line(r.b, r.spoke(v), b_crossed[static_cast<std::size_t>(v - 1)]);
    line(r.a, r.spoke(v), a_crossed[static_cast<std::size_t>(v - 1)]);
  }
  auto dot = [&](const Point& p, const std::string& label) {
    os << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "  <text x=\"" << sx(p) + 6 << "\" y=\"" << sy(p) - 6 << "\" font-size=\"12\">" << label << "</text>\n";
  };
  dot(r.a, "a");
  dot(r.b, "b");
  for (int v = 1; v <= r.n(); ++v) dot(r.spoke(v), std::to_string(v));
  os << "</svg>\n";
  return os.str();
}

}  // namespace geoposet
