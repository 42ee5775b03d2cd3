#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json_fwd.hpp>

#include "geoposet/geoequiv.hpp"
#include "geoposet/permutation.hpp"

namespace geoposet {

/// Largest n accepted by build_poset.
inline constexpr int kMaxPosetN = 7;

/// [sigma] <= [pi]: same class, or strictly fewer inversions and D(sigma)
/// embeds as a spanning subdigraph of D(pi) or D(pi^-1).
bool precedes(const GeoClass& c_sigma, const GeoClass& c_pi);

struct Poset {
  int n = 0;
  ClassTable classes;
  std::vector<boost::dynamic_bitset<>> leq;  // leq[a][b] iff class a <= class b

  std::size_t size() const { return leq.size(); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq[a][b]; }
};

/// Relation over the classes of `table`, rows computed in parallel.
Poset build_poset(const ClassTable& table, unsigned threads = 0);

/// Enumerates S_n first.  Throws InputError outside 1 <= n <= 7.
Poset build_poset(int n, unsigned threads = 0);

/// Empty when leq is reflexive, antisymmetric and transitive; otherwise a
/// description of the first failure.
std::string partial_order_violation(const Poset& p);

struct HasseDiagram {
  std::vector<std::string> nodes;                        // class labels
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covers, lexicographic
};

HasseDiagram hasse(const Poset& p);

/// Unique minimal and unique maximal element.
bool is_bounded(const Poset& p);

struct GradingViolation {
  std::string lower;
  std::string upper;
  Permutation lower_rep;
  Permutation upper_rep;
  int gap = 0;  // inversion difference across the cover
};

struct GradednessReport {
  bool graded = true;
  std::vector<GradingViolation> violations;
};

/// Graded by inversion count: every cover raises it by exactly one.
GradednessReport is_graded(const Poset& p);

enum class Side { Left, Right };

/// Left: sigma * tau_i for each i with sigma(i) < sigma(i+1).
/// Right: tau_i * sigma for each i appearing before i+1 in sigma.
std::vector<Permutation> bruhat_covers(const Permutation& sigma, Side side);

struct BruhatExtensionReport {
  bool holds = true;
  std::vector<std::pair<Permutation, Permutation>> counterexamples;  // capped
  /// Strict relations of the poset outside the transitive closure of the
  /// class relation induced by the weak orders.
  std::vector<std::pair<std::size_t, std::size_t>> proper_pairs;
  Poset poset;
};

/// Checks that E(sigma) in E(pi), or E(sigma^-1) in E(pi^-1), implies
/// [sigma] <= [pi] for all of S_n.  Throws InputError outside 1 <= n <= 6.
BruhatExtensionReport bruhat_extension_check(int n, unsigned threads = 0);

/// DOT, bottom-up, nodes labelled "k.m (repr)".
std::string to_dot(const Poset& p, const HasseDiagram& h);

nlohmann::json poset_to_json(const Poset& p, const HasseDiagram& h);

}  // namespace geoposet
