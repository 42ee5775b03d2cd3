#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geoposet/digraph.hpp"
#include "geoposet/inversions.hpp"
#include "geoposet/permutation.hpp"

namespace geoposet {

/// Largest n accepted by enumerate_classes.
inline constexpr int kMaxEnumerationN = 9;

struct EquivalenceWitness {
  Permutation rho;
  OrientationClass orientation = OrientationClass::AllPreserving;
};

/// Searches rho in lexicographic order for rho * E(sigma) = E(pi) with rho
/// either order-preserving or order-reversing on all of E(sigma).  An empty
/// E(sigma) counts as order-preserving.  O(n! * n^2); practical for n <= 7.
std::optional<EquivalenceWitness> equivalent_bruteforce(const Permutation& sigma, const Permutation& pi);

/// related(D(sigma), D(pi)).
bool equivalent_fast(const Permutation& sigma, const Permutation& pi);

/// min(key(D(pi)), key(-D(pi))); equal exactly for geo-equivalent permutations.
CanonicalKey class_key(const Permutation& pi);

/// {pi, pi^-1, ((pi^c)^-1)^c, (((pi^c)^-1)^c)^-1}, in that order.
std::array<Permutation, 4> four_family(const Permutation& pi);

struct GeoClass {
  std::string label;
  int inversions = 0;
  Permutation representative;
  std::vector<Permutation> members;  // sorted
  CanonicalKey key;

  friend bool operator==(const GeoClass&, const GeoClass&) = default;
};

/// The geo-equivalence classes of S_n, sorted by (inversions, representative)
/// and labelled "k.m".
class ClassTable {
 public:
  ClassTable() = default;
  ClassTable(int n, std::vector<GeoClass> classes);

  int n() const { return n_; }
  std::size_t count() const { return classes_.size(); }
  const std::vector<GeoClass>& classes() const& { return classes_; }
  std::vector<GeoClass> classes() && { return std::move(classes_); }
  const GeoClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Index of the class containing pi.
  std::size_t index_of(const Permutation& pi) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

  friend bool operator==(const ClassTable& a, const ClassTable& b) {
    return a.n_ == b.n_ && a.classes_ == b.classes_;
  }

 private:
  int n_ = 0;
  std::vector<GeoClass> classes_;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> by_key_;
};

/// Groups all n! permutations by class_key.  threads == 0 picks the hardware
/// concurrency; the result is identical for every thread count.  Throws
/// InputError outside 1 <= n <= 9.
ClassTable enumerate_classes(int n, unsigned threads = 0);

/// All members of [pi], found by scanning the permutations of the same size
/// and inversion count.  Intended for n <= 9.
std::vector<Permutation> class_members(const Permutation& pi);

/// Sorts keys and assigns "k.m" labels; exposed for deserialisation.
std::vector<GeoClass> label_classes(std::vector<GeoClass> classes);

unsigned resolve_threads(unsigned requested);

}  // namespace geoposet
