#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "geoposet/permutation.hpp"

namespace geoposet {

/// An element (i, j) of U_n, always with i < j.
struct Pair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// A subset of U_n = {(i, j) : 1 <= i < j <= n}, kept sorted and unique.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(int n) : n_(n) {}
  PairSet(int n, std::vector<Pair> pairs);

  static PairSet universe(int n);

  int n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const& { return pairs_; }
  std::vector<Pair> pairs() && { return std::move(pairs_); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  bool contains(int i, int j) const;
  bool contains(Pair p) const { return contains(p.i, p.j); }

  /// Complement inside U_n.
  PairSet complement() const;

  /// Proper or improper containment.
  bool is_subset_of(const PairSet& other) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
};

/// A PairSet that satisfies both transitivity conditions, i.e. E(pi) for a
/// unique pi.
class InversionSet {
 public:
  /// Throws InputError when `pairs` is not the inversion set of any
  /// permutation.
  explicit InversionSet(PairSet pairs);

  const PairSet& pairs() const& { return pairs_; }
  PairSet pairs() && { return std::move(pairs_); }
  int n() const { return pairs_.n(); }
  std::size_t size() const { return pairs_.size(); }
  bool contains(int i, int j) const { return pairs_.contains(i, j); }

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  struct Trusted {};
  InversionSet(PairSet pairs, Trusted) : pairs_(std::move(pairs)) {}
  friend InversionSet inversion_set(const Permutation& p);

  PairSet pairs_;
};

enum class OrientationClass { AllPreserving, AllReversing, Mixed, Vacuous };

const char* to_string(OrientationClass c);

struct ActionResult {
  PairSet image;
  OrientationClass orientation = OrientationClass::Vacuous;
};

/// E(pi) = {(i, j) : i < j and i appears after j in the word}.
InversionSet inversion_set(const Permutation& p);

/// True iff (i,j),(j,k) in A implies (i,k) in A, and likewise for the
/// complement of A in U_n.
bool is_inversion_set(const PairSet& a);

/// The unique pi with E(pi) = A.  Symbol i is placed by counting how many
/// larger symbols precede it.
Permutation perm_from_inversion_set(const InversionSet& a);
Permutation perm_from_inversion_set(const PairSet& a);

/// rho * (i,j) applied to every pair of A, together with whether rho kept or
/// flipped the order of each pair.
ActionResult act(const Permutation& rho, const PairSet& a);

/// Checks rho * E(sigma) == E(rho.sigma) symmetric-difference E(rho), with the
/// order-preserving part equal to E(rho.sigma) \ E(rho) and the reversing part
/// equal to E(rho) \ E(rho.sigma).
bool check_symmetric_difference(const Permutation& rho, const Permutation& sigma);

}  // namespace geoposet
