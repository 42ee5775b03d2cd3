#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geoposet {

/// Raised for malformed input (bad permutation text, non-bijective words,
/// pair sets that violate their invariants).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1..n} in one-line (word) form.  word()[k-1] == pi(k).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int k) const { return word_[static_cast<std::size_t>(k - 1)]; }
  std::span<const int> word() const { return word_; }

  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Accepts contiguous digits ("2431", n <= 9) or comma-separated integers
/// ("10,3,1,2,4,5,6,7,8,9").
Permutation parse_permutation(std::string_view text);

/// Contiguous digits for n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& p);

Permutation inverse(const Permutation& p);

/// pi^c(k) = pi(n+1-k).
Permutation reverse(const Permutation& p);

/// (outer . inner)(k) = outer(inner(k)).
Permutation compose(const Permutation& outer, const Permutation& inner);

int inversion_count(const Permutation& p);

/// All permutations of {1..n} in lexicographic order.  Intended for n <= 9.
std::vector<Permutation> all_permutations(int n);

/// Lexicographic rank in S_n, 0-based.
std::size_t lex_rank(std::span<const int> word);
Permutation lex_unrank(int n, std::size_t rank);

std::size_t factorial(int n);

}  // namespace geoposet
