#include "geoposet/inversions.hpp"

#include <algorithm>
#include <string>

namespace geoposet {

namespace {

// Dense membership table indexed [i][j], 1-based.
class PairMatrix {
 public:
  explicit PairMatrix(const PairSet& s)
      : n_(s.n()), bits_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0) {
    for (const Pair& p : s) bits_[index(p.i, p.j)] = 1;
  }
  bool operator()(int i, int j) const { return bits_[index(i, j)] != 0; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  int n_;
  std::vector<char> bits_;
};

}  // namespace

PairSet::PairSet(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
  for (const Pair& p : pairs_) {
    if (!(1 <= p.i && p.i < p.j && p.j <= n_))
      throw InputError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                       ") is not in U_" + std::to_string(n_));
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet PairSet::universe(int n) {
  std::vector<Pair> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  return PairSet(n, std::move(all));
}

bool PairSet::contains(int i, int j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
}

PairSet PairSet::complement() const {
  std::vector<Pair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!contains(i, j)) out.push_back({i, j});
  return PairSet(n_, std::move(out));
}

bool PairSet::is_subset_of(const PairSet& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

InversionSet::InversionSet(PairSet pairs) : pairs_(std::move(pairs)) {
  if (!is_inversion_set(pairs_))
    throw InputError("pair set violates the transitivity conditions of an inversion set");
}

const char* to_string(OrientationClass c) {
  switch (c) {
    case OrientationClass::AllPreserving: return "all-preserving";
    case OrientationClass::AllReversing: return "all-reversing";
    case OrientationClass::Mixed: return "mixed";
    case OrientationClass::Vacuous: return "vacuous";
  }
  return "?";
}

InversionSet inversion_set(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(p(k))] = k;
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) pairs.push_back({i, j});
  return InversionSet(PairSet(n, std::move(pairs)), InversionSet::Trusted{});
}

bool is_inversion_set(const PairSet& a) {
  const int n = a.n();
  PairMatrix in(a);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (in(i, j) && in(j, k) && !in(i, k)) return false;
        if (!in(i, j) && !in(j, k) && in(i, k)) return false;
      }
  return true;
}

Permutation perm_from_inversion_set(const PairSet& a) {
  if (!is_inversion_set(a))
    throw InputError("pair set violates the transitivity conditions of an inversion set");
  const int n = a.n();
  if (n < 1) throw InputError("inversion set over an empty ground set");
  // Insert symbols from n down to 1; when i is inserted every symbol already
  // in the word is larger, and exactly |{j > i : (i,j) in A}| of them precede i.
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    int larger_before = 0;
    for (int j = i + 1; j <= n; ++j)
      if (a.contains(i, j)) ++larger_before;
    word.insert(word.begin() + larger_before, i);
  }
  return Permutation(std::move(word));
}

Permutation perm_from_inversion_set(const InversionSet& a) { return perm_from_inversion_set(a.pairs()); }

ActionResult act(const Permutation& rho, const PairSet& a) {
  if (rho.size() != a.n()) throw InputError("act: permutation and pair set differ in n");
  std::vector<Pair> image;
  image.reserve(a.size());
  bool any_preserving = false;
  bool any_reversing = false;
  for (const Pair& p : a) {
    const int ri = rho(p.i);
    const int rj = rho(p.j);
    if (ri < rj) {
      any_preserving = true;
      image.push_back({ri, rj});
    } else {
      any_reversing = true;
      image.push_back({rj, ri});
    }
  }
  ActionResult out;
  out.image = PairSet(a.n(), std::move(image));
  if (any_preserving && any_reversing)
    out.orientation = OrientationClass::Mixed;
  else if (any_preserving)
    out.orientation = OrientationClass::AllPreserving;
  else if (any_reversing)
    out.orientation = OrientationClass::AllReversing;
  else
    out.orientation = OrientationClass::Vacuous;
  return out;
}

bool check_symmetric_difference(const Permutation& rho, const Permutation& sigma) {
  const int n = rho.size();
  if (sigma.size() != n) return false;
  const PairSet e_sigma = inversion_set(sigma).pairs();
  const PairSet e_rho = inversion_set(rho).pairs();
  const PairSet e_prod = inversion_set(compose(rho, sigma)).pairs();

  std::vector<Pair> preserved;
  std::vector<Pair> reversed;
  for (const Pair& p : e_sigma) {
    const int ri = rho(p.i);
    const int rj = rho(p.j);
    if (ri < rj)
      preserved.push_back({ri, rj});
    else
      reversed.push_back({rj, ri});
  }
  std::vector<Pair> prod_minus_rho;
  std::vector<Pair> rho_minus_prod;
  std::set_difference(e_prod.begin(), e_prod.end(), e_rho.begin(), e_rho.end(),
                      std::back_inserter(prod_minus_rho));
  std::set_difference(e_rho.begin(), e_rho.end(), e_prod.begin(), e_prod.end(),
                      std::back_inserter(rho_minus_prod));

  const PairSet preserved_set(n, std::move(preserved));
  const PairSet reversed_set(n, std::move(reversed));
  if (preserved_set != PairSet(n, prod_minus_rho)) return false;
  if (reversed_set != PairSet(n, rho_minus_prod)) return false;

  std::vector<Pair> sym = prod_minus_rho;
  sym.insert(sym.end(), rho_minus_prod.begin(), rho_minus_prod.end());
  return act(rho, e_sigma).image == PairSet(n, std::move(sym));
}

}  // namespace geoposet
