#include "geoposet/geoequiv.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <tuple>

namespace geoposet {

std::optional<EquivalenceWitness> equivalent_bruteforce(const Permutation& sigma, const Permutation& pi) {
  const int n = sigma.size();
  if (pi.size() != n) throw InputError("equivalent_bruteforce: sizes differ");
  const PairSet e_sigma = inversion_set(sigma).pairs();
  const PairSet e_pi = inversion_set(pi).pairs();
  if (e_sigma.size() != e_pi.size()) return std::nullopt;

  std::vector<char> target(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (const Pair& p : e_pi) target[static_cast<std::size_t>(p.i * (n + 1) + p.j)] = 1;

  // rho * (.) is injective, so equal sizes plus image inside E(pi) means
  // equality.
  std::vector<int> rho(static_cast<std::size_t>(n));
  std::iota(rho.begin(), rho.end(), 1);
  do {
    bool preserving = true;
    bool reversing = true;
    bool ok = true;
    for (const Pair& p : e_sigma) {
      const int ri = rho[static_cast<std::size_t>(p.i - 1)];
      const int rj = rho[static_cast<std::size_t>(p.j - 1)];
      if (ri < rj) reversing = false; else preserving = false;
      const int lo = std::min(ri, rj);
      const int hi = std::max(ri, rj);
      if (!(preserving || reversing) || !target[static_cast<std::size_t>(lo * (n + 1) + hi)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      OrientationClass oc = OrientationClass::AllPreserving;
      if (!e_sigma.empty() && !preserving) oc = OrientationClass::AllReversing;
      return EquivalenceWitness{Permutation(rho), oc};
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return std::nullopt;
}

bool equivalent_fast(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw InputError("equivalent_fast: sizes differ");
  if (inversion_count(sigma) != inversion_count(pi)) return false;
  return related(from_perm(sigma), from_perm(pi));
}

CanonicalKey class_key(const Permutation& pi) {
  const Digraph d = from_perm(pi);
  return std::min(canonical_key(d), canonical_key(reverse(d)));
}

std::array<Permutation, 4> four_family(const Permutation& pi) {
  const Permutation third = reverse(inverse(reverse(pi)));
  return {pi, inverse(pi), third, inverse(third)};
}

// ------------------------------------------------------------- ClassTable

ClassTable::ClassTable(int n, std::vector<GeoClass> classes) : n_(n), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) by_key_.emplace(classes_[i].key, i);
}

std::size_t ClassTable::index_of(const Permutation& pi) const {
  if (pi.size() != n_) throw InputError("permutation size does not match class table");
  auto it = by_key_.find(class_key(pi));
  if (it == by_key_.end()) throw InputError("permutation not covered by class table");
  return it->second;
}

std::optional<std::size_t> ClassTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  return std::nullopt;
}

std::vector<GeoClass> label_classes(std::vector<GeoClass> classes) {
  for (GeoClass& c : classes) {
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.inversions = inversion_count(c.representative);
  }
  std::sort(classes.begin(), classes.end(), [](const GeoClass& a, const GeoClass& b) {
    return std::tie(a.inversions, a.representative) < std::tie(b.inversions, b.representative);
  });
  int prev = -1;
  int m = 0;
  for (GeoClass& c : classes) {
    m = c.inversions == prev ? m + 1 : 1;
    prev = c.inversions;
    c.label = std::to_string(c.inversions) + "." + std::to_string(m);
  }
  return classes;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ClassTable enumerate_classes(int n, unsigned threads) {
  if (n < 1 || n > kMaxEnumerationN)
    throw InputError("enumerate_classes supports 1 <= n <= " + std::to_string(kMaxEnumerationN) +
                     "; got n = " + std::to_string(n));
  const std::size_t total = factorial(n);

  // key(D(pi)) for every pi in lexicographic rank order; the class key of pi
  // is then min(key[pi], key[pi^-1]) since -D(pi) is isomorphic to D(pi^-1).
  std::vector<CanonicalKey> digraph_key(total);
  std::vector<std::size_t> inverse_rank(total);

  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(total));
  const std::size_t chunk = (total + workers - 1) / workers;
  auto work = [&](std::size_t lo, std::size_t hi) {
    if (lo >= hi) return;
    const Permutation start = lex_unrank(n, lo);
    std::vector<int> w(start.word().begin(), start.word().end());
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (std::size_t r = lo; r < hi; ++r) {
      const Permutation p(w);
      digraph_key[r] = canonical_key(from_perm(p));
      for (int k = 1; k <= n; ++k) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(k - 1)] - 1)] = k;
      inverse_rank[r] = lex_rank(inv);
      std::next_permutation(w.begin(), w.end());
    }
  };
  if (workers <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(work, t * chunk, std::min(total, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<CanonicalKey> key(total);
  for (std::size_t r = 0; r < total; ++r) key[r] = std::min(digraph_key[r], digraph_key[inverse_rank[r]]);
  digraph_key.clear();
  digraph_key.shrink_to_fit();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });

  std::vector<GeoClass> classes;
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t r = order[k];
    if (k == 0 || key[r] != key[order[k - 1]]) {
      classes.emplace_back();
      classes.back().key = key[r];
    }
    classes.back().members.push_back(lex_unrank(n, r));
  }
  return ClassTable(n, label_classes(std::move(classes)));
}

std::vector<Permutation> class_members(const Permutation& pi) {
  const int n = pi.size();
  if (n > kMaxEnumerationN) throw InputError("class_members supports n <= 9");
  const CanonicalKey target = class_key(pi);
  const int inv = inversion_count(pi);
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    const Permutation p(w);
    if (inversion_count(p) == inv && class_key(p) == target) out.push_back(p);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace geoposet
