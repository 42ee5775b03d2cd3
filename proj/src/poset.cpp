#include "geoposet/poset.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "geoposet/inversions.hpp"

namespace geoposet {

namespace {

bool embeds_either(const Digraph& small, const Digraph& big, const Digraph& big_inv) {
  return spanning_embeds(small, big).has_value() || spanning_embeds(small, big_inv).has_value();
}

template <typename Fn>
void parallel_rows(std::size_t rows, unsigned threads, Fn fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(rows)));
  if (workers <= 1) {
    for (std::size_t r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t r = t; r < rows; r += workers) fn(r);
    });
  for (auto& th : pool) th.join();
}

// Bitmask of E(pi) over pairs (i,j), i<j, for n <= 11.
std::uint64_t inversion_mask(const Permutation& pi) {
  const int n = pi.size();
  std::uint64_t m = 0;
  for (const Pair& p : inversion_set(pi).pairs()) m |= std::uint64_t{1} << ((p.i - 1) * n + (p.j - 1));
  return m;
}

}  // namespace

bool precedes(const GeoClass& c_sigma, const GeoClass& c_pi) {
  if (c_sigma.representative.size() != c_pi.representative.size())
    throw InputError("precedes: classes of different sizes");
  if (c_sigma.key == c_pi.key) return true;
  if (c_sigma.inversions >= c_pi.inversions) return false;
  return embeds_either(from_perm(c_sigma.representative), from_perm(c_pi.representative),
                       from_perm(inverse(c_pi.representative)));
}

Poset build_poset(const ClassTable& table, unsigned threads) {
  const std::size_t k = table.count();
  std::vector<Digraph> d;
  std::vector<Digraph> d_inv;
  for (const GeoClass& c : table.classes()) {
    d.push_back(from_perm(c.representative));
    d_inv.push_back(from_perm(inverse(c.representative)));
  }
  Poset p;
  p.n = table.n();
  p.classes = table;
  p.leq.assign(k, boost::dynamic_bitset<>(k));
  parallel_rows(k, threads, [&](std::size_t a) {
    auto& row = p.leq[a];
    row.set(a);
    for (std::size_t b = 0; b < k; ++b)
      if (table[a].inversions < table[b].inversions && embeds_either(d[a], d[b], d_inv[b])) row.set(b);
  });
  return p;
}

Poset build_poset(int n, unsigned threads) {
  if (n < 1 || n > kMaxPosetN)
    throw InputError("build_poset supports 1 <= n <= " + std::to_string(kMaxPosetN) + "; got n = " + std::to_string(n));
  return build_poset(enumerate_classes(n, threads), threads);
}

std::string partial_order_violation(const Poset& p) {
  const std::size_t k = p.size();
  const auto& cls = p.classes.classes();
  for (std::size_t a = 0; a < k; ++a) {
    if (!p.leq[a][a]) return "not reflexive at " + cls[a].label;
    for (std::size_t b = a + 1; b < k; ++b)
      if (p.leq[a][b] && p.leq[b][a]) return "not antisymmetric: " + cls[a].label + ", " + cls[b].label;
    for (std::size_t b = p.leq[a].find_first(); b != boost::dynamic_bitset<>::npos; b = p.leq[a].find_next(b))
      if (!p.leq[b].is_subset_of(p.leq[a])) return "not transitive through " + cls[a].label + " <= " + cls[b].label;
  }
  return {};
}

HasseDiagram hasse(const Poset& p) {
  const std::size_t k = p.size();
  HasseDiagram h;
  for (const GeoClass& c : p.classes.classes()) h.nodes.push_back(c.label);
  for (std::size_t a = 0; a < k; ++a) {
    boost::dynamic_bitset<> above = p.leq[a];
    above.reset(a);
    boost::dynamic_bitset<> covered = above;
    for (std::size_t c = above.find_first(); c != boost::dynamic_bitset<>::npos; c = above.find_next(c)) {
      boost::dynamic_bitset<> beyond = p.leq[c];
      beyond.reset(c);
      covered -= beyond;
    }
    for (std::size_t b = covered.find_first(); b != boost::dynamic_bitset<>::npos; b = covered.find_next(b))
      h.edges.emplace_back(a, b);
  }
  return h;
}

bool is_bounded(const Poset& p) {
  const std::size_t k = p.size();
  if (k == 0) return false;
  std::size_t bottoms = 0;
  std::size_t tops = 0;
  for (std::size_t a = 0; a < k; ++a) {
    if (p.leq[a].count() == k) ++bottoms;
    bool top = true;
    for (std::size_t b = 0; b < k && top; ++b) top = p.leq[b][a];
    if (top) ++tops;
  }
  return bottoms == 1 && tops == 1;
}

GradednessReport is_graded(const Poset& p) {
  GradednessReport report;
  const auto& cls = p.classes.classes();
  for (auto [a, b] : hasse(p).edges) {
    const int gap = cls[b].inversions - cls[a].inversions;
    if (gap == 1) continue;
    report.graded = false;
    report.violations.push_back({cls[a].label, cls[b].label, cls[a].representative, cls[b].representative, gap});
  }
  return report;
}

std::vector<Permutation> bruhat_covers(const Permutation& sigma, Side side) {
  const int n = sigma.size();
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  std::vector<Permutation> out;
  if (side == Side::Left) {
    for (int i = 1; i < n; ++i) {
      if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) continue;
      std::vector<int> c = w;
      std::swap(c[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(i)]);
      out.emplace_back(std::move(c));
    }
  } else {
    const Permutation inv = inverse(sigma);
    for (int i = 1; i < n; ++i) {
      if (inv(i) > inv(i + 1)) continue;
      std::vector<int> c = w;
      std::swap(c[static_cast<std::size_t>(inv(i) - 1)], c[static_cast<std::size_t>(inv(i + 1) - 1)]);
      out.emplace_back(std::move(c));
    }
  }
  return out;
}

BruhatExtensionReport bruhat_extension_check(int n, unsigned threads) {
  if (n < 1 || n > 6) throw InputError("bruhat_extension_check supports 1 <= n <= 6; got n = " + std::to_string(n));
  BruhatExtensionReport report;
  report.poset = build_poset(n, threads);
  const Poset& p = report.poset;
  const std::size_t k = p.size();

  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<std::size_t> cls;
  std::vector<std::uint64_t> e;
  std::vector<std::uint64_t> e_inv;
  for (const Permutation& s : perms) {
    cls.push_back(p.classes.index_of(s));
    e.push_back(inversion_mask(s));
    e_inv.push_back(inversion_mask(inverse(s)));
  }

  constexpr std::size_t kMaxCounterexamples = 20;
  std::vector<boost::dynamic_bitset<>> induced(k, boost::dynamic_bitset<>(k));
  for (std::size_t a = 0; a < k; ++a) induced[a].set(a);
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = 0; t < perms.size(); ++t) {
      const bool left = (e[s] & ~e[t]) == 0;
      const bool right = (e_inv[s] & ~e_inv[t]) == 0;
      if (!left && !right) continue;
      induced[cls[s]].set(cls[t]);
      if (!p.leq[cls[s]][cls[t]]) {
        report.holds = false;
        if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.emplace_back(perms[s], perms[t]);
      }
    }

  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t a = 0; a < k; ++a)
      if (induced[a][m]) induced[a] |= induced[m];
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (p.less(a, b) && !induced[a][b]) report.proper_pairs.emplace_back(a, b);
  return report;
}

std::string to_dot(const Poset& p, const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t a = 0; a < p.size(); ++a)
    os << "  c" << a << " [label=\"" << p.classes[a].label << " (" << to_string(p.classes[a].representative)
       << ")\"];\n";
  for (auto [a, b] : h.edges) os << "  c" << a << " -> c" << b << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json poset_to_json(const Poset& p, const HasseDiagram& h) {
  nlohmann::json classes = nlohmann::json::array();
  for (const GeoClass& c : p.classes.classes())
    classes.push_back({{"label", c.label}, {"representative", to_string(c.representative)}, {"inversions", c.inversions}});
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < p.size(); ++b) row.push_back(p.leq[a][b] ? 1 : 0);
    matrix.push_back(std::move(row));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : h.edges) edges.push_back({h.nodes[a], h.nodes[b]});
  return {{"schema_version", 1}, {"n", p.n}, {"classes", classes}, {"leq", matrix}, {"hasse", edges}};
}

}  // namespace geoposet
