#include "geoposet/commands.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "geoposet/moddecomp.hpp"
#include "geoposet/poset.hpp"
#include "geoposet/table2.hpp"

namespace geoposet {

namespace {

constexpr std::array<std::size_t, 10> kKnownClassCounts{0, 1, 2, 4, 12, 39, 182, 1033, 7605, 66302};

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : members(s)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

bool write_file(const std::string& path, const std::string& body, std::ostream& err) {
  std::ofstream f(path, std::ios::trunc);
  if (f) f << body;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

ClassTable obtain_class_table(int n, const RunOptions& opt, std::ostream& err) {
  if (!opt.use_cache) return enumerate_classes(n, opt.threads);
  const ClassCache cache(opt.cache_dir.value_or(default_cache_dir()));
  std::string why;
  if (auto hit = cache.load(n, &why)) return *std::move(hit);
  if (why != "no cache entry") err << "note: recomputing classes for n=" << n << " (" << why << ")\n";
  ClassTable t = enumerate_classes(n, opt.threads);
  if (std::string problem = cache.save(t); !problem.empty()) err << "warning: cache not written: " << problem << "\n";
  return t;
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > kMaxEnumerationN) {
    err << "error: n must be between 1 and " << kMaxEnumerationN << "\n";
    return kExitUsage;
  }
  if (opt.n > kShortRunMaxN && !opt.allow_long) {
    err << "error: n=" << opt.n << " is a long run; pass --allow-long to proceed\n";
    return kExitUsage;
  }
  out << render(obtain_class_table(opt.n, opt.run, err), opt.format);
  return kExitOk;
}

int cmd_classify(const std::string& perm_text, Format format, std::ostream& out, std::ostream& err) {
  Permutation pi;
  try {
    pi = parse_permutation(perm_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const int n = pi.size();
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"permutation", to_string(pi)},
                      {"n", n},
                      {"inversions", inversion_count(pi)}};
  if (n <= kMaxEnumerationN) {
    nlohmann::json members = nlohmann::json::array();
    for (const Permutation& p : class_members(pi)) members.push_back(to_string(p));
    j["class_size"] = members.size();
    j["members"] = std::move(members);
  } else {
    j["class_size"] = nullptr;
    j["members"] = nullptr;
  }
  const bool cograph = is_cograph(permutation_graph(pi));
  j["cograph"] = cograph;
  j["formula_size"] = nullptr;
  if (cograph && n <= CanonicalKey::kMaxN) {
    const ClassSizeReport r = cograph_class_size(pi);
    j["formula_size"] = r.class_size;
    j["self_reverse"] = r.self_related;
  }

  if (format == Format::Json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "permutation: " << j["permutation"].get<std::string>() << "\n";
  out << "inversions:  " << j["inversions"].get<int>() << "\n";
  if (j["members"].is_null()) {
    out << "class size:  not enumerated for n > " << kMaxEnumerationN << "\n";
  } else {
    out << "class size:  " << j["class_size"].get<std::size_t>() << "\n";
    out << "members:     ";
    for (std::size_t k = 0; k < j["members"].size(); ++k) out << (k ? ", " : "") << j["members"][k].get<std::string>();
    out << "\n";
  }
  out << "cograph:     " << (cograph ? "yes" : "no") << "\n";
  if (!j["formula_size"].is_null()) out << "formula size: " << j["formula_size"].get<std::uint64_t>() << "\n";
  return kExitOk;
}

int cmd_poset(const PosetOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 1 || opt.n > kMaxPosetN) {
    err << "error: n must be between 1 and " << kMaxPosetN << "\n";
    return kExitUsage;
  }
  const Poset p = build_poset(obtain_class_table(opt.n, opt.run, err), opt.run.threads);
  if (std::string bad = partial_order_violation(p); !bad.empty()) {
    err << "error: relation is not a partial order: " << bad << "\n";
    return kExitVerifyFailed;
  }
  const HasseDiagram h = hasse(p);
  const nlohmann::json j = poset_to_json(p, h);
  if (opt.dot_path && !write_file(*opt.dot_path, to_dot(p, h), err)) return kExitUsage;
  if (opt.json_path && !write_file(*opt.json_path, j.dump(2) + "\n", err)) return kExitUsage;
  if (opt.format == Format::Json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const GradednessReport g = is_graded(p);
  out << "n: " << p.n << "\n";
  out << "classes: " << p.size() << "\n";
  out << "cover edges: " << h.edges.size() << "\n";
  out << "bounded: " << (is_bounded(p) ? "yes" : "no") << "\n";
  out << "graded by inversion count: " << (g.graded ? "yes" : "no");
  if (p.n >= 6) out << " (experimental: no published value)";
  out << "\n";
  for (const GradingViolation& v : g.violations)
    out << "  cover " << v.lower << " (" << to_string(v.lower_rep) << ") -> " << v.upper << " ("
        << to_string(v.upper_rep) << ") jumps " << v.gap << " inversions\n";
  return kExitOk;
}

// ------------------------------------------------------------ verification

namespace {

class Suite {
 public:
  Suite(std::string name, int n) { r_.name = std::move(name), r_.n = n; }
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failure_count;
    if (r_.failures.size() < 5) r_.failures.push_back(what());
  }
  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

SuiteResult perm_core_suite(int n, std::mt19937_64& rng) {
  Suite s("perm_core", n);
  const auto perms = all_permutations(n);
  for (const Permutation& p : perms) {
    const std::string ps = to_string(p);
    s.check(inverse(inverse(p)) == p, [&] { return "inverse is not an involution at " + ps; });
    s.check(compose(p, inverse(p)).is_identity(), [&] { return "p . p^-1 != id at " + ps; });
    const InversionSet e = inversion_set(p);
    s.check(static_cast<int>(e.size()) == inversion_count(p), [&] { return "|E| mismatch at " + ps; });
    s.check(is_inversion_set(e.pairs()), [&] { return "E not recognised at " + ps; });
    s.check(perm_from_inversion_set(e) == p, [&] { return "reconstruction failed at " + ps; });
  }
  auto lemma = [&](const Permutation& rho, const Permutation& sigma) {
    s.check(check_symmetric_difference(rho, sigma),
            [&] { return "symmetric-difference identity fails for " + to_string(rho) + ", " + to_string(sigma); });
  };
  if (n <= 5) {
    for (const Permutation& rho : perms)
      for (const Permutation& sigma : perms) lemma(rho, sigma);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int k = 0; k < 20000; ++k) lemma(perms[pick(rng)], perms[pick(rng)]);
  }
  return s.done();
}

SuiteResult digraph_suite(int n, std::mt19937_64& rng) {
  Suite s("digraph", n);
  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 1);
  for (const Permutation& p : all_permutations(n)) {
    const std::string ps = to_string(p);
    const Digraph d = from_perm(p);
    s.check(is_isomorphic(reverse(d), from_perm(inverse(p))), [&] { return "-D(pi) !~ D(pi^-1) at " + ps; });
    s.check(underlying_graph(d) == permutation_graph(p), [&] { return "G(pi) mismatch at " + ps; });
    std::shuffle(relabel.begin(), relabel.end(), rng);
    s.check(canonical_key(d.relabeled(relabel)) == canonical_key(d),
            [&] { return "canonical key not invariant at " + ps; });
  }
  return s.done();
}

SuiteResult geoequiv_suite(int n, const ClassTable& table, std::mt19937_64& rng) {
  Suite s("geoequiv", n);
  s.check(table.count() == kKnownClassCounts[static_cast<std::size_t>(n)],
          [&] { return "class count " + std::to_string(table.count()); });
  for (const GeoClass& c : table.classes())
    for (const Permutation& p : c.members)
      for (const Permutation& q : four_family(p))
        s.check(table.index_of(q) == table.index_of(p),
                [&] { return to_string(q) + " left the class of " + to_string(p); });
  const auto perms = all_permutations(n);
  auto agree = [&](const Permutation& a, const Permutation& b) {
    s.check(equivalent_fast(a, b) == equivalent_bruteforce(a, b).has_value(),
            [&] { return "fast and brute-force disagree on " + to_string(a) + ", " + to_string(b); });
  };
  if (n <= 4) {
    for (const Permutation& a : perms)
      for (const Permutation& b : perms) agree(a, b);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int k = 0; k < 500; ++k) agree(perms[pick(rng)], perms[pick(rng)]);
    for (const GeoClass& c : table.classes()) agree(c.members.front(), c.members.back());
  }
  return s.done();
}

SuiteResult moddecomp_suite(int n, const ClassTable& table) {
  Suite s("moddecomp", n);
  std::set<CanonicalKey> graphs_seen;
  for (const Permutation& p : all_permutations(n)) {
    const std::string ps = to_string(p);
    const Graph g = permutation_graph(p);
    const Digraph sym = [&] {
      Digraph d(n);
      for (auto [u, v] : g.edges()) d.add_arc(u, v), d.add_arc(v, u);
      return d;
    }();
    if (graphs_seen.insert(canonical_key(sym)).second) {
      const std::size_t brute = enumerate_transitive_orientations(g).size();
      s.check(count_transitive_orientations(g) == brute, [&] { return "orientation count wrong for G(" + ps + ")"; });
      s.check(prime_unique_orientability_check(g), [&] { return "prime quotient not uniquely orientable, G(" + ps + ")"; });
    }
    if (is_cograph(g)) {
      const std::uint64_t expected = table[table.index_of(p)].members.size();
      s.check(cograph_class_size(p).class_size == expected, [&] { return "cograph class size wrong at " + ps; });
    }
  }
  return s.done();
}

SuiteResult geometry_suite(int n) {
  Suite s("geometry", n);
  for (const Permutation& p : all_permutations(n)) {
    const std::string ps = to_string(p);
    try {
      const Realization r = build_realization(p);
      s.check(crossings(r) == inversion_set(p).pairs(), [&] { return "crossings != E at " + ps; });
      s.check(all_crossings(r).size() == static_cast<std::size_t>(inversion_count(p)),
              [&] { return "crossing with i > j at " + ps; });
      s.check(recover_permutation(r).perm == p, [&] { return "recovery failed at " + ps; });
    } catch (const DegenerateConfiguration& e) {
      s.check(false, [&] { return "degenerate template at " + ps + ": " + e.what(); });
    }
  }
  return s.done();
}

SuiteResult poset_suite(int n, unsigned threads) {
  Suite s("poset", n);
  const BruhatExtensionReport br = bruhat_extension_check(n, threads);
  const Poset& p = br.poset;
  const std::string bad = partial_order_violation(p);
  s.check(bad.empty(), [&] { return bad; });
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b))
        s.check(p.classes[a].inversions < p.classes[b].inversions,
                [&] { return p.classes[a].label + " < " + p.classes[b].label + " without fewer inversions"; });
  s.check(br.holds, [&] {
    return "weak-order relation not extended: " + to_string(br.counterexamples.front().first) + " -> " +
           to_string(br.counterexamples.front().second);
  });
  for (const Permutation& sigma : all_permutations(n))
    for (Side side : {Side::Left, Side::Right})
      for (const Permutation& c : bruhat_covers(sigma, side))
        s.check(inversion_count(c) == inversion_count(sigma) + 1,
                [&] { return "cover " + to_string(c) + " of " + to_string(sigma) + " is not +1"; });
  if (n <= 5) {
    s.check(is_bounded(p), [] { return std::string("poset not bounded"); });
    s.check(is_graded(p).graded, [] { return std::string("poset not graded"); });
  }
  return s.done();
}

SuiteResult table2_suite(const ClassTable& table) {
  Suite s("table2", 5);
  const TableComparison cmp = compare_with_published(table, parse_published_table(published_s5_text()));
  s.check(cmp.matches, [&] { return cmp.problems.empty() ? std::string("mismatch") : cmp.problems.front(); });
  s.check(cmp.anomalies.size() == 1, [&] { return std::to_string(cmp.anomalies.size()) + " anomalies"; });
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_verification(int n_max, unsigned threads) {
  std::vector<SuiteResult> out;
  std::mt19937_64 rng(0x5eed2024);
  for (int n = 1; n <= n_max; ++n) {
    const ClassTable table = enumerate_classes(n, threads);
    out.push_back(perm_core_suite(n, rng));
    out.push_back(digraph_suite(n, rng));
    out.push_back(geoequiv_suite(n, table, rng));
    out.push_back(moddecomp_suite(n, table));
    out.push_back(geometry_suite(n));
    out.push_back(poset_suite(n, threads));
    if (n == 5) out.push_back(table2_suite(table));
  }
  return out;
}

int cmd_verify(int n_max, Format format, unsigned threads, std::ostream& out, std::ostream& err) {
  if (n_max < 1 || n_max > 6) {
    err << "error: verify supports 1 <= n_max <= 6\n";
    return kExitUsage;
  }
  const std::vector<SuiteResult> results = run_verification(n_max, threads);
  bool ok = true;
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& r : results) {
    ok = ok && r.failure_count == 0;
    suites.push_back({{"suite", r.name},
                      {"n", r.n},
                      {"checks", r.checks},
                      {"failures", r.failure_count},
                      {"examples", r.failures}});
  }
  if (format == Format::Json) {
    out << nlohmann::json{{"schema_version", kSchemaVersion}, {"n_max", n_max}, {"passed", ok}, {"suites", suites}}
               .dump(2)
        << "\n";
  } else {
    for (const SuiteResult& r : results) {
      out << (r.failure_count == 0 ? "PASS " : "FAIL ") << r.name << " n=" << r.n << " checks=" << r.checks
          << " failures=" << r.failure_count << "\n";
      for (const std::string& f : r.failures) out << "    " << f << "\n";
    }
    out << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_realize(const std::string& perm_text, const std::optional<std::string>& svg_path, std::ostream& out,
                std::ostream& err) {
  Permutation pi;
  try {
    pi = parse_permutation(perm_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Realization r = build_realization(pi);
  validate_general_position(r);
  if (svg_path && !write_file(*svg_path, realization_svg(r), err)) return kExitUsage;
  out << realization_to_json(r).dump(2) << "\n";
  return kExitOk;
}

int cmd_recover(const std::string& json_path, HalfPlane side, std::ostream& out, std::ostream& err) {
  std::ifstream in(json_path);
  if (!in) {
    err << "error: cannot read " << json_path << "\n";
    return kExitUsage;
  }
  try {
    nlohmann::json j;
    in >> j;
    const Realization r = realization_from_json(j);
    const Recovery rec = recover_permutation(r, side);
    nlohmann::json relabel = nlohmann::json::object();
    for (int v = 1; v <= r.n(); ++v) relabel[std::to_string(v)] = rec.relabel[static_cast<std::size_t>(v - 1)];
    out << nlohmann::json{{"schema_version", kSchemaVersion}, {"permutation", to_string(rec.perm)}, {"relabel", relabel}}
               .dump(2)
        << "\n";
    return kExitOk;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DegenerateConfiguration& e) {
    err << "error: degenerate configuration: " << e.what() << "\n";
  }
  return kExitUsage;
}

int cmd_decompose(const std::string& perm_text, Format format, std::ostream& out, std::ostream& err) {
  Permutation pi;
  try {
    pi = parse_permutation(perm_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Graph g = permutation_graph(pi);
  const MDTree tree = decompose(g);
  std::function<nlohmann::json(const MDNode&)> to_json = [&](const MDNode& node) {
    nlohmann::json kids = nlohmann::json::array();
    for (const MDNode& c : node.children) kids.push_back(to_json(c));
    return nlohmann::json{{"kind", to_string(node.kind)}, {"vertices", members(node.vertices)}, {"children", kids}};
  };
  if (format == Format::Json) {
    out << nlohmann::json{{"schema_version", kSchemaVersion},
                          {"permutation", to_string(pi)},
                          {"tree", to_json(tree.root)},
                          {"transitive_orientations", count_transitive_orientations(g)},
                          {"cograph", is_cograph(g)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  std::function<void(const MDNode&, int)> print = [&](const MDNode& node, int depth) {
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << to_string(node.kind) << ' '
        << set_text(node.vertices) << "\n";
    for (const MDNode& c : node.children) print(c, depth + 1);
  };
  print(tree.root, 0);
  out << "transitive orientations: " << count_transitive_orientations(g) << "\n";
  out << "cograph: " << (is_cograph(g) ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace geoposet
