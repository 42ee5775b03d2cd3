#include "geoposet/table2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "table2_data.hpp"

namespace geoposet {

std::vector<PublishedClass> parse_published_table(std::string_view text) {
  std::vector<PublishedClass> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": missing ':'");
    PublishedClass c;
    c.label = line.substr(0, colon);
    c.label.erase(0, c.label.find_first_not_of(" \t"));
    c.label.erase(c.label.find_last_not_of(" \t") + 1);
    try {
      c.inversions = std::stoi(c.label.substr(0, c.label.find('.')));
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) + ": bad label '" + c.label + "'");
    }
    std::string body = line.substr(colon + 1);
    std::replace(body.begin(), body.end(), '/', ',');
    std::istringstream items(body);
    std::string item;
    while (std::getline(items, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t\r") + 1);
      if (!item.empty()) c.members.push_back(parse_permutation(item));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string_view published_s5_text() { return kPublishedS5Table; }

TableComparison compare_with_published(const ClassTable& ours, const std::vector<PublishedClass>& published) {
  TableComparison cmp;
  std::vector<std::vector<Permutation>> kept(published.size());
  std::vector<std::size_t> dropped(published.size(), 0);
  for (std::size_t r = 0; r < published.size(); ++r)
    for (const Permutation& p : published[r].members) {
      if (p.size() != ours.n()) {
        cmp.problems.push_back(published[r].label + ": " + to_string(p) + " has the wrong length");
        continue;
      }
      if (inversion_count(p) != published[r].inversions) {
        cmp.anomalies.push_back({published[r].label, p, inversion_count(p), ours[ours.index_of(p)].label, ""});
        ++dropped[r];
      } else {
        kept[r].push_back(p);
      }
    }

  std::set<Permutation> listed;
  for (std::size_t r = 0; r < published.size(); ++r)
    for (const Permutation& p : kept[r])
      if (!listed.insert(p).second) cmp.problems.push_back(to_string(p) + " is listed more than once");

  std::map<std::size_t, std::string> claimed;
  std::vector<std::size_t> row_class(published.size(), ours.count());
  for (std::size_t r = 0; r < published.size(); ++r) {
    if (kept[r].empty()) {
      cmp.problems.push_back(published[r].label + ": no usable members");
      continue;
    }
    const std::size_t c = ours.index_of(kept[r].front());
    bool split = false;
    for (const Permutation& p : kept[r])
      if (ours.index_of(p) != c) split = true;
    if (split) {
      cmp.problems.push_back(published[r].label + " spans several enumerated classes");
      continue;
    }
    if (auto [it, fresh] = claimed.emplace(c, published[r].label); !fresh) {
      cmp.problems.push_back(published[r].label + " and " + it->second + " fall in the same class " + ours[c].label);
      continue;
    }
    row_class[r] = c;
    cmp.matching.emplace_back(published[r].label, ours[c].label);

    std::vector<Permutation> listed_here = kept[r];
    std::sort(listed_here.begin(), listed_here.end());
    std::vector<Permutation> missing;
    std::set_difference(ours[c].members.begin(), ours[c].members.end(), listed_here.begin(), listed_here.end(),
                        std::back_inserter(missing));
    if (missing.size() != dropped[r]) {
      cmp.problems.push_back(published[r].label + " differs from " + ours[c].label + " by " +
                             std::to_string(missing.size()) + " member(s)");
      continue;
    }
    for (const Permutation& p : missing) cmp.supplied.emplace_back(published[r].label, p);
  }
  if (published.size() != ours.count())
    cmp.problems.push_back("published table has " + std::to_string(published.size()) + " classes, enumeration has " +
                           std::to_string(ours.count()));

  for (TableAnomaly& a : cmp.anomalies) {
    const std::size_t c = ours.index_of(a.entry);
    for (std::size_t r = 0; r < published.size(); ++r)
      if (row_class[r] == c) a.published_match = published[r].label;
  }
  cmp.matches = cmp.problems.empty();
  return cmp;
}

}  // namespace geoposet
