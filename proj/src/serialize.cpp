#include "geoposet/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace geoposet {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw InputError("unknown format '" + text + "' (expected json, csv or table)");
}

nlohmann::json class_table_to_json(const ClassTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const GeoClass& c : t.classes()) {
    nlohmann::json members = nlohmann::json::array();
    for (const Permutation& p : c.members) members.push_back(to_string(p));
    classes.push_back({{"label", c.label},
                       {"inversions", c.inversions},
                       {"size", c.members.size()},
                       {"representative", to_string(c.representative)},
                       {"members", std::move(members)},
                       {"key", c.key.hex()}});
  }
  return {{"schema_version", kSchemaVersion}, {"n", t.n()}, {"count", t.count()}, {"classes", std::move(classes)}};
}

ClassTable class_table_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw InputError("unsupported schema_version");
    const int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxEnumerationN) throw InputError("class table n out of range");
    std::vector<GeoClass> classes;
    std::size_t total = 0;
    std::vector<char> seen(factorial(n), 0);
    for (const auto& jc : j.at("classes")) {
      GeoClass c;
      c.key = CanonicalKey::from_hex(jc.at("key").get<std::string>());
      for (const auto& m : jc.at("members")) {
        Permutation p = parse_permutation(m.get<std::string>());
        if (p.size() != n) throw InputError("member size differs from n");
        char& s = seen[lex_rank(p.word())];
        if (s) throw InputError("permutation listed twice: " + to_string(p));
        s = 1;
        c.members.push_back(std::move(p));
      }
      if (c.members.empty()) throw InputError("empty class");
      total += c.members.size();
      classes.push_back(std::move(c));
    }
    if (total != seen.size()) throw InputError("class table does not cover S_n");
    ClassTable t(n, label_classes(std::move(classes)));
    for (std::size_t i = 0; i < t.count(); ++i)
      if (t[i].label != j.at("classes").at(i).at("label").get<std::string>())
        throw InputError("class labels out of order");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed class table: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<Permutation>& ps, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += sep;
    out += to_string(ps[k]);
  }
  return out;
}

}  // namespace

std::string class_table_csv(const ClassTable& t) {
  std::ostringstream os;
  os << "label,inversions,size,representative,members\n";
  for (const GeoClass& c : t.classes())
    os << c.label << ',' << c.inversions << ',' << c.members.size() << ',' << to_string(c.representative) << ','
       << join(c.members, ";") << '\n';
  return os.str();
}

std::string class_table_text(const ClassTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(9) << "label" << std::setw(11) << "inversions" << std::setw(6) << "size"
     << "members\n";
  for (const GeoClass& c : t.classes())
    os << std::left << std::setw(9) << c.label << std::setw(11) << c.inversions << std::setw(6) << c.members.size()
       << join(c.members, ", ") << '\n';
  os << t.count() << " classes\n";
  return os.str();
}

std::string render(const ClassTable& t, Format f) {
  switch (f) {
    case Format::Json: return class_table_to_json(t).dump(2) + "\n";
    case Format::Csv: return class_table_csv(t);
    case Format::Table: return class_table_text(t);
  }
  return {};
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return os.str();
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("GEOPOSET_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "geoposet";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "geoposet";
  return std::filesystem::temp_directory_path() / "geoposet";
}

std::filesystem::path ClassCache::entry_path(int n) const {
  return dir_ / ("classes-n" + std::to_string(n) + ".json");
}

std::optional<ClassTable> ClassCache::load(int n, std::string* why) const {
  auto fail = [&](const std::string& reason) -> std::optional<ClassTable> {
    if (why) *why = reason;
    return std::nullopt;
  };
  std::ifstream in(entry_path(n));
  if (!in) return fail("no cache entry");
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("schema_version").get<int>() != kSchemaVersion) return fail("schema version changed");
    if (j.at("n").get<int>() != n) return fail("entry is for another n");
    const nlohmann::json& table = j.at("table");
    if (sha256_hex(table.dump()) != j.at("digest").get<std::string>()) return fail("digest mismatch");
    ClassTable t = class_table_from_json(table);
    if (t.n() != n) return fail("entry is for another n");
    return t;
  } catch (const std::exception& e) {
    return fail(std::string("unreadable entry: ") + e.what());
  }
}

std::string ClassCache::save(const ClassTable& t) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return "cannot create " + dir_.string() + ": " + ec.message();
  const nlohmann::json table = class_table_to_json(t);
  const nlohmann::json entry = {
      {"schema_version", kSchemaVersion}, {"n", t.n()}, {"digest", sha256_hex(table.dump())}, {"table", table}};
  const std::filesystem::path target = entry_path(t.n());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return "cannot write " + tmp.string();
    out << entry.dump() << '\n';
    if (!out) return "write failed for " + tmp.string();
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) return "cannot rename into " + target.string() + ": " + ec.message();
  return {};
}

}  // namespace geoposet
