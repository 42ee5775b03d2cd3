#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoposet/geoequiv.hpp"
#include "geoposet/geometry.hpp"
#include "geoposet/serialize.hpp"

namespace geoposet {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Largest n enumerated without --allow-long.
inline constexpr int kShortRunMaxN = 7;

struct RunOptions {
  unsigned threads = 0;
  bool use_cache = true;
  std::optional<std::filesystem::path> cache_dir;  // default_cache_dir() when unset
};

/// Class table for S_n, from the cache when a valid entry exists.  Cache
/// problems are reported on `err` and never change the result.
ClassTable obtain_class_table(int n, const RunOptions& opt, std::ostream& err);

struct EnumerateOptions {
  int n = 0;
  Format format = Format::Table;
  bool allow_long = false;
  RunOptions run;
};
int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& perm_text, Format format, std::ostream& out, std::ostream& err);

struct PosetOptions {
  int n = 0;
  std::optional<std::string> dot_path;
  std::optional<std::string> json_path;
  Format format = Format::Table;  // Json prints the relation instead of the summary
  RunOptions run;
};
int cmd_poset(const PosetOptions& opt, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  int n = 0;
  long checks = 0;
  std::vector<std::string> failures;  // first few only
  long failure_count = 0;
};

/// Cross-module property suites for every n in 1..n_max.
std::vector<SuiteResult> run_verification(int n_max, unsigned threads);

int cmd_verify(int n_max, Format format, unsigned threads, std::ostream& out, std::ostream& err);

int cmd_realize(const std::string& perm_text, const std::optional<std::string>& svg_path, std::ostream& out,
                std::ostream& err);

int cmd_recover(const std::string& json_path, HalfPlane side, std::ostream& out, std::ostream& err);

int cmd_decompose(const std::string& perm_text, Format format, std::ostream& out, std::ostream& err);

}  // namespace geoposet
