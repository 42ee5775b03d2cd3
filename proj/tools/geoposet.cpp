#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "geoposet/commands.hpp"

using namespace geoposet;

namespace {

void add_run_flags(CLI::App* cmd, RunOptions& run, bool& no_cache) {
  cmd->add_option("--threads", run.threads, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-cache", no_cache, "Neither read nor write the class-table cache");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geo-equivalence classes of K2,n realizations and their homomorphism poset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "geoposet 1.0.0");

  std::string format_text = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  };

  EnumerateOptions en;
  bool en_no_cache = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the geo-equivalence classes of S_n");
  enumerate->add_option("n", en.n, "Permutation length")->required();
  enumerate->add_flag("--allow-long", en.allow_long, "Permit n = 8, 9");
  add_format(enumerate);
  add_run_flags(enumerate, en.run, en_no_cache);

  std::string perm_text;
  auto* classify = app.add_subcommand("classify", "Show the class of a permutation");
  classify->add_option("permutation", perm_text, "e.g. 4231 or 10,2,3,1,4,5,6,7,8,9")->required();
  add_format(classify);

  PosetOptions po;
  bool po_no_cache = false;
  std::string dot_path;
  std::string json_path;
  auto* poset = app.add_subcommand("poset", "Build the homomorphism poset of the classes of S_n");
  poset->add_option("n", po.n, "Permutation length (<= 7)")->required();
  poset->add_option("--dot", dot_path, "Write the Hasse diagram as DOT");
  poset->add_option("--json", json_path, "Write the relation and Hasse diagram as JSON");
  add_format(poset);
  add_run_flags(poset, po.run, po_no_cache);

  int verify_n = 0;
  unsigned verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the cross-module property suites up to n_max");
  verify->add_option("n_max", verify_n, "Largest n (<= 6)")->required();
  verify->add_option("--threads", verify_threads, "Worker threads (0 = auto)");
  add_format(verify);

  std::string svg_path;
  auto* realize = app.add_subcommand("realize", "Exact rational realization of K2,n for a permutation");
  realize->add_option("permutation", perm_text)->required();
  realize->add_option("--svg", svg_path, "Also write an SVG drawing");

  std::string realization_path;
  std::string side_text = "left";
  auto* recover = app.add_subcommand("recover", "Read the permutation off a realization JSON file");
  recover->add_option("file", realization_path)->required();
  recover->add_option("--side", side_text, "Half-plane labelled first")->check(CLI::IsMember({"left", "right"}));

  auto* decomp = app.add_subcommand("decompose", "Modular decomposition of the permutation graph");
  decomp->add_option("permutation", perm_text)->required();
  add_format(decomp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(format_text);
    if (*enumerate) {
      en.format = format;
      en.run.use_cache = !en_no_cache;
      return cmd_enumerate(en, std::cout, std::cerr);
    }
    if (*classify) return cmd_classify(perm_text, format, std::cout, std::cerr);
    if (*poset) {
      po.format = format;
      po.run.use_cache = !po_no_cache;
      if (!dot_path.empty()) po.dot_path = dot_path;
      if (!json_path.empty()) po.json_path = json_path;
      return cmd_poset(po, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(verify_n, format, verify_threads, std::cout, std::cerr);
    if (*realize) return cmd_realize(perm_text, svg_path.empty() ? std::nullopt : std::optional(svg_path), std::cout, std::cerr);
    if (*recover) return cmd_recover(realization_path, side_text == "left" ? HalfPlane::Left : HalfPlane::Right, std::cout, std::cerr);
    if (*decomp) return cmd_decompose(perm_text, format, std::cout, std::cerr);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
