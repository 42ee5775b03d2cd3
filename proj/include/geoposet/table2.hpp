#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoposet/geoequiv.hpp"

namespace geoposet {

struct PublishedClass {
  std::string label;
  int inversions = 0;  // from the label prefix
  std::vector<Permutation> members;
};

/// Lines of the form "k.m: p, q / r, s"; '#' starts a comment.
std::vector<PublishedClass> parse_published_table(std::string_view text);

/// The shipped transcription of the published S_5 class table.
std::string_view published_s5_text();

struct TableAnomaly {
  std::string label;
  Permutation entry;
  int entry_inversions = 0;
  std::string our_label;        // where the enumeration puts the entry
  std::string published_match;  // published row matched to that class
};

struct TableComparison {
  bool matches = false;
  std::vector<TableAnomaly> anomalies;                          // entries dropped before comparing
  std::vector<std::pair<std::string, std::string>> matching;    // published label -> our label
  std::vector<std::pair<std::string, Permutation>> supplied;    // members the table is missing
  std::vector<std::string> problems;                            // unexplained discrepancies
};

/// Compares member sets, ignoring labels.  Entries whose inversion count
/// disagrees with their row are dropped; a row may then lack exactly as many
/// members as were dropped from it.  Everything else must match exactly.
TableComparison compare_with_published(const ClassTable& ours, const std::vector<PublishedClass>& published);

}  // namespace geoposet
