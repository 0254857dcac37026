#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mg/feature.hpp"
#include "mg/tree.hpp"

namespace mg {

struct LexEntry {
  FeatureString features;  // syntactic prefix followed by the phonetic suffix
  std::string phonetic;    // empty when the entry is phonetically null

  TreePtr as_tree() const { return Tree::leaf(features); }
};

// Select / license functions; by convention =x selects x and +X licenses -x.
Feature sel(const Feature& s);
Feature lic(const Feature& l);

// A validated minimalist lexicon: entries of shape S*(L|eps)S*B M* with the
// distinguished complementizer c present as a basic category.
class Lexicon {
 public:
  static Lexicon from_entries(std::vector<LexEntry> entries);

  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const std::set<std::string>& basic() const { return basic_; }
  const std::set<std::string>& selectors() const { return selectors_; }
  const std::set<std::string>& licensors() const { return licensors_; }
  const std::set<std::string>& licensees() const { return licensees_; }
  const std::set<std::string>& phonetic() const { return phonetic_; }

  Feature complementizer() const { return {FeatureKind::Basic, "c"}; }

  // Longest entry counting both syntactic and phonetic items.
  std::size_t max_entry_length() const;

  // Entry whose item sequence has `label` as a suffix (leaf provenance).
  std::optional<std::size_t> entry_of_suffix(const FeatureString& label) const;

 private:
  std::vector<LexEntry> entries_;
  std::set<std::string> basic_, selectors_, licensors_, licensees_, phonetic_;
};

// Line-oriented lexicon format: `feature ... feature :: phonetic`, `#`
// comments, blank lines ignored.  Empty phonetic = nothing after `::`.
Lexicon parse_lexicon(const std::string& text);
Lexicon load_lexicon(const std::string& path);

std::string to_string(const LexEntry& entry);

}  // namespace mg
