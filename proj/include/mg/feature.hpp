#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mg/errors.hpp"

namespace mg {

// Syntactic feature kinds follow the surface syntax of the lexicon format:
// selector "=name", licensor "+NAME", licensee "-name", basic category bare
// "name".  Phonetic material is carried as trailing Phonetic features so a
// leaf label stays a single ordered string.
enum class FeatureKind { Basic, Selector, Licensor, Licensee, Phonetic };

struct Feature {
  FeatureKind kind = FeatureKind::Basic;
  std::string name;  // licensor/licensee names are stored case-folded

  friend auto operator<=>(const Feature&, const Feature&) = default;

  bool is_syntactic() const { return kind != FeatureKind::Phonetic; }
};

// Parses one feature token ("=d", "+CASE", "-case", "c").  Phonetic words are
// never written as bare tokens; they come from the `::` side of an entry.
Feature parse_feature(const std::string& token);

Feature make_phonetic(const std::string& word);

// Canonical token spelling; phonetic features render as ":: word" so they can
// never collide with a syntactic token.
std::string to_string(const Feature& f);

// A term of the string algebra: ordered features, possibly empty.
class FeatureString {
 public:
  FeatureString() = default;
  explicit FeatureString(std::vector<Feature> items) : items_(std::move(items)) {}

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const Feature& at(std::size_t pos1) const { return items_.at(pos1 - 1); }  // 1-indexed
  const std::vector<Feature>& items() const { return items_; }

  std::size_t syntactic_size() const;

  friend auto operator<=>(const FeatureString&, const FeatureString&) = default;

 private:
  std::vector<Feature> items_;
};

// car / cdr of Definition 1.
Feature first(const FeatureString& s);
FeatureString shift(const FeatureString& s);

// "f1 f2 :: word" rendering used inside leaf labels; empty string renders "".
std::string to_string(const FeatureString& s);

}  // namespace mg
