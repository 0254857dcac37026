#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mg/analytics.hpp"
#include "mg/generator.hpp"

namespace mgtest {

inline const char* kAdamsLexicon =
    "=t c ::\n"
    "d -case :: Douglas\n"
    "=d v -i :: love\n"
    "=v +CASE =d v ::\n"
    "=v +I +CASE t :: -ed\n"
    "d -case :: deadlines\n";

inline mg::Lexicon adams() { return mg::parse_lexicon(kAdamsLexicon); }

inline mg::TreePtr leaf(const std::string& tokens, const std::string& phon = "") {
  std::istringstream in(tokens);
  std::vector<mg::Feature> items;
  std::string tok;
  while (in >> tok) items.push_back(mg::parse_feature(tok));
  if (!phon.empty()) items.push_back(mg::make_phonetic(phon));
  return mg::Tree::leaf(mg::FeatureString(std::move(items)));
}

// Canonical renderings of the eight derivation steps (lambda = empty leaf).
inline const std::vector<std::string>& golden_steps() {
  static const std::vector<std::string> steps = {
      "(< [v -i :: love] [-case :: deadlines])",
      "(< [+CASE =d v] (< [-i :: love] [-case :: deadlines]))",
      "(> [:: deadlines] (< [=d v] (< [-i :: love] [])))",
      "(> [-case :: Douglas] (> [:: deadlines] (< [v] (< [-i :: love] []))))",
      "(< [+I +CASE t :: -ed] (> [-case :: Douglas] (> [:: deadlines] (< [] (< [-i :: love] "
      "[])))))",
      "(> (< [:: love] []) (< [+CASE t :: -ed] (> [-case :: Douglas] (> [:: deadlines] (< [] "
      "[])))))",
      "(> [:: Douglas] (> (< [:: love] []) (< [t :: -ed] (> [] (> [:: deadlines] (< [] "
      "[]))))))",
      "(< [c] (> [:: Douglas] (> (< [:: love] []) (< [:: -ed] (> [] (> [:: deadlines] (< [] "
      "[])))))))",
  };
  return steps;
}

}  // namespace mgtest
