#include "mg/feature.hpp"

#include <algorithm>
#include <cctype>

namespace mg {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

}  // namespace

Feature parse_feature(const std::string& token) {
  if (token.empty()) throw Error("empty feature token");
  if (token[0] == '=') {
    if (token.size() == 1) throw Error("selector token without a name");
    return {FeatureKind::Selector, token.substr(1)};
  }
  if (token[0] == '+') {
    if (token.size() == 1) throw Error("licensor token without a name");
    return {FeatureKind::Licensor, lower(token.substr(1))};
  }
  if (token[0] == '-') {
    if (token.size() == 1) throw Error("licensee token without a name");
    return {FeatureKind::Licensee, lower(token.substr(1))};
  }
  return {FeatureKind::Basic, token};
}

Feature make_phonetic(const std::string& word) { return {FeatureKind::Phonetic, word}; }

std::string to_string(const Feature& f) {
  switch (f.kind) {
    case FeatureKind::Basic: return f.name;
    case FeatureKind::Selector: return "=" + f.name;
    case FeatureKind::Licensor: return "+" + upper(f.name);
    case FeatureKind::Licensee: return "-" + f.name;
    case FeatureKind::Phonetic: return ":: " + f.name;
  }
  return f.name;
}

std::size_t FeatureString::syntactic_size() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(),
                    [](const Feature& f) { return f.is_syntactic(); }));
}

Feature first(const FeatureString& s) {
  if (s.empty()) throw EmptyStringError();
  return s.items().front();
}

FeatureString shift(const FeatureString& s) {
  if (s.empty()) throw EmptyStringError();
  return FeatureString({s.items().begin() + 1, s.items().end()});
}

std::string to_string(const FeatureString& s) {
  std::string out;
  bool phon_started = false;
  for (const Feature& f : s.items()) {
    if (f.kind == FeatureKind::Phonetic) {
      if (!phon_started) {
        out += out.empty() ? "::" : " ::";
        phon_started = true;
      }
      out += " " + f.name;
    } else {
      if (!out.empty()) out += " ";
      out += to_string(f);
    }
  }
  return out;
}

}  // namespace mg
