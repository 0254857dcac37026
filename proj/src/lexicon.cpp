#include "mg/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace mg {

Feature sel(const Feature& s) {
  if (s.kind != FeatureKind::Selector) throw NotASelectorError(to_string(s));
  return {FeatureKind::Basic, s.name};
}

Feature lic(const Feature& l) {
  if (l.kind != FeatureKind::Licensor) throw NotALicensorError(to_string(l));
  return {FeatureKind::Licensee, l.name};  // names are stored case-folded
}

namespace {

// Entry shape (S|L)* B M* with the phonetic suffix trailing.  This is the
// stated S*(L|eps)S*B M* relaxed to admit stacked licensors, which the
// inflection entry =v +I +CASE t needs.
void check_shape(const LexEntry& entry) {
  enum State { PreBase, AfterBase, Done };
  State state = PreBase;
  bool saw_base = false;
  for (const Feature& f : entry.features.items()) {
    if (f.kind == FeatureKind::Phonetic) {
      state = Done;
      continue;
    }
    if (state == Done)
      throw ShapeError("entry `" + to_string(entry) + "`: syntactic feature after phonetic material");
    switch (f.kind) {
      case FeatureKind::Selector:
      case FeatureKind::Licensor:
        if (state == AfterBase)
          throw ShapeError("entry `" + to_string(entry) + "`: " + to_string(f) +
                           " after the base category");
        break;
      case FeatureKind::Basic:
        if (state == AfterBase)
          throw ShapeError("entry `" + to_string(entry) + "`: two base categories");
        state = AfterBase;
        saw_base = true;
        break;
      case FeatureKind::Licensee:
        if (state != AfterBase)
          throw ShapeError("entry `" + to_string(entry) + "`: licensee before the base category");
        break;
      case FeatureKind::Phonetic:
        break;
    }
  }
  if (!saw_base)
    throw ShapeError("entry `" + to_string(entry) + "`: no base category");
}

}  // namespace

Lexicon Lexicon::from_entries(std::vector<LexEntry> entries) {
  Lexicon lex;
  lex.entries_ = std::move(entries);
  for (const LexEntry& e : lex.entries_) {
    check_shape(e);
    for (const Feature& f : e.features.items()) {
      switch (f.kind) {
        case FeatureKind::Basic: lex.basic_.insert(f.name); break;
        case FeatureKind::Selector: lex.selectors_.insert(f.name); break;
        case FeatureKind::Licensor: lex.licensors_.insert(f.name); break;
        case FeatureKind::Licensee: lex.licensees_.insert(f.name); break;
        case FeatureKind::Phonetic: lex.phonetic_.insert(f.name); break;
      }
    }
  }
  if (!lex.basic_.count("c")) throw MissingComplementizerError();
  for (const std::string& s : lex.selectors_)
    if (!lex.basic_.count(s))
      throw ShapeError("selector =" + s + " has no matching basic category");
  for (const std::string& l : lex.licensors_)
    if (!lex.licensees_.count(l))
      throw ShapeError("licensor +" + l + " has no matching licensee");
  return lex;
}

std::size_t Lexicon::max_entry_length() const {
  std::size_t n = 0;
  for (const LexEntry& e : entries_) n = std::max(n, e.features.size());
  return n;
}

std::optional<std::size_t> Lexicon::entry_of_suffix(const FeatureString& label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& items = entries_[i].features.items();
    const auto& lab = label.items();
    if (lab.size() > items.size()) continue;
    if (std::equal(lab.begin(), lab.end(), items.end() - lab.size())) return i;
  }
  return std::nullopt;
}

Lexicon parse_lexicon(const std::string& text) {
  std::vector<LexEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream toks(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (toks >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    auto sep = std::find(tokens.begin(), tokens.end(), "::");
    if (sep == tokens.end()) throw SyntaxError(lineno, "entry is missing the `::` separator");
    if (sep == tokens.begin()) throw SyntaxError(lineno, "entry has no syntactic features");
    if (std::distance(sep, tokens.end()) > 2)
      throw SyntaxError(lineno, "more than one phonetic word");

    LexEntry entry;
    std::vector<Feature> items;
    for (auto it = tokens.begin(); it != sep; ++it) {
      try {
        items.push_back(parse_feature(*it));
      } catch (const Error& e) {
        throw SyntaxError(lineno, e.what());
      }
    }
    if (sep + 1 != tokens.end()) {
      entry.phonetic = *(sep + 1);
      items.push_back(make_phonetic(entry.phonetic));
    }
    entry.features = FeatureString(std::move(items));
    entries.push_back(std::move(entry));
  }
  return Lexicon::from_entries(std::move(entries));
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read lexicon file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

std::string to_string(const LexEntry& entry) {
  std::string out;
  for (const Feature& f : entry.features.items()) {
    if (f.kind == FeatureKind::Phonetic) continue;
    if (!out.empty()) out += " ";
    out += to_string(f);
  }
  out += " ::";
  if (!entry.phonetic.empty()) out += " " + entry.phonetic;
  return out;
}

}  // namespace mg
