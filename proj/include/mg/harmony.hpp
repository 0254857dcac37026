#pragma once

#include <vector>

#include "mg/schemes.hpp"

namespace mg {

struct HarmonySeries {
  std::vector<double> values;  // H(w_1) .. H(w_T), all <= 0, last exactly 0
  SchemeKind scheme = SchemeKind::Faithful;
};

// Negative Euclidean distance of every state from the final state.
// Compressed schemes measure in the shared dense embedding space; the
// faithful scheme uses the exact sparse Fock norm.
HarmonySeries harmony_series(const DerivationTrace& trace, const Scheme& scheme);

// Real weights attached to the lexicon's feature positions, plus the
// cumulative-harmony start value.
class WeightedLexicon {
 public:
  WeightedLexicon(Lexicon lex, double h0 = 0.0);

  const Lexicon& lexicon() const { return lex_; }
  double h0() const { return h0_; }

  double weight(std::size_t entry, std::size_t pos1) const;  // syntactic position, 1-based
  void set_weight(std::size_t entry, std::size_t pos1, double w);

  // Weight slot of a leaf label: the entry with this suffix and the position
  // of its first remaining syntactic feature.
  std::pair<std::size_t, std::size_t> locate(const FeatureString& label) const;

 private:
  Lexicon lex_;
  double h0_;
  std::vector<std::vector<double>> weights_;  // per entry, per syntactic position
};

// Weight of the first feature of t's head label.
double tree_harmony(const TreePtr& t, const WeightedLexicon& W);

// Structure building with cumulative harmony.
std::pair<double, TreePtr> hmerge(double h, const TreePtr& t1, const TreePtr& t2,
                                  const WeightedLexicon& W);
std::pair<double, TreePtr> hmove(double h, const TreePtr& t, const WeightedLexicon& W);

// Cumulative harmony of a whole derivation, starting from W.h0().
double derivation_harmony(const DerivationTrace& trace, const WeightedLexicon& W);

bool harmonically_well_formed(double h);  // the harmony filter h >= 0

// Assigns each step's harmony difference to the selector / licensor instance
// that triggered it; basic categories and licensees stay at weight 0.
WeightedLexicon extract_hmg(const DerivationTrace& trace, const HarmonySeries& series,
                            const Lexicon& lex);

// `step,harmony` lines.
std::string harmony_csv(const HarmonySeries& series);

// Lexicon format with feature@weight annotations (2-decimal export).
std::string render_weighted_lexicon(const WeightedLexicon& W);

}  // namespace mg
