#include "mg/harmony.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace mg {

HarmonySeries harmony_series(const DerivationTrace& trace, const Scheme& scheme) {
  if (trace.status != DerivationTrace::Status::Success) throw StuckTraceError();
  HarmonySeries out;
  out.scheme = scheme.kind();

  if (scheme.kind() == SchemeKind::Faithful) {
    std::vector<FockVector> vecs;
    for (const StateDescription& w : trace.states) vecs.push_back(represent_state(w, scheme));
    const FockVector& goal = vecs.back();
    for (const FockVector& v : vecs) out.values.push_back(-(v - goal).norm());
    out.values.back() = 0.0;
    return out;
  }

  const std::size_t target = embedding_factor_target(trace.states, scheme);
  std::vector<DenseVector> vecs;
  for (const StateDescription& w : trace.states)
    vecs.push_back(densify(represent_state(w, scheme), scheme, target));
  const DenseVector& goal = vecs.back();
  for (const DenseVector& v : vecs) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      double d = v[i] - goal[i];
      s += d * d;
    }
    out.values.push_back(-std::sqrt(s));
  }
  out.values.back() = 0.0;
  return out;
}

WeightedLexicon::WeightedLexicon(Lexicon lex, double h0) : lex_(std::move(lex)), h0_(h0) {
  for (const LexEntry& e : lex_.entries())
    weights_.emplace_back(e.features.syntactic_size(), 0.0);
}

double WeightedLexicon::weight(std::size_t entry, std::size_t pos1) const {
  if (entry >= weights_.size() || pos1 < 1 || pos1 > weights_[entry].size())
    throw MissingWeightError("no weight slot at entry " + std::to_string(entry) +
                             " position " + std::to_string(pos1));
  return weights_[entry][pos1 - 1];
}

void WeightedLexicon::set_weight(std::size_t entry, std::size_t pos1, double w) {
  if (entry >= weights_.size() || pos1 < 1 || pos1 > weights_[entry].size())
    throw MissingWeightError("no weight slot at entry " + std::to_string(entry) +
                             " position " + std::to_string(pos1));
  weights_[entry][pos1 - 1] = w;
}

std::pair<std::size_t, std::size_t> WeightedLexicon::locate(const FeatureString& label) const {
  std::optional<std::size_t> entry = lex_.entry_of_suffix(label);
  if (!entry) throw MissingWeightError("leaf label `" + to_string(label) +
                                       "` is not a suffix of any lexicon entry");
  const FeatureString& full = lex_.entries()[*entry].features;
  std::size_t item_index = full.size() - label.size();  // first remaining item
  if (item_index >= full.syntactic_size())
    throw MissingWeightError("head label `" + to_string(label) +
                             "` has no syntactic feature left");
  return {*entry, item_index + 1};
}

double tree_harmony(const TreePtr& t, const WeightedLexicon& W) {
  const FeatureString lab = std::get<FeatureString>(label(head(t), t));
  if (lab.empty()) throw MissingWeightError("head label is empty");
  auto [entry, pos] = W.locate(lab);
  return W.weight(entry, pos);
}

std::pair<double, TreePtr> hmerge(double h, const TreePtr& t1, const TreePtr& t2,
                                  const WeightedLexicon& W) {
  return {h + tree_harmony(t1, W) + tree_harmony(t2, W), merge(t1, t2)};
}

std::pair<double, TreePtr> hmove(double h, const TreePtr& t, const WeightedLexicon& W) {
  NodeAddress target = move_target(t);
  double dh = tree_harmony(t, W) + tree_harmony(extract_path(target, t), W);
  return {h + dh, mg::move(t)};
}

double derivation_harmony(const DerivationTrace& trace, const WeightedLexicon& W) {
  double h = W.h0();
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const DerivationStep& s = trace.steps[k];
    const StateDescription& w = trace.states[k];
    if (s.op == DerivationStep::Op::Merge)
      h = hmerge(h, w[s.i - 1], w[s.j - 1], W).first;
    else
      h = hmove(h, w[s.i - 1], W).first;
  }
  return h;
}

bool harmonically_well_formed(double h) { return h >= 0.0; }

WeightedLexicon extract_hmg(const DerivationTrace& trace, const HarmonySeries& series,
                            const Lexicon& lex) {
  if (series.values.size() != trace.states.size())
    throw AlignmentError("series length does not match the trace");
  WeightedLexicon W(lex);
  std::set<std::pair<std::size_t, std::size_t>> assigned;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const DerivationStep& s = trace.steps[k];
    const TreePtr& trigger_tree = trace.states[k][s.i - 1];
    const FeatureString lab = std::get<FeatureString>(label(head(trigger_tree), trigger_tree));
    auto slot = W.locate(lab);
    double dh = series.values[k + 1] - series.values[k];
    if (!assigned.insert(slot).second)
      throw AlignmentError("trigger slot assigned twice; lexicon has indistinguishable entries");
    W.set_weight(slot.first, slot.second, dh);
  }
  return W;
}

std::string harmony_csv(const HarmonySeries& series) {
  std::ostringstream out;
  out << "step,harmony\n";
  out << std::setprecision(17);
  for (std::size_t k = 0; k < series.values.size(); ++k)
    out << (k + 1) << "," << series.values[k] << "\n";
  return out.str();
}

std::string render_weighted_lexicon(const WeightedLexicon& W) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  const Lexicon& lex = W.lexicon();
  for (std::size_t e = 0; e < lex.entries().size(); ++e) {
    const LexEntry& entry = lex.entries()[e];
    std::size_t pos = 0;
    bool first_tok = true;
    for (const Feature& f : entry.features.items()) {
      if (f.kind == FeatureKind::Phonetic) continue;
      if (!first_tok) out << " ";
      first_tok = false;
      out << to_string(f) << "@" << W.weight(e, ++pos);
    }
    out << " ::";
    if (!entry.phonetic.empty()) out << " " << entry.phonetic;
    out << "\n";
  }
  return out.str();
}

}  // namespace mg
