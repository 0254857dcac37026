#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace mg;

namespace {

// Regression values computed with an independent implementation of the
// locked embedding conventions (superposition stack, trailing mother-role
// padding, slot-first Kronecker order).
const std::vector<double> kArithSeries = {
    -6.5088148119, -5.4782916819, -5.0974547730, -5.5641812431, -4.8746100295,
    -3.8297084310, -4.5834460201, -4.1633319989, 0.0};
const std::vector<double> kFractalSeries = {
    -2.3214955858, -2.6133416210, -2.5242631084, -2.2300835185, -2.1023368196,
    -1.9908174511, -1.9914942588, -1.6624947786, 0.0};

DerivationTrace golden_trace() { return derive(mgtest::adams()); }

}  // namespace

TEST_CASE("harmony series lemma: non-positive, final value zero") {
  DerivationTrace trace = golden_trace();
  Lexicon lex = mgtest::adams();
  for (const Scheme& s :
       {make_arithmetic_scheme(), make_fractal_scheme(), make_faithful_scheme(lex)}) {
    HarmonySeries h = harmony_series(trace, s);
    REQUIRE(h.values.size() == 9);
    for (double x : h.values) CHECK(x <= 0.0);
    CHECK(h.values.back() == 0.0);
  }
}

TEST_CASE("harmony series regression against the independent oracle") {
  DerivationTrace trace = golden_trace();
  HarmonySeries a = harmony_series(trace, make_arithmetic_scheme());
  HarmonySeries f = harmony_series(trace, make_fractal_scheme());
  for (std::size_t k = 0; k < 9; ++k) {
    CHECK(a.values[k] == doctest::Approx(kArithSeries[k]).epsilon(1e-9));
    CHECK(f.values[k] == doctest::Approx(kFractalSeries[k]).epsilon(1e-9));
  }
}

TEST_CASE("harmony requires a successful trace") {
  Lexicon stuck_lex = parse_lexicon(
      "=t c ::\n"
      "d -case :: Douglas\n"
      "=d v -i :: love\n"
      "=v +I +CASE t :: -ed\n"
      "d -case :: deadlines\n");
  DerivationTrace trace = derive(stuck_lex);
  REQUIRE(trace.status == DerivationTrace::Status::Stuck);
  CHECK_THROWS_AS(harmony_series(trace, make_fractal_scheme()), StuckTraceError);
}

TEST_CASE("tree_harmony reads the head weight") {
  Lexicon lex = mgtest::adams();
  WeightedLexicon W(lex);
  for (const LexEntry& e : lex.entries()) CHECK(tree_harmony(e.as_tree(), W) == 0.0);

  // hmg1-style weights: =t carries 4.76, love's =d carries 0.54
  W.set_weight(0, 1, 4.76);
  W.set_weight(2, 1, 0.54);
  CHECK(tree_harmony(lex.entries()[0].as_tree(), W) == 4.76);
  CHECK(tree_harmony(lex.entries()[2].as_tree(), W) == 0.54);

  // hmg2-style: love's =d carries -0.34
  WeightedLexicon W2(lex);
  W2.set_weight(2, 1, -0.34);
  CHECK(tree_harmony(lex.entries()[2].as_tree(), W2) == -0.34);

  CHECK_THROWS_AS(tree_harmony(Tree::empty_leaf(), W), MissingWeightError);
}

TEST_CASE("hmerge and hmove pass harmony through zero weights") {
  Lexicon lex = mgtest::adams();
  WeightedLexicon W(lex);
  auto [h, t] = hmerge(0.25, lex.entries()[2].as_tree(), lex.entries()[5].as_tree(), W);
  CHECK(h == 0.25);
  CHECK(render(t) == mgtest::golden_steps()[0]);

  TreePtr step2 = merge(lex.entries()[3].as_tree(), t);
  auto [h2, t3] = hmove(0.25, step2, W);
  CHECK(h2 == 0.25);
  CHECK(render(t3) == mgtest::golden_steps()[2]);
}

TEST_CASE("extract_hmg assigns step deltas to trigger instances") {
  DerivationTrace trace = golden_trace();
  Lexicon lex = mgtest::adams();
  HarmonySeries series = harmony_series(trace, make_arithmetic_scheme());
  WeightedLexicon W = extract_hmg(trace, series, lex);

  // triggers in order: love.=d, eps.=v, eps.+CASE, eps.=d, ed.=v, ed.+I, ed.+CASE, c.=t
  CHECK(W.weight(2, 1) == series.values[1] - series.values[0]);
  CHECK(W.weight(3, 1) == series.values[2] - series.values[1]);
  CHECK(W.weight(3, 2) == series.values[3] - series.values[2]);
  CHECK(W.weight(3, 3) == series.values[4] - series.values[3]);
  CHECK(W.weight(4, 1) == series.values[5] - series.values[4]);
  CHECK(W.weight(4, 2) == series.values[6] - series.values[5]);
  CHECK(W.weight(4, 3) == series.values[7] - series.values[6]);
  CHECK(W.weight(0, 1) == series.values[8] - series.values[7]);

  // basic categories and licensees stay at zero
  CHECK(W.weight(1, 1) == 0.0);  // Douglas d
  CHECK(W.weight(1, 2) == 0.0);  // Douglas -case
  CHECK(W.weight(2, 2) == 0.0);  // love v
  CHECK(W.weight(2, 3) == 0.0);  // love -i
  CHECK(W.weight(5, 1) == 0.0);
  CHECK(W.weight(5, 2) == 0.0);

  // constant series gives all-zero weights
  HarmonySeries flat;
  flat.values.assign(9, 0.0);
  WeightedLexicon Wz = extract_hmg(trace, flat, lex);
  for (std::size_t e = 0; e < lex.size(); ++e)
    for (std::size_t p = 1; p <= lex.entries()[e].features.syntactic_size(); ++p)
      CHECK(Wz.weight(e, p) == 0.0);

  HarmonySeries misaligned;
  misaligned.values.assign(4, 0.0);
  CHECK_THROWS_AS(extract_hmg(trace, misaligned, lex), AlignmentError);
}

TEST_CASE("extracted weights replay the series bit-exactly and telescope") {
  DerivationTrace trace = golden_trace();
  Lexicon lex = mgtest::adams();
  for (const Scheme& scheme : {make_arithmetic_scheme(), make_fractal_scheme()}) {
    HarmonySeries series = harmony_series(trace, scheme);
    WeightedLexicon W = extract_hmg(trace, series, lex);

    // replay via derivation_harmony: h0 = H(w_1), each step adds its trigger
    // weight (hmerge/hmove sum two head weights; the partner head weight is 0)
    WeightedLexicon W1(lex, series.values.front());
    for (std::size_t e = 0; e < lex.size(); ++e)
      for (std::size_t p = 1; p <= lex.entries()[e].features.syntactic_size(); ++p)
        W1.set_weight(e, p, W.weight(e, p));

    double h = W1.h0();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const DerivationStep& s = trace.steps[k];
      const StateDescription& w = trace.states[k];
      if (s.op == DerivationStep::Op::Merge)
        h = hmerge(h, w[s.i - 1], w[s.j - 1], W1).first;
      else
        h = hmove(h, w[s.i - 1], W1).first;
      CHECK(h == series.values[k + 1]);  // bit-exact
    }
    CHECK(h == 0.0);  // telescopes to H(w_T) = -(-H(w_1)) + H(w_1) exactly
    CHECK(derivation_harmony(trace, W1) == 0.0);
  }
}

TEST_CASE("harmony filter") {
  CHECK(harmonically_well_formed(0.0));
  CHECK(harmonically_well_formed(6.49));
  CHECK_FALSE(harmonically_well_formed(-0.01));
}

TEST_CASE("harmony csv and weighted lexicon exports") {
  DerivationTrace trace = golden_trace();
  Lexicon lex = mgtest::adams();
  HarmonySeries series = harmony_series(trace, make_fractal_scheme());
  CHECK(harmony_csv(series).rfind("step,harmony\n", 0) == 0);

  WeightedLexicon W = extract_hmg(trace, series, lex);
  std::string text = render_weighted_lexicon(W);
  CHECK(text.find("=t@") != std::string::npos);
  CHECK(text.find(":: Douglas") != std::string::npos);
  CHECK(text.find("d@0.00 -case@0.00 :: deadlines") != std::string::npos);
}

TEST_CASE("hmove uses the pre-move tree and its extracted projection") {
  Lexicon lex = mgtest::adams();
  DerivationTrace trace = golden_trace();
  // give the moved subtree's head a weight and check it is added
  WeightedLexicon W(lex);
  W.set_weight(5, 2, 1.5);  // deadlines -case
  W.set_weight(3, 2, 2.0);  // eps +CASE (licensor on the pre-move head)
  const StateDescription& w3 = trace.states[2];
  const DerivationStep& s3 = trace.steps[2];
  REQUIRE(s3.op == DerivationStep::Op::Move);
  auto [h, t] = hmove(0.0, w3[s3.i - 1], W);
  CHECK(h == 3.5);
}
