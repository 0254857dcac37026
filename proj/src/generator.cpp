#include "mg/generator.hpp"

#include <algorithm>
#include <array>

namespace mg {

namespace {

const char* kLexiconText =
    "=t c ::\n"
    "d -case :: Douglas\n"
    "=d v -i :: love\n"
    "=v +CASE =d v ::\n"
    "=v +I +CASE t :: -ed\n"
    "d -case :: deadlines\n";

const std::array<const char*, 10> kTokens = {"d",     "=d",    "v",  "=v", "t",
                                             "=t",    "+CASE", "-case", "+I", "-i"};

}  // namespace

InstanceGenerator::InstanceGenerator(std::uint32_t seed)
    : rng_(seed), lex_(parse_lexicon(kLexiconText)) {
  harvest();
}

FeatureString InstanceGenerator::random_string(std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, kTokens.size() - 1);
  std::vector<Feature> items;
  const std::size_t n = len(rng_);
  for (std::size_t i = 0; i < n; ++i) items.push_back(parse_feature(kTokens[pick(rng_)]));
  return FeatureString(std::move(items));
}

TreePtr InstanceGenerator::random_tree(std::size_t max_depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (max_depth == 0 || coin(rng_) == 0) {
    std::uniform_int_distribution<int> empty(0, 4);
    if (empty(rng_) == 0) return Tree::empty_leaf();
    return Tree::leaf(random_string(3));
  }
  Indicator ind = coin(rng_) == 1 ? Indicator::Lt : Indicator::Gt;
  return Tree::node(ind, random_tree(max_depth - 1), random_tree(max_depth - 1));
}

void InstanceGenerator::harvest() {
  // Run the processor over shuffled copies of the lexicon and keep every
  // in-domain configuration the oracle visits.
  for (int round = 0; round < 40; ++round) {
    StateDescription w;
    for (const LexEntry& e : lex_.entries()) w.push_back(e.as_tree());
    std::shuffle(w.begin(), w.end(), rng_);
    for (int steps = 0; steps < 16; ++steps) {
      for (const TreePtr& t : w) tree_pool_.push_back(t);
      std::optional<StepChoice> choice = find_step(w);
      if (!choice) break;
      StateDescription arranged = permute(w, step_permutation(*choice, w.size()));
      if (choice->op == DerivationStep::Op::Merge) {
        mergeable_pool_1_.push_back(arranged[arranged.size() - 2]);
        mergeable_pool_2_.push_back(arranged[arranged.size() - 1]);
        w = merge_star(arranged);
      } else {
        movable_pool_.push_back(arranged.back());
        w = move_star(arranged);
      }
    }
  }
}

InstanceGenerator::MergeInstance InstanceGenerator::random_merge_instance() {
  std::uniform_int_distribution<std::size_t> pick(0, mergeable_pool_1_.size() - 1);
  std::size_t i = pick(rng_);
  return {mergeable_pool_1_[i], mergeable_pool_2_[i]};
}

TreePtr InstanceGenerator::random_move_instance() {
  std::uniform_int_distribution<std::size_t> pick(0, movable_pool_.size() - 1);
  return movable_pool_[pick(rng_)];
}

StateDescription InstanceGenerator::random_stack(std::size_t max_trees) {
  std::uniform_int_distribution<std::size_t> count(1, max_trees);
  std::uniform_int_distribution<std::size_t> pick(0, tree_pool_.size() - 1);
  StateDescription out;
  const std::size_t n = count(rng_);
  for (std::size_t i = 0; i < n; ++i) out.push_back(tree_pool_[pick(rng_)]);
  return out;
}

}  // namespace mg
