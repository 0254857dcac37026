#pragma once

#include <random>

#include "mg/fock.hpp"

namespace mg {

// Seeded source of random feature strings, trees, merge/move instances and
// stacks over the worked lexicon's feature inventory.  Used by the property
// suites and by `verify`; deterministic for a fixed seed.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint32_t seed);

  const Lexicon& lexicon() const { return lex_; }

  FeatureString random_string(std::size_t max_len);
  TreePtr random_tree(std::size_t max_depth);

  // Random in-domain instances harvested from short random derivation runs.
  struct MergeInstance {
    TreePtr t1, t2;
  };
  MergeInstance random_merge_instance();
  TreePtr random_move_instance();
  StateDescription random_stack(std::size_t max_trees);

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  Lexicon lex_;
  std::vector<TreePtr> mergeable_pool_1_, mergeable_pool_2_, movable_pool_;
  std::vector<TreePtr> tree_pool_;

  void harvest();
};

}  // namespace mg
