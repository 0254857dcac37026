#include <doctest.h>

#include "support.hpp"

using namespace mg;

TEST_CASE("bind_string reverts the order") {
  CHECK(bind_string(FeatureString{}).empty());

  auto two = mgtest::leaf("=d v")->leaf_label();
  BindingSet b = bind_string(two);
  REQUIRE(b.size() == 2);
  CHECK(b[0].role == string_pos(2));  // f1 at s2
  CHECK(std::get<Feature>(b[0].filler) == parse_feature("=d"));
  CHECK(b[1].role == string_pos(1));  // f2 at s1
  CHECK(std::get<Feature>(b[1].filler) == parse_feature("v"));

  auto love = mgtest::leaf("=d v -i")->leaf_label();
  CHECK(render(bind_string(love)) == "{(=d, s3), (v, s2), (-i, s1)}");
}

TEST_CASE("bind_string is order reverting on random strings") {
  InstanceGenerator gen(5);
  for (int n = 0; n < 200; ++n) {
    FeatureString s = gen.random_string(6);
    BindingSet b = bind_string(s);
    CHECK(b.size() == s.size());
    std::vector<Feature> reversed(s.items().rbegin(), s.items().rend());
    BindingSet br = bind_string(FeatureString(reversed));
    for (std::size_t i = 0; i < b.size(); ++i) {
      // position indices reverse under string reversal
      CHECK(b[i].role.index == static_cast<int>(s.size() - i));
      CHECK(br[i].role == b[i].role);
    }
  }
}

TEST_CASE("bind_tree matches the worked examples") {
  auto f = mgtest::leaf("=d v");
  auto g = mgtest::leaf("d");
  auto t = cons(Indicator::Gt, f, g);
  CHECK(render(bind_tree(t)) ==
        "{(>, r2), ({(=d, s2), (v, s1)}, r0), ({(d, s1)}, r1)}");

  auto h = mgtest::leaf("t");
  auto s = cons(Indicator::Gt, f, cons(Indicator::Lt, g, h));
  CHECK(render(bind_tree(s)) ==
        "{(>, r2), ({(=d, s2), (v, s1)}, r0), ({(<, r2), ({(d, s1)}, r0), ({(t, s1)}, r1)}, "
        "r1)}");

  CHECK(bind_tree(Tree::empty_leaf()).empty());
}

TEST_CASE("binding depth tracks tree depth") {
  InstanceGenerator gen(29);
  for (int n = 0; n < 100; ++n) {
    TreePtr t = gen.random_tree(4);
    if (!is_complex(t)) continue;
    CHECK(binding_depth(bind_tree(t)) >= max_leaf_depth(t));
  }
}

TEST_CASE("distinct derivation trees yield distinct binding structures") {
  DerivationTrace trace = derive(mgtest::adams());
  std::vector<BindingSet> seen;
  std::vector<TreePtr> trees;
  for (const StateDescription& w : trace.states)
    for (const TreePtr& t : w) trees.push_back(t);
  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (std::size_t b = a + 1; b < trees.size(); ++b) {
      if (tree_equal(trees[a], trees[b])) continue;
      CHECK_FALSE(bind_tree(trees[a]) == bind_tree(trees[b]));
    }
  }
}
