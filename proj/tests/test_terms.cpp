#include <doctest.h>

#include "support.hpp"

using namespace mg;

TEST_CASE("first and shift") {
  auto love = mgtest::leaf("=d v -i", "love")->leaf_label();
  CHECK(to_string(first(love)) == "=d");
  CHECK(to_string(shift(love)) == "v -i :: love");

  auto c = mgtest::leaf("c")->leaf_label();
  CHECK(to_string(first(c)) == "c");
  CHECK(shift(c).empty());

  auto ed = mgtest::leaf("=v +I +CASE t")->leaf_label();
  CHECK(to_string(shift(shift(ed))) == "+CASE t");

  CHECK_THROWS_AS(first(FeatureString{}), EmptyStringError);
  CHECK_THROWS_AS(shift(FeatureString{}), EmptyStringError);
}

TEST_CASE("first/shift agree with naive head/tail on random strings") {
  InstanceGenerator gen(7);
  for (int n = 0; n < 1000; ++n) {
    FeatureString s = gen.random_string(6);
    if (s.empty()) continue;
    CHECK(first(s) == s.items().front());
    std::vector<Feature> tail(s.items().begin() + 1, s.items().end());
    CHECK(shift(s) == FeatureString(tail));
  }
}

TEST_CASE("simple and complex trees") {
  auto douglas = mgtest::leaf("d -case", "Douglas");
  CHECK_FALSE(is_complex(douglas));
  auto t = cons(Indicator::Lt, mgtest::leaf("a"), mgtest::leaf("b"));
  CHECK(is_complex(t));
}

TEST_CASE("extract and cons round trip") {
  auto a = mgtest::leaf("a");
  auto b = mgtest::leaf("b");
  auto t = cons(Indicator::Lt, a, b);
  CHECK(tree_equal(extract(0, t), a));
  CHECK(tree_equal(extract(1, cons(Indicator::Gt, a, b)), b));
  CHECK_THROWS_AS(extract(0, a), SimpleTreeError);

  auto two = cons(Indicator::Gt, Tree::empty_leaf(), Tree::empty_leaf());
  CHECK(two->indicator() == Indicator::Gt);

  // reconstruction corollary on random trees
  InstanceGenerator gen(11);
  for (int n = 0; n < 200; ++n) {
    TreePtr r = gen.random_tree(5);
    if (!is_complex(r)) continue;
    CHECK(tree_equal(cons(r->indicator(), extract(0, r), extract(1, r)), r));
  }
}

TEST_CASE("step-1 tree from its parts") {
  auto t = cons(Indicator::Lt, mgtest::leaf("v -i", "love"), mgtest::leaf("-case", "deadlines"));
  CHECK(render(t) == "(< [v -i :: love] [-case :: deadlines])");
  CHECK(tree_equal(extract(1, t), mgtest::leaf("-case", "deadlines")));
  CHECK(to_string(feat(t)) == "v");
  CHECK(to_string(head(t)) == "0");
  CHECK(std::get<FeatureString>(label(NodeAddress::parse("1"), t)) ==
        mgtest::leaf("-case", "deadlines")->leaf_label());
}

TEST_CASE("extract_path consumes addresses root-down") {
  auto a = mgtest::leaf("a");
  auto b = mgtest::leaf("b");
  auto c = mgtest::leaf("c");
  auto t = cons(Indicator::Lt, cons(Indicator::Lt, a, b), c);
  CHECK(tree_equal(extract_path(NodeAddress{}, t), t));
  CHECK(tree_equal(extract_path(NodeAddress::parse("01"), t), b));
  CHECK_THROWS_AS(extract_path(NodeAddress::parse("11"), t), BadAddressError);
}

namespace {
// the eight-leaf example tree whose head is 001
mg::TreePtr example_tree() {
  auto L = [](const char* name) { return mgtest::leaf(name); };
  auto n = [](Indicator i, TreePtr a, TreePtr b) { return cons(i, a, b); };
  return n(Indicator::Lt,
           n(Indicator::Lt, n(Indicator::Gt, L("a"), L("b")), n(Indicator::Lt, L("c"), L("d"))),
           n(Indicator::Lt, n(Indicator::Lt, L("e"), L("f")), n(Indicator::Gt, L("g"), L("h"))));
}
}  // namespace

TEST_CASE("head follows the projection indicators") {
  CHECK(head(mgtest::leaf("x")).size() == 0);
  CHECK(to_string(head(example_tree())) == "001");
}

TEST_CASE("label absorbs residual addresses at leaves") {
  auto t = cons(Indicator::Lt, mgtest::leaf("a"), mgtest::leaf("b"));
  CHECK(std::get<Indicator>(label(NodeAddress{}, t)) == Indicator::Lt);
  auto leaf = mgtest::leaf("d -case", "Douglas");
  CHECK(std::get<FeatureString>(label(NodeAddress::parse("0101"), leaf)) == leaf->leaf_label());
}

TEST_CASE("feat of leaves and lambda-headed remainders") {
  CHECK(to_string(feat(mgtest::leaf("d -case", "Douglas"))) == "d");
  // step-3 remainder: head carries "=d v"
  auto t = cons(Indicator::Gt, mgtest::leaf("", "deadlines"),
                cons(Indicator::Lt, mgtest::leaf("=d v"),
                     cons(Indicator::Lt, mgtest::leaf("-i", "love"), Tree::empty_leaf())));
  CHECK(to_string(feat(t)) == "=d");
  CHECK_THROWS_AS(feat(Tree::empty_leaf()), EmptyStringError);
}

TEST_CASE("maximal projections") {
  auto t = example_tree();
  CHECK(max_proj(head(t), t).size() == 0);
  CHECK(to_string(max_proj(NodeAddress::parse("100"), t)) == "1");
  CHECK(max_set({NodeAddress::parse("100")}, t) ==
        std::set<NodeAddress>{NodeAddress::parse("1")});
  CHECK(max_set({}, t).empty());
  CHECK(max_set({head(t)}, t) == std::set<NodeAddress>{NodeAddress{}});
  CHECK_THROWS_AS(max_proj(NodeAddress{}, t), UndefinedError);
}

TEST_CASE("leaves_with finds licensees") {
  CHECK(leaves_with(parse_feature("-case"), Tree::empty_leaf()).empty());

  // step-2 tree: the -case leaf is deadlines at 11
  auto step2 = cons(Indicator::Lt, mgtest::leaf("+CASE =d v"),
                    cons(Indicator::Lt, mgtest::leaf("-i", "love"),
                         mgtest::leaf("-case", "deadlines")));
  CHECK(leaves_with(parse_feature("-case"), step2) ==
        std::set<NodeAddress>{NodeAddress::parse("11")});
  // its maximal projection is the leaf itself: the sister projects
  CHECK(to_string(max_proj(NodeAddress::parse("11"), step2)) == "11");

  // membership by brute-force enumeration on random trees
  InstanceGenerator gen(3);
  for (int n = 0; n < 100; ++n) {
    TreePtr t = gen.random_tree(5);
    Feature f = parse_feature("-i");
    for (const NodeAddress& a : leaves_with(f, t)) {
      TreePtr sub = extract_path(a, t);
      CHECK(sub->is_leaf());
      CHECK(first(sub->leaf_label()) == f);
    }
  }
}

TEST_CASE("replace") {
  auto a = mgtest::leaf("a");
  auto b = mgtest::leaf("b");
  auto c = mgtest::leaf("c");
  auto t = cons(Indicator::Lt, a, b);
  CHECK(tree_equal(replace(NodeAddress{}, t, c), c));
  CHECK(tree_equal(replace(NodeAddress::parse("0"), t, c), cons(Indicator::Lt, c, b)));

  InstanceGenerator gen(13);
  for (int n = 0; n < 100; ++n) {
    TreePtr r = gen.random_tree(4);
    for (const NodeAddress& leaf_addr : leaves_with(parse_feature("d"), r))
      CHECK(tree_equal(replace(leaf_addr, r, extract_path(leaf_addr, r)), r));
  }
}

TEST_CASE("shift_head trims exactly the head label") {
  CHECK(render(shift_head(mgtest::leaf("d -case", "Douglas"))) == "[-case :: Douglas]");
  CHECK(render(shift_head(shift_head(mgtest::leaf("=d v -i", "love")))) == "[-i :: love]");
  CHECK_THROWS_AS(shift_head(Tree::empty_leaf()), EmptyStringError);

  InstanceGenerator gen(17);
  for (int n = 0; n < 100; ++n) {
    TreePtr t = gen.random_tree(4);
    const FeatureString lab = std::get<FeatureString>(label(head(t), t));
    if (lab.empty()) continue;
    TreePtr s = shift_head(t);
    CHECK(std::get<FeatureString>(label(head(t), s)).size() == lab.size() - 1);
    // no other leaf changed
    for (const NodeAddress& a : leaves_with(parse_feature("d"), t)) {
      if (a == head(t)) continue;
      CHECK(tree_equal(extract_path(a, s), extract_path(a, t)));
    }
  }
}
