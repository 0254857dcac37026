#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "mg/feature.hpp"

namespace mg {

// Projection indicator at internal nodes: '<' projects the left daughter,
// '>' the right daughter.
enum class Indicator : std::uint8_t { Lt, Gt };

std::string to_string(Indicator ind);

// Root-down binary node address; bit 1 of the sequence selects a child of the
// root.  extract_path consumes addresses in this same convention (see the
// note there).
class NodeAddress {
 public:
  NodeAddress() = default;
  explicit NodeAddress(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  static NodeAddress parse(const std::string& text);  // "" or "eps" = root

  bool empty() const { return bits_.empty(); }
  std::size_t size() const { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  NodeAddress prepend(std::uint8_t b) const;
  NodeAddress append(std::uint8_t b) const;
  NodeAddress tail() const;  // drop the leading bit

  friend auto operator<=>(const NodeAddress&, const NodeAddress&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::string to_string(const NodeAddress& addr);  // "eps" for the root

class Tree;
using TreePtr = std::shared_ptr<const Tree>;

// Immutable minimalist tree term: a leaf labelled by a feature string or an
// internal node with a projection indicator and two children.  All operations
// below return fresh terms and share structure freely.
class Tree {
 public:
  static TreePtr leaf(FeatureString label);
  static TreePtr empty_leaf();  // the lambda leaf left behind by move
  static TreePtr node(Indicator ind, TreePtr left, TreePtr right);

  bool is_leaf() const { return std::holds_alternative<FeatureString>(content_); }
  const FeatureString& leaf_label() const { return std::get<FeatureString>(content_); }
  Indicator indicator() const { return std::get<Node>(content_).ind; }
  const TreePtr& left() const { return std::get<Node>(content_).left; }
  const TreePtr& right() const { return std::get<Node>(content_).right; }

 private:
  struct Node {
    Indicator ind;
    TreePtr left, right;
  };
  std::variant<FeatureString, Node> content_;

  explicit Tree(FeatureString label) : content_(std::move(label)) {}
  Tree(Indicator ind, TreePtr l, TreePtr r) : content_(Node{ind, std::move(l), std::move(r)}) {}
};

bool operator==(const Tree& a, const Tree& b);
inline bool tree_equal(const TreePtr& a, const TreePtr& b) { return *a == *b; }

using Label = std::variant<Indicator, FeatureString>;

bool is_complex(const TreePtr& t);
TreePtr extract(std::uint8_t i, const TreePtr& t);
TreePtr cons(Indicator f, TreePtr t0, TreePtr t1);

// Subtree at a root-down address.  The paper composes ex_{i gamma} as
// ex_i after ex_gamma, which read literally consumes addresses from the
// right; label/head/max/replace consume them root-down from the left.  All
// address-taking functions here use the root-down reading, so extract_path
// deviates from the literal composition formula.
TreePtr extract_path(const NodeAddress& addr, const TreePtr& t);

// Indicator at internal nodes; a leaf absorbs any residual address.
Label label(const NodeAddress& addr, const TreePtr& t);

// Head leaf address: follow 0 at <-nodes and 1 at >-nodes.
NodeAddress head(const TreePtr& t);

// First feature of the head label.
Feature feat(const TreePtr& t);

// Address of the maximal projection containing addr (partial).
NodeAddress max_proj(const NodeAddress& addr, const TreePtr& t);
std::set<NodeAddress> max_set(const std::set<NodeAddress>& addrs, const TreePtr& t);

// Leaf addresses whose first feature equals f; empty-label leaves never match.
std::set<NodeAddress> leaves_with(const Feature& f, const TreePtr& t);

TreePtr replace(const NodeAddress& addr, const TreePtr& t, const TreePtr& replacement);

// Deletes the first feature of the head label.
TreePtr shift_head(const TreePtr& t);

// Canonical serialization: leaf "[f1 f2 :: phon]", empty leaf "[]",
// node "(< L R)" / "(> L R)".
std::string render(const TreePtr& t);

std::size_t leaf_count(const TreePtr& t);
std::size_t max_leaf_depth(const TreePtr& t);
std::size_t total_feature_count(const TreePtr& t);  // syntactic features only

}  // namespace mg
