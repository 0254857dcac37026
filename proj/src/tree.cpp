#include "mg/tree.hpp"

#include <algorithm>

namespace mg {

std::string to_string(Indicator ind) { return ind == Indicator::Lt ? "<" : ">"; }

NodeAddress NodeAddress::parse(const std::string& text) {
  if (text.empty() || text == "eps") return NodeAddress{};
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw Error("bad node address: " + text);
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return NodeAddress{std::move(bits)};
}

NodeAddress NodeAddress::prepend(std::uint8_t b) const {
  std::vector<std::uint8_t> bits;
  bits.reserve(bits_.size() + 1);
  bits.push_back(b);
  bits.insert(bits.end(), bits_.begin(), bits_.end());
  return NodeAddress{std::move(bits)};
}

NodeAddress NodeAddress::append(std::uint8_t b) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.push_back(b);
  return NodeAddress{std::move(bits)};
}

NodeAddress NodeAddress::tail() const {
  return NodeAddress{{bits_.begin() + 1, bits_.end()}};
}

std::string to_string(const NodeAddress& addr) {
  if (addr.empty()) return "eps";
  std::string out;
  for (auto b : addr.bits()) out += static_cast<char>('0' + b);
  return out;
}

TreePtr Tree::leaf(FeatureString label) {
  return TreePtr(new Tree(std::move(label)));
}

TreePtr Tree::empty_leaf() { return leaf(FeatureString{}); }

TreePtr Tree::node(Indicator ind, TreePtr left, TreePtr right) {
  return TreePtr(new Tree(ind, std::move(left), std::move(right)));
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf_label() == b.leaf_label();
  return a.indicator() == b.indicator() && *a.left() == *b.left() && *a.right() == *b.right();
}

bool is_complex(const TreePtr& t) { return !t->is_leaf(); }

TreePtr extract(std::uint8_t i, const TreePtr& t) {
  if (t->is_leaf()) throw SimpleTreeError();
  return i == 0 ? t->left() : t->right();
}

TreePtr cons(Indicator f, TreePtr t0, TreePtr t1) {
  return Tree::node(f, std::move(t0), std::move(t1));
}

TreePtr extract_path(const NodeAddress& addr, const TreePtr& t) {
  TreePtr cur = t;
  for (std::size_t i = 0; i < addr.size(); ++i) {
    if (cur->is_leaf()) throw BadAddressError(to_string(addr));
    cur = addr.bit(i) == 0 ? cur->left() : cur->right();
  }
  return cur;
}

Label label(const NodeAddress& addr, const TreePtr& t) {
  TreePtr cur = t;
  for (std::size_t i = 0; i < addr.size(); ++i) {
    if (cur->is_leaf()) return cur->leaf_label();  // constant clause
    cur = addr.bit(i) == 0 ? cur->left() : cur->right();
  }
  if (cur->is_leaf()) return cur->leaf_label();
  return cur->indicator();
}

NodeAddress head(const TreePtr& t) {
  std::vector<std::uint8_t> bits;
  TreePtr cur = t;
  while (!cur->is_leaf()) {
    std::uint8_t b = cur->indicator() == Indicator::Lt ? 0 : 1;
    bits.push_back(b);
    cur = b == 0 ? cur->left() : cur->right();
  }
  return NodeAddress{std::move(bits)};
}

Feature feat(const TreePtr& t) {
  Label lab = label(head(t), t);
  return first(std::get<FeatureString>(lab));
}

NodeAddress max_proj(const NodeAddress& addr, const TreePtr& t) {
  if (addr == head(t)) return NodeAddress{};
  if (addr.empty()) throw UndefinedError("max is undefined at " + to_string(addr));
  std::uint8_t i = addr.bit(0);
  TreePtr sub = extract(i, t);
  return max_proj(addr.tail(), sub).prepend(i);
}

std::set<NodeAddress> max_set(const std::set<NodeAddress>& addrs, const TreePtr& t) {
  std::set<NodeAddress> out;
  for (const NodeAddress& a : addrs) out.insert(max_proj(a, t));
  return out;
}

namespace {
void collect_leaves(const Feature& f, const TreePtr& t, NodeAddress prefix,
                    std::set<NodeAddress>& out) {
  if (t->is_leaf()) {
    const FeatureString& lab = t->leaf_label();
    if (!lab.empty() && first(lab) == f) out.insert(prefix);
    return;
  }
  collect_leaves(f, t->left(), prefix.append(0), out);
  collect_leaves(f, t->right(), prefix.append(1), out);
}
}  // namespace

std::set<NodeAddress> leaves_with(const Feature& f, const TreePtr& t) {
  std::set<NodeAddress> out;
  collect_leaves(f, t, NodeAddress{}, out);
  return out;
}

TreePtr replace(const NodeAddress& addr, const TreePtr& t, const TreePtr& replacement) {
  if (addr.empty()) return replacement;
  if (t->is_leaf()) throw BadAddressError(to_string(addr));
  if (addr.bit(0) == 0)
    return Tree::node(t->indicator(), replace(addr.tail(), t->left(), replacement), t->right());
  return Tree::node(t->indicator(), t->left(), replace(addr.tail(), t->right(), replacement));
}

TreePtr shift_head(const TreePtr& t) {
  NodeAddress h = head(t);
  const FeatureString lab = std::get<FeatureString>(label(h, t));
  return replace(h, t, Tree::leaf(shift(lab)));
}

std::string render(const TreePtr& t) {
  if (t->is_leaf()) return "[" + to_string(t->leaf_label()) + "]";
  return "(" + to_string(t->indicator()) + " " + render(t->left()) + " " + render(t->right()) + ")";
}

std::size_t leaf_count(const TreePtr& t) {
  if (t->is_leaf()) return 1;
  return leaf_count(t->left()) + leaf_count(t->right());
}

std::size_t max_leaf_depth(const TreePtr& t) {
  if (t->is_leaf()) return 0;
  return 1 + std::max(max_leaf_depth(t->left()), max_leaf_depth(t->right()));
}

std::size_t total_feature_count(const TreePtr& t) {
  if (t->is_leaf()) return t->leaf_label().syntactic_size();
  return total_feature_count(t->left()) + total_feature_count(t->right());
}

}  // namespace mg
