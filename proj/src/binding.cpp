#include "mg/binding.hpp"

namespace mg {

Role string_pos(int i) {
  if (i < 1) throw Error("string positions are 1-based");
  return {RoleKind::StringPos, i};
}

Role stack_pos(int k) {
  if (k < 1) throw Error("stack positions are 1-based");
  return {RoleKind::StackPos, k};
}

std::string to_string(const Role& r) {
  switch (r.kind) {
    case RoleKind::StringPos: return "s" + std::to_string(r.index);
    case RoleKind::TreeLeft: return "r0";
    case RoleKind::TreeRight: return "r1";
    case RoleKind::TreeMother: return "r2";
    case RoleKind::StackPos: return "p" + std::to_string(r.index);
  }
  return "?";
}

bool operator==(const Binding& a, const Binding& b) {
  return a.role == b.role && a.filler == b.filler;
}

bool operator==(const BindingSet& a, const BindingSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

BindingSet bind_string(const FeatureString& s) {
  BindingSet out;
  const std::size_t p = s.size();
  for (std::size_t i = 1; i <= p; ++i)
    out.push_back(Binding{string_pos(static_cast<int>(p - i + 1)), s.at(i)});
  return out;
}

BindingSet bind_tree(const TreePtr& t) {
  if (t->is_leaf()) return bind_string(t->leaf_label());
  BindingSet out;
  out.push_back(Binding{kTreeMother, t->indicator()});
  out.push_back(Binding{kTreeLeft, bind_tree(t->left())});
  out.push_back(Binding{kTreeRight, bind_tree(t->right())});
  return out;
}

std::size_t binding_depth(const BindingSet& b) {
  std::size_t depth = b.empty() ? 0 : 1;
  for (const Binding& item : b) {
    if (const auto* sub = std::get_if<BindingSet>(&item.filler))
      depth = std::max(depth, 1 + binding_depth(*sub));
  }
  return depth;
}

namespace {
std::string render_filler(const std::variant<Feature, Indicator, BindingSet>& f) {
  if (const auto* feat = std::get_if<Feature>(&f)) return to_string(*feat);
  if (const auto* ind = std::get_if<Indicator>(&f)) return to_string(*ind);
  return render(std::get<BindingSet>(f));
}
}  // namespace

std::string render(const BindingSet& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += "(" + render_filler(b[i].filler) + ", " + to_string(b[i].role) + ")";
  }
  return out + "}";
}

}  // namespace mg
