#include "mg/grammar.hpp"

namespace mg {

namespace {

// feat() throws on empty head labels; domain checks treat that as "no
// feature".
bool try_feat(const TreePtr& t, Feature& out) {
  Label lab = label(head(t), t);
  const FeatureString& s = std::get<FeatureString>(lab);
  if (s.empty()) return false;
  out = first(s);
  return true;
}

}  // namespace

bool in_dom_merge(const TreePtr& t1, const TreePtr& t2) {
  Feature f1, f2;
  if (!try_feat(t1, f1) || !try_feat(t2, f2)) return false;
  if (f1.kind != FeatureKind::Selector) return false;
  return sel(f1) == f2;
}

bool in_dom_move(const TreePtr& t) {
  Feature f;
  if (!try_feat(t, f)) return false;
  if (f.kind != FeatureKind::Licensor) return false;
  std::set<NodeAddress> ls = leaves_with(lic(f), t);
  if (ls.empty()) return false;
  std::set<NodeAddress> ms;
  for (const NodeAddress& a : ls) {
    try {
      ms.insert(max_proj(a, t));
    } catch (const UndefinedError&) {
      return false;
    }
  }
  return ms.size() == 1;
}

TreePtr merge(const TreePtr& t1, const TreePtr& t2) {
  if (!in_dom_merge(t1, t2)) throw DomainError("merge arguments are not in Dom_merge");
  if (!is_complex(t1)) return cons(Indicator::Lt, shift_head(t1), shift_head(t2));
  return cons(Indicator::Gt, shift_head(t2), shift_head(t1));
}

NodeAddress move_target(const TreePtr& t) {
  Feature f = feat(t);
  std::set<NodeAddress> ms = max_set(leaves_with(lic(f), t), t);
  return *ms.begin();
}

TreePtr move(const TreePtr& t) {
  if (!in_dom_move(t)) throw DomainError("move argument is not in Dom_move");
  NodeAddress target = move_target(t);
  TreePtr moved = shift_head(extract_path(target, t));
  TreePtr remainder = shift_head(replace(target, t, Tree::empty_leaf()));
  return cons(Indicator::Gt, moved, remainder);
}

}  // namespace mg
