#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "mg/tree.hpp"

namespace mg {

enum class RoleKind : std::uint8_t { StringPos, TreeLeft, TreeRight, TreeMother, StackPos };

struct Role {
  RoleKind kind = RoleKind::TreeLeft;
  int index = 0;  // 1-based for StringPos / StackPos, unused otherwise

  friend auto operator<=>(const Role&, const Role&) = default;
};

Role string_pos(int i);
Role stack_pos(int k);
inline constexpr Role kTreeLeft{RoleKind::TreeLeft, 0};
inline constexpr Role kTreeRight{RoleKind::TreeRight, 0};
inline constexpr Role kTreeMother{RoleKind::TreeMother, 0};

std::string to_string(const Role& r);  // s1, r0, r1, r2, p3

// A filler/role structure: simple fillers (features or indicators) or nested
// structures bound to roles.
struct Binding;
using BindingSet = std::vector<Binding>;

struct Binding {
  Role role;
  std::variant<Feature, Indicator, BindingSet> filler;
};

bool operator==(const Binding& a, const Binding& b);
bool operator==(const BindingSet& a, const BindingSet& b);

// Order-reverting string binding: the last feature sits at position 1.
BindingSet bind_string(const FeatureString& s);

// Tree binding: indicator at the mother role, children at left/right.
// Leaves delegate to bind_string.
BindingSet bind_tree(const TreePtr& t);

std::size_t binding_depth(const BindingSet& b);

// Nested set-literal rendering, e.g. {(>, r2), ({(f1, s2), (f2, s1)}, r0), ...}.
std::string render(const BindingSet& b);

}  // namespace mg
