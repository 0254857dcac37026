#include "mg/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mg {

FillerVec fv_add(const FillerVec& a, const FillerVec& b) {
  FillerVec out = a;
  for (const auto& [axis, c] : b) {
    double v = (out[axis] += c);
    if (v == 0.0) out.erase(axis);
  }
  return out;
}

FillerVec fv_scale(const FillerVec& a, double c) {
  FillerVec out;
  if (c == 0.0) return out;
  for (const auto& [axis, v] : a) out[axis] = v * c;
  return out;
}

double fv_inner(const FillerVec& a, const FillerVec& b) {
  double s = 0.0;
  for (const auto& [axis, v] : a) {
    auto it = b.find(axis);
    if (it != b.end()) s += v * it->second;
  }
  return s;
}

bool fv_is_zero(const FillerVec& a) { return a.empty(); }

void FockVector::add_term(const RoleAddress& addr, const FillerVec& coeff) {
  if (fv_is_zero(coeff)) return;
  auto it = terms_.find(addr);
  if (it == terms_.end()) {
    terms_.emplace(addr, coeff);
    return;
  }
  it->second = fv_add(it->second, coeff);
  if (fv_is_zero(it->second)) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [addr, coeff] : other.terms_) add_term(addr, coeff);
  return *this;
}

FockVector FockVector::operator-(const FockVector& other) const {
  FockVector out = *this;
  for (const auto& [addr, coeff] : other.terms_) out.add_term(addr, fv_scale(coeff, -1.0));
  return out;
}

FockVector FockVector::scaled(double c) const {
  FockVector out;
  if (c == 0.0) return out;
  for (const auto& [addr, coeff] : terms_) out.terms_.emplace(addr, fv_scale(coeff, c));
  return out;
}

FockVector FockVector::bind(const Role& r) const {
  FockVector out;
  for (const auto& [addr, coeff] : terms_) {
    RoleAddress a = addr;
    a.push_back(r);
    out.terms_.emplace(std::move(a), coeff);
  }
  return out;
}

FockVector FockVector::unbind_role(const Role& r) const {
  FockVector out;
  for (const auto& [addr, coeff] : terms_) {
    if (addr.empty() || !(addr.back() == r)) continue;
    RoleAddress a(addr.begin(), addr.end() - 1);
    out.add_term(a, coeff);
  }
  return out;
}

double FockVector::inner(const FockVector& other) const {
  double s = 0.0;
  for (const auto& [addr, coeff] : terms_) {
    auto it = other.terms_.find(addr);
    if (it != other.terms_.end()) s += fv_inner(coeff, it->second);
  }
  return s;
}

double FockVector::norm() const { return std::sqrt(inner(*this)); }

std::size_t FockVector::factor_depth() const {
  std::size_t d = 0;
  for (const auto& [addr, coeff] : terms_) d = std::max(d, addr.size());
  return d;
}

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::Faithful: return "faithful";
    case SchemeKind::Arithmetic: return "arithmetic";
    case SchemeKind::Fractal: return "fractal";
  }
  return "?";
}

FillerVec Scheme::filler(const Feature& f) const {
  const std::string tok = to_string(f);
  if (f.kind == FeatureKind::Phonetic && !fillers_.count(tok)) return {};
  if (silent_.count(tok)) return {};
  auto it = fillers_.find(tok);
  if (it == fillers_.end()) throw UnknownFeatureError(tok);
  return it->second;
}

FillerVec Scheme::filler(Indicator ind) const {
  auto it = fillers_.find(to_string(ind));
  if (it == fillers_.end()) throw UnknownFeatureError(to_string(ind));
  return it->second;
}

bool Scheme::covers(const Feature& f) const {
  const std::string tok = to_string(f);
  return fillers_.count(tok) && !silent_.count(tok);
}

std::optional<Feature> Scheme::feature_of(const FillerVec& v) const {
  if (!faithful_ || v.size() != 1) return std::nullopt;
  const auto& [axis, coeff] = *v.begin();
  if (coeff != 1.0 || axis < 0 || axis >= static_cast<int>(axis_names_.size()))
    return std::nullopt;
  auto it = token_feature_.find(axis_names_[axis]);
  if (it == token_feature_.end()) return std::nullopt;
  return it->second;
}

std::optional<Indicator> Scheme::indicator_of(const FillerVec& v) const {
  for (Indicator ind : {Indicator::Lt, Indicator::Gt}) {
    if (v == filler(ind)) return ind;
  }
  return std::nullopt;
}

Scheme Scheme::faithful_for(const Lexicon& lex) { return make_faithful_scheme(lex); }
Scheme Scheme::arithmetic() { return make_arithmetic_scheme(); }
Scheme Scheme::fractal() { return make_fractal_scheme(); }

namespace {

void require_faithful(const Scheme& scheme) {
  if (!scheme.faithful()) throw NonFaithfulSchemeError();
}

// Coefficient of the degree-zero term; filler vectors produced by unbinding
// live at the empty role address.
FillerVec scalar_term(const FockVector& v) {
  auto it = v.terms().find(RoleAddress{});
  return it == v.terms().end() ? FillerVec{} : it->second;
}

// Per-item binding positions.  Faithful schemes number every item; compressed
// schemes number only the syntactic prefix (silent features keep their slot).
std::vector<std::pair<Feature, int>> binding_positions(const FeatureString& s,
                                                       const Scheme& scheme) {
  std::vector<std::pair<Feature, int>> out;
  int pos = 0;
  for (const Feature& f : s.items()) {
    if (scheme.kind() != SchemeKind::Faithful && f.kind == FeatureKind::Phonetic) continue;
    out.emplace_back(f, ++pos);
  }
  return out;
}

}  // namespace

FockVector represent_string(const FeatureString& s, const Scheme& scheme) {
  FockVector out;
  auto positions = binding_positions(s, scheme);
  if (scheme.scalar_string_roles()) {
    double g = 0.0;
    for (const auto& [f, pos] : positions) {
      FillerVec fv = scheme.filler(f);
      if (fv_is_zero(fv)) continue;
      g += fv.begin()->second * std::pow(12.0, -pos);
    }
    if (g != 0.0) out.add_term({}, FillerVec{{0, g}});
    return out;
  }
  for (const auto& [f, pos] : positions) {
    FillerVec fv = scheme.filler(f);
    if (fv_is_zero(fv)) continue;
    if (pos > scheme.string_capacity())
      throw CapacityExceededError("string position " + std::to_string(pos) +
                                  " exceeds the scheme capacity " +
                                  std::to_string(scheme.string_capacity()));
    out.add_term({string_pos(pos)}, fv);
  }
  return out;
}

FockVector represent_tree(const TreePtr& t, const Scheme& scheme) {
  if (t->is_leaf()) return represent_string(t->leaf_label(), scheme);
  FockVector out;
  out.add_term({kTreeMother}, scheme.filler(t->indicator()));
  out += represent_tree(t->left(), scheme).bind(kTreeLeft);
  out += represent_tree(t->right(), scheme).bind(kTreeRight);
  return out;
}

FockVector represent_state(const StateDescription& w, const Scheme& scheme) {
  FockVector out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    FockVector tv = represent_tree(w[k], scheme);
    if (scheme.faithful())
      out += tv.bind(stack_pos(static_cast<int>(k + 1)));
    else
      out += tv;  // scalar stack role 1
  }
  return out;
}

FockVector unbind(const FockVector& u, const Role& r, const Scheme& scheme) {
  require_faithful(scheme);
  return u.unbind_role(r);
}

FockVector bold_first(const FockVector& u, const Scheme& scheme) {
  return unbind(u, string_pos(1), scheme);
}

FockVector bold_shift(const FockVector& u, const Scheme& scheme) {
  require_faithful(scheme);
  FockVector out;
  for (int i = 1; i + 1 <= scheme.string_capacity(); ++i)
    out += u.unbind_role(string_pos(i + 1)).bind(string_pos(i));
  return out;
}

FockVector bold_extract(std::uint8_t i, const FockVector& u, const Scheme& scheme) {
  require_faithful(scheme);
  if (!bold_first(u, scheme).is_zero()) throw SimpleVectorError();
  return u.unbind_role(i == 0 ? kTreeLeft : kTreeRight);
}

FockVector bold_extract_path(const NodeAddress& addr, const FockVector& u,
                             const Scheme& scheme) {
  FockVector cur = u;
  for (std::size_t i = 0; i < addr.size(); ++i) cur = bold_extract(addr.bit(i), cur, scheme);
  return cur;
}

FockVector bold_cons(Indicator f, const FockVector& u0, const FockVector& u1,
                     const Scheme& scheme) {
  require_faithful(scheme);
  FockVector out;
  out += u0.bind(kTreeLeft);
  out += u1.bind(kTreeRight);
  out.add_term({kTreeMother}, scheme.filler(f));
  return out;
}

FockVector bold_label(const NodeAddress& addr, const FockVector& u, const Scheme& scheme) {
  require_faithful(scheme);
  if (!bold_first(u, scheme).is_zero()) return u;  // leaf vector absorbs the address
  if (addr.empty()) return u.unbind_role(kTreeMother);
  return bold_label(addr.tail(), u.unbind_role(addr.bit(0) == 0 ? kTreeLeft : kTreeRight),
                    scheme);
}

NodeAddress bold_head(const FockVector& u, const Scheme& scheme) {
  require_faithful(scheme);
  if (u.is_zero()) return NodeAddress{};  // empty leaf
  if (!bold_first(u, scheme).is_zero()) return NodeAddress{};
  FockVector e0 = u.unbind_role(kTreeLeft);
  FockVector e1 = u.unbind_role(kTreeRight);
  if (u == bold_cons(Indicator::Lt, e0, e1, scheme))
    return bold_head(e0, scheme).prepend(0);
  if (u == bold_cons(Indicator::Gt, e0, e1, scheme))
    return bold_head(e1, scheme).prepend(1);
  throw UndefinedError("vector does not reconstruct as a tree representation");
}

FockVector bold_feat(const FockVector& u, const Scheme& scheme) {
  return bold_first(bold_label(bold_head(u, scheme), u, scheme), scheme);
}

NodeAddress bold_max(const NodeAddress& addr, const FockVector& u, const Scheme& scheme) {
  if (addr == bold_head(u, scheme)) return NodeAddress{};
  if (addr.empty()) throw UndefinedError("max is undefined at eps away from the head");
  std::uint8_t i = addr.bit(0);
  return bold_max(addr.tail(), bold_extract(i, u, scheme), scheme).prepend(i);
}

std::set<NodeAddress> bold_max_set(const std::set<NodeAddress>& addrs, const FockVector& u,
                                   const Scheme& scheme) {
  std::set<NodeAddress> out;
  for (const NodeAddress& a : addrs) out.insert(bold_max(a, u, scheme));
  return out;
}

std::set<NodeAddress> bold_leaves(const FillerVec& f, const FockVector& u,
                                  const Scheme& scheme) {
  require_faithful(scheme);
  std::set<NodeAddress> out;
  for (const auto& [addr, coeff] : u.terms()) {
    if (addr.empty() || !(addr.front() == string_pos(1))) continue;
    bool tree_tail = std::all_of(addr.begin() + 1, addr.end(), [](const Role& r) {
      return r.kind == RoleKind::TreeLeft || r.kind == RoleKind::TreeRight;
    });
    if (!tree_tail) continue;
    // reversed tree factors = root-down node address
    std::vector<std::uint8_t> bits;
    for (auto it = addr.rbegin(); it != addr.rend() && it->kind != RoleKind::StringPos; ++it)
      bits.push_back(it->kind == RoleKind::TreeLeft ? 0 : 1);
    if (fv_inner(f, coeff) == 1.0) out.insert(NodeAddress{std::move(bits)});
  }
  return out;
}

FockVector bold_replace(const NodeAddress& addr, const FockVector& u, const FockVector& repl,
                        const Scheme& scheme) {
  require_faithful(scheme);
  if (addr.empty()) return repl;
  FillerVec ind_vec = scalar_term(bold_label(NodeAddress{}, u, scheme));
  std::optional<Indicator> ind = scheme.indicator_of(ind_vec);
  if (!ind) throw BadAddressError(to_string(addr));
  FockVector e0 = u.unbind_role(kTreeLeft);
  FockVector e1 = u.unbind_role(kTreeRight);
  if (addr.bit(0) == 0)
    return bold_cons(*ind, bold_replace(addr.tail(), e0, repl, scheme), e1, scheme);
  return bold_cons(*ind, e0, bold_replace(addr.tail(), e1, repl, scheme), scheme);
}

FockVector bold_shift_head(const FockVector& u, const Scheme& scheme) {
  NodeAddress h = bold_head(u, scheme);
  FockVector lab = bold_label(h, u, scheme);
  return bold_replace(h, u, bold_shift(lab, scheme), scheme);
}

FillerVec bold_sel(const FillerVec& f, const Scheme& scheme) {
  require_faithful(scheme);
  std::optional<Feature> feat = scheme.feature_of(f);
  if (!feat || feat->kind != FeatureKind::Selector)
    throw DomainError("filler vector is not a selector image");
  return scheme.filler(sel(*feat));
}

FillerVec bold_lic(const FillerVec& f, const Scheme& scheme) {
  require_faithful(scheme);
  std::optional<Feature> feat = scheme.feature_of(f);
  if (!feat || feat->kind != FeatureKind::Licensor)
    throw DomainError("filler vector is not a licensor image");
  return scheme.filler(lic(*feat));
}

bool in_dom_bold_merge(const FockVector& u1, const FockVector& u2, const Scheme& scheme) {
  require_faithful(scheme);
  try {
    FillerVec f1 = scalar_term(bold_feat(u1, scheme));
    std::optional<Feature> sf = scheme.feature_of(f1);
    if (!sf || sf->kind != FeatureKind::Selector) return false;
    FockVector f2 = bold_feat(u2, scheme);
    FockVector want;
    want.add_term({}, scheme.filler(sel(*sf)));
    return f2 == want;
  } catch (const Error&) {
    return false;
  }
}

bool in_dom_bold_move(const FockVector& u, const Scheme& scheme) {
  require_faithful(scheme);
  try {
    FillerVec f = scalar_term(bold_feat(u, scheme));
    std::optional<Feature> lf = scheme.feature_of(f);
    if (!lf || lf->kind != FeatureKind::Licensor) return false;
    std::set<NodeAddress> ls = bold_leaves(scheme.filler(lic(*lf)), u, scheme);
    if (ls.empty()) return false;
    return bold_max_set(ls, u, scheme).size() == 1;
  } catch (const Error&) {
    return false;
  }
}

FockVector bold_merge(const FockVector& u1, const FockVector& u2, const Scheme& scheme) {
  if (!in_dom_bold_merge(u1, u2, scheme))
    throw DomainError("vectors are not in Dom_merge");
  FockVector s1 = bold_shift_head(u1, scheme);
  FockVector s2 = bold_shift_head(u2, scheme);
  if (!bold_first(u1, scheme).is_zero()) return bold_cons(Indicator::Lt, s1, s2, scheme);
  return bold_cons(Indicator::Gt, s2, s1, scheme);
}

FockVector bold_move(const FockVector& u, const Scheme& scheme) {
  if (!in_dom_bold_move(u, scheme)) throw DomainError("vector is not in Dom_move");
  FillerVec f = scalar_term(bold_feat(u, scheme));
  std::set<NodeAddress> ls = bold_leaves(bold_lic(f, scheme), u, scheme);
  NodeAddress target = *bold_max_set(ls, u, scheme).begin();
  FockVector moved = bold_shift_head(bold_extract_path(target, u, scheme), scheme);
  FockVector rem = bold_shift_head(bold_replace(target, u, FockVector{}, scheme), scheme);
  return bold_cons(Indicator::Gt, moved, rem, scheme);
}

std::size_t stack_size(const FockVector& state) {
  int m = 0;
  for (const auto& [addr, coeff] : state.terms()) {
    if (!addr.empty() && addr.back().kind == RoleKind::StackPos)
      m = std::max(m, addr.back().index);
  }
  return static_cast<std::size_t>(m);
}

FockVector bold_merge_star(const FockVector& state, const Scheme& scheme) {
  require_faithful(scheme);
  const int m = static_cast<int>(stack_size(state));
  if (m < 2) throw UnderflowError();
  FockVector out;
  for (int k = 1; k <= m - 2; ++k)
    out += state.unbind_role(stack_pos(k)).bind(stack_pos(k));
  FockVector top1 = state.unbind_role(stack_pos(m - 1));
  FockVector top2 = state.unbind_role(stack_pos(m));
  out += bold_merge(top1, top2, scheme).bind(stack_pos(m - 1));
  return out;
}

FockVector bold_move_star(const FockVector& state, const Scheme& scheme) {
  require_faithful(scheme);
  const int m = static_cast<int>(stack_size(state));
  if (m < 1) throw UnderflowError();
  FockVector out;
  for (int k = 1; k <= m - 1; ++k)
    out += state.unbind_role(stack_pos(k)).bind(stack_pos(k));
  out += bold_move(state.unbind_role(stack_pos(m)), scheme).bind(stack_pos(m));
  return out;
}

FockVector bold_transpose(int i, int j, const FockVector& state, const Scheme& scheme) {
  require_faithful(scheme);
  FockVector out;
  for (const auto& [addr, coeff] : state.terms()) {
    bool at_i = !addr.empty() && addr.back() == stack_pos(i);
    bool at_j = !addr.empty() && addr.back() == stack_pos(j);
    if (!at_i && !at_j) out.add_term(addr, coeff);  // projector P_ij
  }
  out += state.unbind_role(stack_pos(i)).bind(stack_pos(j));
  out += state.unbind_role(stack_pos(j)).bind(stack_pos(i));
  return out;
}

std::string render(const FockVector& u) {
  std::ostringstream out;
  for (const auto& [addr, coeff] : u.terms()) {
    out << "[";
    for (std::size_t k = 0; k < addr.size(); ++k) {
      if (k) out << " ";
      out << to_string(addr[k]);
    }
    out << "] {";
    bool first_axis = true;
    for (const auto& [axis, c] : coeff) {
      if (!first_axis) out << ", ";
      first_axis = false;
      out << axis << ": " << c;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace mg
