#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mg/binding.hpp"
#include "mg/lexicon.hpp"
#include "mg/processor.hpp"

namespace mg {

// Tensor factor list of one term, first-bound factor first; the factor
// nearest the root of a tree is the last one.  A symbolic node address
// gamma (root-down) corresponds to the reversed tree-role factor list.
using RoleAddress = std::vector<Role>;

// Sparse filler coefficient: axis -> coefficient.  Faithful schemes use one
// axis per symbol (one-hot, integer coefficients); the arithmetic scheme uses
// axes 0..3; the fractal scheme uses the single axis 0 as a scalar.
using FillerVec = std::map<int, double>;

FillerVec fv_add(const FillerVec& a, const FillerVec& b);
FillerVec fv_scale(const FillerVec& a, double c);
double fv_inner(const FillerVec& a, const FillerVec& b);
bool fv_is_zero(const FillerVec& a);

// Sparse canonical Fock-space vector: role address -> filler coefficient.
// No stored zero coefficients.  Exact equality; all operations are pure.
class FockVector {
 public:
  FockVector() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<RoleAddress, FillerVec>& terms() const { return terms_; }

  void add_term(const RoleAddress& addr, const FillerVec& coeff);

  FockVector& operator+=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  FockVector operator-(const FockVector& other) const;
  FockVector scaled(double c) const;

  // Tensor-append one role factor to every term.
  FockVector bind(const Role& r) const;

  // (id (x) r+) : strips the last factor when it equals r, annihilates the
  // rest.  Exact for orthonormal role bases.
  FockVector unbind_role(const Role& r) const;

  double inner(const FockVector& other) const;
  double norm() const;

  // Maximal number of role factors over the stored terms.
  std::size_t factor_depth() const;

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<RoleAddress, FillerVec> terms_;
};

enum class SchemeKind { Faithful, Arithmetic, Fractal };

std::string to_string(SchemeKind k);

// A representation scheme: filler assignments for features and indicators,
// string-role handling, and the faithful flag that gates exact unbinding.
class Scheme {
 public:
  SchemeKind kind() const { return kind_; }
  bool faithful() const { return faithful_; }
  int string_capacity() const { return string_capacity_; }
  int filler_dim() const { return filler_dim_; }

  // Fractal strings fold positions into scalars instead of binding role
  // factors.
  bool scalar_string_roles() const { return kind_ == SchemeKind::Fractal; }

  // Empty result = the symbol contributes nothing (uncoded complementizer,
  // phonetic material in compressed schemes).  Unknown symbols throw.
  FillerVec filler(const Feature& f) const;
  FillerVec filler(Indicator ind) const;
  bool covers(const Feature& f) const;

  // Faithful inverse maps, used by the lifted sel/lic and domain checks.
  std::optional<Feature> feature_of(const FillerVec& v) const;
  std::optional<Indicator> indicator_of(const FillerVec& v) const;

  const std::vector<std::string>& axis_names() const { return axis_names_; }

  // construction helpers (see schemes.cpp)
  static Scheme faithful_for(const Lexicon& lex);
  static Scheme arithmetic();
  static Scheme fractal();

 private:
  SchemeKind kind_ = SchemeKind::Faithful;
  bool faithful_ = false;
  int string_capacity_ = 0;
  int filler_dim_ = 0;
  std::map<std::string, FillerVec> fillers_;   // token -> coefficient
  std::set<std::string> silent_;               // tokens that contribute nothing
  std::vector<std::string> axis_names_;        // faithful: axis -> token
  std::map<std::string, Feature> token_feature_;

  friend Scheme make_faithful_scheme(const Lexicon& lex);
  friend Scheme make_arithmetic_scheme();
  friend Scheme make_fractal_scheme();
};

Scheme make_faithful_scheme(const Lexicon& lex);
Scheme make_arithmetic_scheme();
Scheme make_fractal_scheme();

// Psi on strings: features bound to string positions in preserved order
// (fractal: folded to a scalar with weights N^-i).
FockVector represent_string(const FeatureString& s, const Scheme& scheme);

// Psi on trees: indicator at the mother role plus children bound to the
// daughter roles.
FockVector represent_tree(const TreePtr& t, const Scheme& scheme);

// Faithful: trees bound to distinct stack roles p_k.  Compressed: plain
// superposition (scalar stack role 1).
FockVector represent_state(const StateDescription& w, const Scheme& scheme);

// --- realizations (faithful schemes only) ---

FockVector unbind(const FockVector& u, const Role& r, const Scheme& scheme);

FockVector bold_first(const FockVector& u, const Scheme& scheme);
FockVector bold_shift(const FockVector& u, const Scheme& scheme);

FockVector bold_extract(std::uint8_t i, const FockVector& u, const Scheme& scheme);
FockVector bold_extract_path(const NodeAddress& addr, const FockVector& u, const Scheme& scheme);
FockVector bold_cons(Indicator f, const FockVector& u0, const FockVector& u1,
                     const Scheme& scheme);

FockVector bold_label(const NodeAddress& addr, const FockVector& u, const Scheme& scheme);

// Address-valued mirrors ("Fock space isometries").  The zero vector is
// treated as an empty leaf so the recursion terminates on lambda leaves.
NodeAddress bold_head(const FockVector& u, const Scheme& scheme);
FockVector bold_feat(const FockVector& u, const Scheme& scheme);
NodeAddress bold_max(const NodeAddress& addr, const FockVector& u, const Scheme& scheme);
std::set<NodeAddress> bold_max_set(const std::set<NodeAddress>& addrs, const FockVector& u,
                                   const Scheme& scheme);

std::set<NodeAddress> bold_leaves(const FillerVec& f, const FockVector& u, const Scheme& scheme);

FockVector bold_replace(const NodeAddress& addr, const FockVector& u, const FockVector& repl,
                        const Scheme& scheme);
FockVector bold_shift_head(const FockVector& u, const Scheme& scheme);

FillerVec bold_sel(const FillerVec& f, const Scheme& scheme);
FillerVec bold_lic(const FillerVec& f, const Scheme& scheme);

bool in_dom_bold_merge(const FockVector& u1, const FockVector& u2, const Scheme& scheme);
bool in_dom_bold_move(const FockVector& u, const Scheme& scheme);

FockVector bold_merge(const FockVector& u1, const FockVector& u2, const Scheme& scheme);
FockVector bold_move(const FockVector& u, const Scheme& scheme);

// --- stack realizations ---

std::size_t stack_size(const FockVector& state);
FockVector bold_merge_star(const FockVector& state, const Scheme& scheme);
FockVector bold_move_star(const FockVector& state, const Scheme& scheme);
FockVector bold_transpose(int i, int j, const FockVector& state, const Scheme& scheme);

// Sparse export: one line per term, lexicographic address order.
std::string render(const FockVector& u);

}  // namespace mg
