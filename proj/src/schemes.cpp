#include "mg/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mg {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

FillerVec dense4(double a, double b, double c, double d) {
  FillerVec out;
  if (a != 0.0) out[0] = a;
  if (b != 0.0) out[1] = b;
  if (c != 0.0) out[2] = c;
  if (d != 0.0) out[3] = d;
  return out;
}

const std::vector<std::pair<std::string, int>>& godel_codes() {
  static const std::vector<std::pair<std::string, int>> codes = {
      {"d", 0},  {"=d", 1},    {"v", 2},     {"=v", 3}, {"t", 4},  {"=t", 5},
      {"+CASE", 6}, {"-case", 7}, {"+I", 8}, {"-i", 9}, {">", 10}, {"<", 11},
  };
  return codes;
}

}  // namespace

Scheme make_faithful_scheme(const Lexicon& lex) {
  Scheme s;
  s.kind_ = SchemeKind::Faithful;
  s.faithful_ = true;
  s.string_capacity_ = static_cast<int>(lex.max_entry_length());

  std::set<std::string> tokens;
  std::map<std::string, Feature> token_feature;
  for (const LexEntry& e : lex.entries()) {
    for (const Feature& f : e.features.items()) {
      std::string tok = to_string(f);
      tokens.insert(tok);
      token_feature.emplace(tok, f);
    }
  }
  tokens.insert("<");
  tokens.insert(">");

  int axis = 0;
  for (const std::string& tok : tokens) {  // sorted, deterministic
    s.axis_names_.push_back(tok);
    s.fillers_[tok] = FillerVec{{axis, 1.0}};
    ++axis;
  }
  s.filler_dim_ = axis;
  s.token_feature_ = std::move(token_feature);
  return s;
}

Scheme make_arithmetic_scheme() {
  Scheme s;
  s.kind_ = SchemeKind::Arithmetic;
  s.faithful_ = false;
  s.string_capacity_ = 4;
  s.filler_dim_ = 4;
  const double q = kInvSqrt3;
  s.fillers_["d"] = dense4(1, 0, 0, 0);
  s.fillers_["=d"] = dense4(0, 1, 0, 0);
  s.fillers_["v"] = dense4(0, 0, 1, 0);
  s.fillers_["=v"] = dense4(0, 0, 0, 1);
  s.fillers_["t"] = dense4(q, q, q, q);  // the paper's f5 keeps 1/sqrt(3) over +/-1 entries
  s.fillers_["=t"] = dense4(-q, q, q, q);
  s.fillers_["+CASE"] = dense4(q, -q, q, q);
  s.fillers_["-case"] = dense4(q, q, -q, q);
  s.fillers_["+I"] = dense4(q, q, q, -q);
  s.fillers_["-i"] = dense4(-q, -q, q, q);
  s.fillers_[">"] = dense4(q, -q, -q, q);
  s.fillers_["<"] = dense4(q, q, -q, -q);
  s.silent_ = {"c"};  // the complementizer has no filler in the paper's tables
  return s;
}

Scheme make_fractal_scheme() {
  Scheme s;
  s.kind_ = SchemeKind::Fractal;
  s.faithful_ = false;
  s.string_capacity_ = 1 << 20;  // positions are scalar weights, no hard bound
  s.filler_dim_ = 1;
  for (const auto& [tok, code] : godel_codes()) {
    if (tok == "<" || tok == ">")
      s.fillers_[tok] = FillerVec{{0, code / 12.0}};  // an indicator is a 1-feature label
    else if (code != 0)
      s.fillers_[tok] = FillerVec{{0, static_cast<double>(code)}};
    else
      s.fillers_[tok] = FillerVec{};  // code 0 contributes nothing
  }
  s.silent_ = {"c"};
  return s;
}

DenseVector kron(const DenseVector& a, const DenseVector& b) {
  DenseVector out(a.size() * b.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

double encode_string_fractal(const FeatureString& s) {
  static const Scheme scheme = make_fractal_scheme();
  FockVector v = represent_string(s, scheme);
  auto it = v.terms().find(RoleAddress{});
  return it == v.terms().end() ? 0.0 : it->second.at(0);
}

DenseVector role_vector(const Role& r, const Scheme& scheme) {
  switch (r.kind) {
    case RoleKind::TreeLeft: return {1, 0, 0};
    case RoleKind::TreeRight: return {0, 1, 0};
    case RoleKind::TreeMother: return {0, 0, 1};
    case RoleKind::StringPos: {
      if (scheme.kind() != SchemeKind::Arithmetic)
        throw Error("string roles are scalar in this scheme");
      const double q = kInvSqrt3;
      switch (r.index) {
        case 1: return {q, q, q};
        case 2: return {-q, q, q};
        case 3: return {q, -q, q};
        case 4: return {q, q, -q};
        default: throw CapacityExceededError("no role vector for s" + std::to_string(r.index));
      }
    }
    case RoleKind::StackPos:
      throw Error("stack roles are scalar in compressed schemes");
  }
  throw Error("bad role");
}

DenseVector densify(const FockVector& u, const Scheme& scheme, std::size_t factors) {
  if (scheme.kind() == SchemeKind::Faithful)
    throw Error("densify applies to the compressed schemes");
  if (u.factor_depth() > factors)
    throw DepthExceededError("vector needs " + std::to_string(u.factor_depth()) +
                             " role factors, target is " + std::to_string(factors));
  const std::size_t fdim = static_cast<std::size_t>(scheme.filler_dim());
  std::size_t dim = fdim;
  for (std::size_t k = 0; k < factors; ++k) dim *= 3;
  DenseVector acc(dim, 0.0);

  for (const auto& [addr, coeff] : u.terms()) {
    DenseVector filler(fdim, 0.0);
    for (const auto& [axis, c] : coeff) filler[static_cast<std::size_t>(axis)] = c;
    DenseVector term = filler;
    for (const Role& r : addr) term = kron(term, role_vector(r, scheme));
    for (std::size_t k = addr.size(); k < factors; ++k)
      term = kron(term, DenseVector{0, 0, 1});  // trailing mother-role padding
    for (std::size_t i = 0; i < dim; ++i) acc[i] += term[i];
  }
  return acc;
}

DenseVector densify(const FockVector& u, const Scheme& scheme) {
  return densify(u, scheme, u.factor_depth());
}

DenseVector embed(const DenseVector& v, std::size_t d, std::size_t D, const Scheme& scheme) {
  (void)scheme;
  if (d > D) throw DepthExceededError("cannot embed depth " + std::to_string(d) +
                                      " into depth " + std::to_string(D));
  if (d == D) return v;
  std::size_t pad = 1;
  for (std::size_t k = d; k < D; ++k) pad *= 3;
  DenseVector out(v.size() * pad, 0.0);
  // appended mother roles select the last coordinate of each padded block
  for (std::size_t i = 0; i < v.size(); ++i) out[i * pad + (pad - 1)] = v[i];
  return out;
}

std::size_t embedding_factor_target(const std::vector<StateDescription>& states,
                                    const Scheme& scheme) {
  std::size_t levels = 1;
  for (const StateDescription& w : states)
    for (const TreePtr& t : w) levels = std::max(levels, max_leaf_depth(t) + 1);
  return scheme.kind() == SchemeKind::Arithmetic ? levels + 1 : levels;
}

std::string scheme_manifest(const Scheme& scheme) {
  std::ostringstream out;
  out << "scheme: " << to_string(scheme.kind()) << "\n";
  out << "faithful: " << (scheme.faithful() ? "yes" : "no") << "\n";
  out << "filler dimension: " << scheme.filler_dim() << "\n";
  out << "string capacity: " << scheme.string_capacity() << "\n";
  if (scheme.kind() == SchemeKind::Faithful) {
    out << "axes:\n";
    for (std::size_t i = 0; i < scheme.axis_names().size(); ++i)
      out << "  " << i << ": " << scheme.axis_names()[i] << "\n";
    return out.str();
  }
  if (scheme.kind() == SchemeKind::Fractal) {
    out << "godel codes (base 12):\n";
    for (const auto& [tok, code] : godel_codes()) out << "  " << tok << ": " << code << "\n";
    out << "uncoded: c, phonetic material\n";
    return out.str();
  }
  out << "fillers:\n";
  out << "  f1..f4 = canonical basis of R^4 for d, =d, v, =v\n";
  out << "  f5..f12 = (+/-1)/sqrt(3) vectors for t, =t, +CASE, -case, +I, -i, >, <\n";
  out << "roles: r0,r1,r2 = canonical basis of R^3; s1..s4 on the unit sphere\n";
  out << "uncoded: c, phonetic material\n";
  return out.str();
}

}  // namespace mg
