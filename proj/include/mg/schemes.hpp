#pragma once

#include <vector>

#include "mg/fock.hpp"

namespace mg {

using DenseVector = std::vector<double>;

// Standard Kronecker product, a-index major.
DenseVector kron(const DenseVector& a, const DenseVector& b);

// Base-12 fractional Goedel code of the syntactic prefix; uncoded features
// keep their position but contribute nothing.
double encode_string_fractal(const FeatureString& s);

// 3-dimensional coordinates of a role factor under a compressed scheme:
// daughters and mother are the canonical basis, string positions the
// unit-sphere vectors with 1/sqrt(3) entries.
DenseVector role_vector(const Role& r, const Scheme& scheme);

// Kronecker expansion of a sparse vector into the compressed scheme's dense
// space.  Every term's role-factor list is padded with trailing mother roles
// up to `factors`; the result has dimension filler_dim * 3^factors.
DenseVector densify(const FockVector& u, const Scheme& scheme, std::size_t factors);
DenseVector densify(const FockVector& u, const Scheme& scheme);  // natural depth

// Re-pads a dense vector from role depth d to role depth D (appended mother
// roles); norm preserving.
DenseVector embed(const DenseVector& v, std::size_t d, std::size_t D, const Scheme& scheme);

// Shared role-factor budget for a whole derivation: the level count of the
// deepest tree anywhere in the trace, plus one slot factor for the
// arithmetic scheme (its terms always carry a string-position or mother
// factor in front of the tree path).  For the worked sentence this yields
// dense dimensions 78732 (arithmetic) and 6561 (fractal).
std::size_t embedding_factor_target(const std::vector<StateDescription>& states,
                                    const Scheme& scheme);

// Human-readable table of fillers, roles and codes for cross-checking.
std::string scheme_manifest(const Scheme& scheme);

}  // namespace mg
