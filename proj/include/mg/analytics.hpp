#pragma once

#include <string>
#include <vector>

#include "mg/harmony.hpp"

namespace mg {

// Row-major trajectory matrix: one row per state, one column per embedding
// dimension.
struct TraceMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

// Densified state vectors of a successful derivation in the shared space.
TraceMatrix build_trace_matrix(const DerivationTrace& trace, const Scheme& scheme);

// Per-column standardization: mean 0 and population variance 1; zero-variance
// columns become all-zero (dimension count preserved).
TraceMatrix ztransform(const TraceMatrix& M);

struct PcaResult {
  std::size_t k = 0, dims = 0;
  std::vector<double> eigenvalues;   // descending
  std::vector<double> components;    // k x dims, row-major, unit loadings
  std::vector<double> projections;   // rows x k
};

// Top-k principal directions via the T x T Gram matrix (T << d).  Sign
// convention: the largest-magnitude loading of each component is positive.
PcaResult pca(const TraceMatrix& M, std::size_t k);

// `step,pc1,pc2` CSV plus a numbered scatter-with-path SVG; writes
// <path>.csv and <path>.svg, deterministic output.
void export_phase_portrait(const PcaResult& p, const std::string& path_stem);

std::string phase_portrait_csv(const PcaResult& p);
std::string phase_portrait_svg(const PcaResult& p);
std::string matrix_csv(const TraceMatrix& M);

}  // namespace mg
