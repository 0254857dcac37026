#include "mg/analytics.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <Eigen/Dense>

namespace mg {

TraceMatrix build_trace_matrix(const DerivationTrace& trace, const Scheme& scheme) {
  if (trace.status != DerivationTrace::Status::Success) throw StuckTraceError();
  const std::size_t target = embedding_factor_target(trace.states, scheme);
  TraceMatrix M;
  M.rows = trace.states.size();
  for (std::size_t r = 0; r < trace.states.size(); ++r) {
    DenseVector v = densify(represent_state(trace.states[r], scheme), scheme, target);
    if (r == 0) {
      M.cols = v.size();
      M.data.assign(M.rows * M.cols, 0.0);
    }
    std::copy(v.begin(), v.end(), M.data.begin() + static_cast<std::ptrdiff_t>(r * M.cols));
  }
  return M;
}

TraceMatrix ztransform(const TraceMatrix& M) {
  TraceMatrix Z = M;
  for (std::size_t c = 0; c < M.cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < M.rows; ++r) mean += M.at(r, c);
    mean /= static_cast<double>(M.rows);
    double var = 0.0;
    for (std::size_t r = 0; r < M.rows; ++r) {
      double d = M.at(r, c) - mean;
      var += d * d;
    }
    var /= static_cast<double>(M.rows);  // population convention
    if (var > 0.0) {
      double sd = std::sqrt(var);
      for (std::size_t r = 0; r < M.rows; ++r) Z.at(r, c) = (M.at(r, c) - mean) / sd;
    } else {
      for (std::size_t r = 0; r < M.rows; ++r) Z.at(r, c) = 0.0;
    }
  }
  return Z;
}

PcaResult pca(const TraceMatrix& M, std::size_t k) {
  const std::size_t T = M.rows, d = M.cols;
  if (k > std::min(T - 1, d))
    throw Error("pca: k exceeds min(T-1, d)");

  Eigen::MatrixXd X(T, d);
  for (std::size_t r = 0; r < T; ++r)
    for (std::size_t c = 0; c < d; ++c) X(r, c) = M.at(r, c);
  Eigen::RowVectorXd mean = X.colwise().mean();
  Eigen::MatrixXd Xc = X.rowwise() - mean;

  if (Xc.squaredNorm() == 0.0) throw DegenerateInputError();

  Eigen::MatrixXd G = Xc * Xc.transpose();  // T x T Gram matrix
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(G);
  if (solver.info() != Eigen::Success) throw Error("pca: eigendecomposition failed");

  PcaResult out;
  out.k = k;
  out.dims = d;
  out.eigenvalues.resize(k);
  out.components.assign(k * d, 0.0);
  out.projections.assign(T * k, 0.0);

  // eigenvalues ascend in Eigen; take the top k from the back
  for (std::size_t j = 0; j < k; ++j) {
    const Eigen::Index idx = static_cast<Eigen::Index>(T - 1 - j);
    double lambda = std::max(solver.eigenvalues()(idx), 0.0);
    out.eigenvalues[j] = lambda;
    if (lambda <= 0.0) continue;
    Eigen::VectorXd u = solver.eigenvectors().col(idx);
    Eigen::VectorXd comp = Xc.transpose() * u / std::sqrt(lambda);  // unit d-vector

    // deterministic sign: largest-magnitude loading positive
    Eigen::Index imax = 0;
    comp.cwiseAbs().maxCoeff(&imax);
    double sign = comp(imax) < 0.0 ? -1.0 : 1.0;
    comp *= sign;
    Eigen::VectorXd proj = u * std::sqrt(lambda) * sign;

    for (std::size_t c = 0; c < d; ++c) out.components[j * d + c] = comp(static_cast<Eigen::Index>(c));
    for (std::size_t r = 0; r < T; ++r) out.projections[r * k + j] = proj(static_cast<Eigen::Index>(r));
  }
  return out;
}

std::string phase_portrait_csv(const PcaResult& p) {
  if (p.k < 2) throw Error("phase portrait needs two components");
  std::ostringstream out;
  out << "step,pc1,pc2\n";
  out << std::setprecision(12);
  const std::size_t T = p.projections.size() / p.k;
  for (std::size_t r = 0; r < T; ++r)
    out << (r + 1) << "," << p.projections[r * p.k] << "," << p.projections[r * p.k + 1] << "\n";
  return out.str();
}

std::string phase_portrait_svg(const PcaResult& p) {
  if (p.k < 2) throw Error("phase portrait needs two components");
  const std::size_t T = p.projections.size() / p.k;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (std::size_t r = 0; r < T; ++r) {
    double x = p.projections[r * p.k], y = p.projections[r * p.k + 1];
    xmin = std::min(xmin, x); xmax = std::max(xmax, x);
    ymin = std::min(ymin, y); ymax = std::max(ymax, y);
  }
  const double W = 480, H = 480, pad = 40;
  double xspan = xmax - xmin, yspan = ymax - ymin;
  if (xspan == 0) xspan = 1;
  if (yspan == 0) yspan = 1;
  auto sx = [&](double x) { return pad + (x - xmin) / xspan * (W - 2 * pad); };
  auto sy = [&](double y) { return H - pad - (y - ymin) / yspan * (H - 2 * pad); };

  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t r = 0; r < T; ++r)
    out << sx(p.projections[r * p.k]) << "," << sy(p.projections[r * p.k + 1]) << " ";
  out << "\"/>\n";
  for (std::size_t r = 0; r < T; ++r) {
    double x = sx(p.projections[r * p.k]), y = sy(p.projections[r * p.k + 1]);
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"firebrick\"/>\n";
    out << "<text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"12\">" << (r + 1)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void export_phase_portrait(const PcaResult& p, const std::string& path_stem) {
  std::ofstream csv(path_stem + ".csv");
  if (!csv) throw IOError("cannot write " + path_stem + ".csv");
  csv << phase_portrait_csv(p);
  std::ofstream svg(path_stem + ".svg");
  if (!svg) throw IOError("cannot write " + path_stem + ".svg");
  svg << phase_portrait_svg(p);
}

std::string matrix_csv(const TraceMatrix& M) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t r = 0; r < M.rows; ++r) {
    for (std::size_t c = 0; c < M.cols; ++c) {
      if (c) out << ",";
      out << M.at(r, c);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace mg
