#include "tvac/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace tvac {

KernelMatrix assemble_kernel(const std::function<double(double, double)>& kernel,
                             const SurfaceMesh& surface) {
  const int n = surface.num_nodes();
  KernelMatrix km;
  km.w = surface.weights;
  km.K.resize(n, n);
  km.kernel_sup = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double xi = surface.positions[i], xj = surface.positions[j];
      const double v = kernel(xi, xj);
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument("assemble_kernel: kernel must be finite and nonnegative");
      const double vt = kernel(xj, xi);
      if (std::abs(v - vt) > 1e-12 * (1.0 + std::abs(v)))
        throw std::invalid_argument("assemble_kernel: kernel must be symmetric");
      km.K(i, j) = v * km.w[j];
      km.K(j, i) = v * km.w[i];
      km.kernel_sup = std::max(km.kernel_sup, v);
    }
  }
  return km;
}

Eigen::VectorXd apply_J(const KernelMatrix& km, const Eigen::VectorXd& field) {
  if (field.size() != km.size())
    throw std::invalid_argument("apply_J: field size mismatch");
  return km.K * field;
}

double gap_form(const KernelMatrix& km, const Eigen::VectorXd& chi,
                const Eigen::VectorXd& theta_trace, const Eigen::VectorXd& theta_s) {
  const int n = km.size();
  if (chi.size() != n || theta_trace.size() != n || theta_s.size() != n)
    throw std::invalid_argument("gap_form: field size mismatch");
  if ((chi.array() < 0.0).any())
    throw std::invalid_argument("gap_form: chi must be nonnegative (pass the positive part)");
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wi_chi = km.w[i] * chi[i];
    if (wi_chi == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double d = theta_trace[i] - theta_s[j];
      acc += wi_chi * km.K(i, j) * chi[j] * d * d;
    }
  }
  return acc;
}

}  // namespace tvac
