#pragma once

#include <functional>

#include <Eigen/Dense>

#include "tvac/geometry.hpp"

namespace tvac {

/// Discrete nonlocal surface operator. Entries K(i,j) = j(x_i, x_j) * w_j so
/// that applying K to a nodal field realizes the mass-lumped trapezoidal
/// quadrature of the kernel integral. Immutable after assembly.
struct KernelMatrix {
  Eigen::MatrixXd K;
  Eigen::VectorXd w;        // nodal quadrature weights, sum = |Gamma_C|
  double kernel_sup = 0.0;  // max of the kernel over node pairs

  int size() const { return static_cast<int>(w.size()); }
};

/// Samples the kernel at all node pairs. Throws if the kernel returns a
/// negative, non-finite, or asymmetric value at some pair.
KernelMatrix assemble_kernel(const std::function<double(double, double)>& kernel,
                             const SurfaceMesh& surface);

/// Nodal integral operator: (out)_i = sum_j K(i,j) field_j.
Eigen::VectorXd apply_J(const KernelMatrix& km, const Eigen::VectorXd& field);

/// The symmetric thermal-gap quadratic form
///   sum_{i,j} w_i K(i,j) chi_i chi_j (theta_i - theta_s_j)^2  >= 0.
/// chi must be nonnegative nodewise; pass the positive part otherwise.
double gap_form(const KernelMatrix& km, const Eigen::VectorXd& chi,
                const Eigen::VectorXd& theta_trace, const Eigen::VectorXd& theta_s);

}  // namespace tvac
