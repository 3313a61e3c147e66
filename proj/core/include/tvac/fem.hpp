#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "tvac/geometry.hpp"

namespace tvac {

struct Tensor4;  // constitutive.hpp

/// Per-triangle geometry for P1 assembly: area and the constant gradients of
/// the three hat functions.
struct TriGeom {
  std::array<int, 3> v;
  double area = 0.0;
  Eigen::Matrix<double, 2, 3> grad;  // column k = grad of hat at vertex k
};

std::vector<TriGeom> tri_geometry(const BulkMesh& mesh);

/// Lumped mass vector, entry i equals the integral of hat i.
Eigen::VectorXd lumped_mass(const BulkMesh& mesh);

Eigen::SparseMatrix<double> scalar_mass(const BulkMesh& mesh);
Eigen::SparseMatrix<double> scalar_stiffness(const BulkMesh& mesh);

/// Elastic/viscous bilinear form matrix on interleaved vector dofs:
/// (u,w) -> sum_T area * eps(u) : C : eps(w).
Eigen::SparseMatrix<double> elastic_matrix(const BulkMesh& mesh, const Tensor4& C);

/// H1 Gram matrix for interleaved vector fields: integral of u.w + grad u : grad w.
Eigen::SparseMatrix<double> vector_h1_gram(const BulkMesh& mesh);

/// Symmetric strain of an interleaved vector field on one triangle.
Eigen::Matrix2d strain(const TriGeom& g, const Eigen::VectorXd& u);

/// Divergence of an interleaved vector field on one triangle.
double divergence(const TriGeom& g, const Eigen::VectorXd& u);

/// 1D P1 matrices on the contact surface (dense; the surface is small).
Eigen::MatrixXd surface_stiffness(const SurfaceMesh& surf);
Eigen::MatrixXd surface_mass(const SurfaceMesh& surf);

}  // namespace tvac
