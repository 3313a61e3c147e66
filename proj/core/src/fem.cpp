#include "tvac/fem.hpp"

#include <stdexcept>

#include "tvac/constitutive.hpp"

namespace tvac {

std::vector<TriGeom> tri_geometry(const BulkMesh& mesh) {
  std::vector<TriGeom> out(mesh.num_tris());
  for (int t = 0; t < mesh.num_tris(); ++t) {
    TriGeom& g = out[t];
    g.v = mesh.tris[t];
    const Eigen::Vector2d p0 = mesh.nodes[g.v[0]];
    const Eigen::Vector2d p1 = mesh.nodes[g.v[1]];
    const Eigen::Vector2d p2 = mesh.nodes[g.v[2]];
    const double det = (p1.x() - p0.x()) * (p2.y() - p0.y()) -
                       (p2.x() - p0.x()) * (p1.y() - p0.y());
    g.area = 0.5 * det;
    if (!(g.area > 0.0)) throw std::runtime_error("tri_geometry: nonpositive area");
    // grad of barycentric coordinates
    g.grad.col(0) = Eigen::Vector2d(p1.y() - p2.y(), p2.x() - p1.x()) / det;
    g.grad.col(1) = Eigen::Vector2d(p2.y() - p0.y(), p0.x() - p2.x()) / det;
    g.grad.col(2) = Eigen::Vector2d(p0.y() - p1.y(), p1.x() - p0.x()) / det;
  }
  return out;
}

Eigen::VectorXd lumped_mass(const BulkMesh& mesh) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(mesh.num_nodes());
  for (int t = 0; t < mesh.num_tris(); ++t) {
    const double a3 = mesh.tri_area(t) / 3.0;
    for (int k = 0; k < 3; ++k) m[mesh.tris[t][k]] += a3;
  }
  return m;
}

Eigen::SparseMatrix<double> scalar_mass(const BulkMesh& mesh) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(9u * mesh.num_tris());
  for (int t = 0; t < mesh.num_tris(); ++t) {
    const double a = mesh.tri_area(t);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trip.emplace_back(mesh.tris[t][i], mesh.tris[t][j], a / 12.0 * (i == j ? 2.0 : 1.0));
  }
  Eigen::SparseMatrix<double> M(mesh.num_nodes(), mesh.num_nodes());
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

Eigen::SparseMatrix<double> scalar_stiffness(const BulkMesh& mesh) {
  const auto geo = tri_geometry(mesh);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(9u * geo.size());
  for (const auto& g : geo)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trip.emplace_back(g.v[i], g.v[j], g.area * g.grad.col(i).dot(g.grad.col(j)));
  Eigen::SparseMatrix<double> K(mesh.num_nodes(), mesh.num_nodes());
  K.setFromTriplets(trip.begin(), trip.end());
  return K;
}

Eigen::Matrix2d strain(const TriGeom& g, const Eigen::VectorXd& u) {
  Eigen::Matrix2d grad_u = Eigen::Matrix2d::Zero();
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector2d uk(u[2 * g.v[k]], u[2 * g.v[k] + 1]);
    grad_u += uk * g.grad.col(k).transpose();
  }
  return 0.5 * (grad_u + grad_u.transpose());
}

double divergence(const TriGeom& g, const Eigen::VectorXd& u) {
  double d = 0.0;
  for (int k = 0; k < 3; ++k) {
    d += u[2 * g.v[k]] * g.grad(0, k);
    d += u[2 * g.v[k] + 1] * g.grad(1, k);
  }
  return d;
}

Eigen::SparseMatrix<double> elastic_matrix(const BulkMesh& mesh, const Tensor4& C) {
  const auto geo = tri_geometry(mesh);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(36u * geo.size());
  for (const auto& g : geo) {
    // strain of basis dof (k,d): sym(e_d * grad_k^T)
    std::array<Eigen::Matrix2d, 6> eps;
    for (int k = 0; k < 3; ++k)
      for (int d = 0; d < 2; ++d) {
        Eigen::Matrix2d gm = Eigen::Matrix2d::Zero();
        gm.row(d) = g.grad.col(k).transpose();
        eps[2 * k + d] = 0.5 * (gm + gm.transpose());
      }
    std::array<Eigen::Matrix2d, 6> sig;
    for (int a = 0; a < 6; ++a) sig[a] = C.contract(eps[a]);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        const double val = g.area * (sig[a].array() * eps[b].array()).sum();
        trip.emplace_back(2 * g.v[a / 2] + a % 2, 2 * g.v[b / 2] + b % 2, val);
      }
  }
  Eigen::SparseMatrix<double> K(2 * mesh.num_nodes(), 2 * mesh.num_nodes());
  K.setFromTriplets(trip.begin(), trip.end());
  return K;
}

Eigen::SparseMatrix<double> vector_h1_gram(const BulkMesh& mesh) {
  const auto M = scalar_mass(mesh);
  const auto K = scalar_stiffness(mesh);
  std::vector<Eigen::Triplet<double>> trip;
  const Eigen::SparseMatrix<double> S = M + K;
  for (int k = 0; k < S.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(S, k); it; ++it)
      for (int d = 0; d < 2; ++d)
        trip.emplace_back(2 * it.row() + d, 2 * it.col() + d, it.value());
  Eigen::SparseMatrix<double> G(2 * mesh.num_nodes(), 2 * mesh.num_nodes());
  G.setFromTriplets(trip.begin(), trip.end());
  return G;
}

Eigen::MatrixXd surface_stiffness(const SurfaceMesh& surf) {
  const int n = surf.num_nodes();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e + 1 < n; ++e) {
    const double k = 1.0 / surf.element_length[e];
    A(e, e) += k;
    A(e + 1, e + 1) += k;
    A(e, e + 1) -= k;
    A(e + 1, e) -= k;
  }
  return A;
}

Eigen::MatrixXd surface_mass(const SurfaceMesh& surf) {
  const int n = surf.num_nodes();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e + 1 < n; ++e) {
    const double L = surf.element_length[e];
    M(e, e) += L / 3.0;
    M(e + 1, e + 1) += L / 3.0;
    M(e, e + 1) += L / 6.0;
    M(e + 1, e) += L / 6.0;
  }
  return M;
}

}  // namespace tvac
