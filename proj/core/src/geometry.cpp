#include "tvac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace tvac {

BoundaryTag BoundarySpec::side(Side s) const {
  switch (s) {
    case Side::Bottom: return bottom;
    case Side::Right: return right;
    case Side::Top: return top;
    case Side::Left: return left;
  }
  throw std::logic_error("bad side");
}

double BulkMesh::tri_area(int t) const {
  const auto& tr = tris[t];
  const Eigen::Vector2d e1 = nodes[tr[1]] - nodes[tr[0]];
  const Eigen::Vector2d e2 = nodes[tr[2]] - nodes[tr[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

double BulkMesh::area() const {
  double a = 0.0;
  for (int t = 0; t < num_tris(); ++t) a += tri_area(t);
  return a;
}

namespace {

Eigen::Vector2d outward_normal(Side s) {
  switch (s) {
    case Side::Bottom: return {0.0, -1.0};
    case Side::Right: return {1.0, 0.0};
    case Side::Top: return {0.0, 1.0};
    case Side::Left: return {-1.0, 0.0};
  }
  throw std::logic_error("bad side");
}

void check_conforming(const BulkMesh& mesh) {
  // Every interior edge must be shared by exactly two triangles, boundary
  // edges by exactly one.
  std::map<std::pair<int, int>, int> count;
  for (const auto& tr : mesh.tris) {
    for (int e = 0; e < 3; ++e) {
      int a = tr[e], b = tr[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      ++count[{a, b}];
    }
  }
  for (const auto& [edge, c] : count) {
    if (c > 2) throw std::runtime_error("mesh not conforming: edge shared by >2 triangles");
  }
  for (const auto& be : mesh.boundary_edges) {
    int a = be.a, b = be.b;
    if (a > b) std::swap(a, b);
    auto it = count.find({a, b});
    if (it == count.end() || it->second != 1)
      throw std::runtime_error("boundary edge not matching triangulation");
  }
}

}  // namespace

Meshes build_rect_mesh(int nx, int ny, double width, double height,
                       const BoundarySpec& spec) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("build_rect_mesh: nx, ny must be >= 1");
  if (!(width > 0.0) || !(height > 0.0))
    throw std::invalid_argument("build_rect_mesh: width, height must be positive");

  int n_contact = 0, n_dirichlet = 0;
  for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left}) {
    if (spec.side(s) == BoundaryTag::Contact) ++n_contact;
    if (spec.side(s) == BoundaryTag::Dirichlet) ++n_dirichlet;
  }
  if (n_contact != 1)
    throw std::invalid_argument("build_rect_mesh: exactly one Contact side required");
  if (n_dirichlet < 1)
    throw std::invalid_argument("build_rect_mesh: at least one Dirichlet side required");

  BulkMesh mesh;
  mesh.width = width;
  mesh.height = height;

  const int npx = nx + 1, npy = ny + 1;
  mesh.nodes.reserve(static_cast<size_t>(npx) * npy);
  for (int j = 0; j < npy; ++j)
    for (int i = 0; i < npx; ++i)
      mesh.nodes.push_back({width * double(i) / nx, height * double(j) / ny});

  auto vid = [&](int i, int j) { return j * npx + i; };

  mesh.tris.reserve(2u * nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
      mesh.tris.push_back({v00, v10, v11});
      mesh.tris.push_back({v00, v11, v01});
    }
  }

  auto add_edges = [&](Side s) {
    const BoundaryTag tag = spec.side(s);
    const Eigen::Vector2d n = outward_normal(s);
    auto push = [&](int a, int b) { mesh.boundary_edges.push_back({a, b, tag, n}); };
    switch (s) {
      case Side::Bottom:
        for (int i = 0; i < nx; ++i) push(vid(i, 0), vid(i + 1, 0));
        break;
      case Side::Right:
        for (int j = 0; j < ny; ++j) push(vid(nx, j), vid(nx, j + 1));
        break;
      case Side::Top:
        for (int i = nx; i > 0; --i) push(vid(i, ny), vid(i - 1, ny));
        break;
      case Side::Left:
        for (int j = ny; j > 0; --j) push(vid(0, j), vid(0, j - 1));
        break;
    }
  };
  for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left}) add_edges(s);

  mesh.dirichlet_node.assign(mesh.nodes.size(), 0);
  for (const auto& be : mesh.boundary_edges) {
    if (be.tag == BoundaryTag::Dirichlet) {
      mesh.dirichlet_node[be.a] = 1;
      mesh.dirichlet_node[be.b] = 1;
    }
  }

  for (int t = 0; t < mesh.num_tris(); ++t)
    if (!(mesh.tri_area(t) > 0.0))
      throw std::runtime_error("build_rect_mesh: nonpositive triangle area");
  check_conforming(mesh);

  // Extract the contact surface: ordered nodes along the Contact side.
  SurfaceMesh surf;
  std::set<int> contact_nodes;
  for (const auto& be : mesh.boundary_edges) {
    if (be.tag == BoundaryTag::Contact) {
      contact_nodes.insert(be.a);
      contact_nodes.insert(be.b);
      surf.normal = be.normal;
    }
  }
  // Arclength coordinate: x along horizontal sides, y along vertical sides.
  const bool horizontal = std::abs(surf.normal.y()) > 0.5;
  std::vector<std::pair<double, int>> ordered;
  ordered.reserve(contact_nodes.size());
  for (int idx : contact_nodes) {
    const auto& p = mesh.nodes[idx];
    ordered.emplace_back(horizontal ? p.x() : p.y(), idx);
  }
  std::sort(ordered.begin(), ordered.end());

  const int ns = static_cast<int>(ordered.size());
  surf.positions.resize(ns);
  surf.bulk_node.resize(ns);
  for (int i = 0; i < ns; ++i) {
    surf.positions[i] = ordered[i].first;
    surf.bulk_node[i] = ordered[i].second;
  }
  surf.element_length.resize(ns - 1);
  surf.weights = Eigen::VectorXd::Zero(ns);
  for (int e = 0; e + 1 < ns; ++e) {
    const double L = surf.positions[e + 1] - surf.positions[e];
    if (!(L > 0.0)) throw std::runtime_error("contact surface positions not increasing");
    surf.element_length[e] = L;
    surf.weights[e] += 0.5 * L;
    surf.weights[e + 1] += 0.5 * L;
  }

  return {std::move(mesh), std::move(surf)};
}

Eigen::VectorXd trace_scalar(const Meshes& m, const Eigen::VectorXd& bulk_field) {
  if (bulk_field.size() != m.bulk.num_nodes())
    throw std::invalid_argument("trace_scalar: field size mismatch");
  const int ns = m.surface.num_nodes();
  Eigen::VectorXd out(ns);
  for (int i = 0; i < ns; ++i) out[i] = bulk_field[m.surface.bulk_node[i]];
  return out;
}

Eigen::VectorXd trace_vector(const Meshes& m, const Eigen::VectorXd& bulk_field) {
  if (bulk_field.size() != 2 * m.bulk.num_nodes())
    throw std::invalid_argument("trace_vector: field size mismatch");
  const int ns = m.surface.num_nodes();
  Eigen::VectorXd out(2 * ns);
  for (int i = 0; i < ns; ++i) {
    const int b = m.surface.bulk_node[i];
    out[2 * i] = bulk_field[2 * b];
    out[2 * i + 1] = bulk_field[2 * b + 1];
  }
  return out;
}

void dump_mesh(std::ostream& os, const BulkMesh& mesh) {
  os << "nodes " << mesh.num_nodes() << "\n";
  for (int i = 0; i < mesh.num_nodes(); ++i)
    os << i << " " << mesh.nodes[i].x() << " " << mesh.nodes[i].y() << "\n";
  os << "triangles " << mesh.num_tris() << "\n";
  for (const auto& t : mesh.tris) os << t[0] << " " << t[1] << " " << t[2] << "\n";
  os << "boundary_edges " << mesh.boundary_edges.size() << "\n";
  for (const auto& be : mesh.boundary_edges)
    os << be.a << " " << be.b << " " << static_cast<int>(be.tag) << "\n";
}

}  // namespace tvac
