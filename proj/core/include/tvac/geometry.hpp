#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace tvac {

enum class BoundaryTag : std::uint8_t { Dirichlet, Neumann, Contact };

enum class Side : std::uint8_t { Bottom, Right, Top, Left };

/// Tag assignment for the four sides of the rectangle. Exactly one side must
/// be Contact and at least one side Dirichlet.
struct BoundarySpec {
  BoundaryTag bottom = BoundaryTag::Contact;
  BoundaryTag right = BoundaryTag::Neumann;
  BoundaryTag top = BoundaryTag::Neumann;
  BoundaryTag left = BoundaryTag::Dirichlet;

  BoundaryTag side(Side s) const;
};

struct BoundaryEdge {
  int a = -1, b = -1;            // node indices, ordered along the boundary
  BoundaryTag tag = BoundaryTag::Neumann;
  Eigen::Vector2d normal;        // outward unit normal
};

/// Conforming P1 triangulation of a rectangle. Immutable after construction.
struct BulkMesh {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<std::array<int, 3>> tris;   // counterclockwise, positive area
  std::vector<BoundaryEdge> boundary_edges;
  std::vector<char> dirichlet_node;       // 1 if node lies on a Dirichlet edge

  double width = 0.0, height = 0.0;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_tris() const { return static_cast<int>(tris.size()); }
  double tri_area(int t) const;
  double area() const;
  bool is_dirichlet(int node) const { return dirichlet_node[node] != 0; }
};

/// The contact side of the bulk mesh as an ordered 1D mesh. Node i of the
/// surface is bulk node bulk_node[i]; positions are arclength coordinates
/// along the side, strictly increasing.
struct SurfaceMesh {
  std::vector<double> positions;
  std::vector<double> element_length;     // size n-1
  std::vector<int> bulk_node;
  Eigen::Vector2d normal;                 // outward normal of the contact side
  Eigen::VectorXd weights;                // trapezoidal nodal weights, sum = |Gamma_C|

  int num_nodes() const { return static_cast<int>(positions.size()); }
  double length() const { return weights.sum(); }
};

struct Meshes {
  BulkMesh bulk;
  SurfaceMesh surface;
};

/// Structured triangulation of [0,width] x [0,height] with nx*ny cells, each
/// split into two triangles, and the surface mesh extracted from the Contact
/// side. Throws std::invalid_argument on zero dimensions or when the spec
/// misses a Dirichlet or Contact side.
Meshes build_rect_mesh(int nx, int ny, double width, double height,
                       const BoundarySpec& spec = {});

/// Restriction of a bulk nodal field to the contact surface.
Eigen::VectorXd trace_scalar(const Meshes& m, const Eigen::VectorXd& bulk_field);

/// Restriction of a bulk vector field (2 dofs per node, interleaved) to the
/// surface; result has 2 dofs per surface node.
Eigen::VectorXd trace_vector(const Meshes& m, const Eigen::VectorXd& bulk_field);

/// Plain-text dump of nodes/triangles/boundary for debugging.
void dump_mesh(std::ostream& os, const BulkMesh& mesh);

}  // namespace tvac
