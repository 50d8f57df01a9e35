#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace enrfem {

using Vec2 = Eigen::Vector2d;

/// Boundary edge with an outward unit normal (normal points out of the
/// body that owns the adjacent element).
struct Segment {
  int a = -1;          ///< first node id (element CCW order)
  int b = -1;          ///< second node id
  int elem = -1;       ///< adjacent element id
  int edge = -1;       ///< local edge index in elem (edge k = nodes k, (k+1)%3)
  int body = -1;       ///< body label of the adjacent element
  Vec2 normal{0, 0};   ///< outward unit normal
  double length = 0.0;

  Vec2 start_coords(const class Mesh& m) const;
  Vec2 end_coords(const class Mesh& m) const;
};

/// Linear triangle mesh for one body or a multi-body assembly.
/// Immutable after construction; all queries are const.
class Mesh {
 public:
  std::vector<Vec2> nodes;                     // node id = index
  std::vector<std::array<int, 3>> elements;    // CCW triangles
  std::map<std::string, std::vector<std::pair<int, int>>> boundaries;
  std::vector<int> body_id;                    // per element

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_elements() const { return static_cast<int>(elements.size()); }
  int num_bodies() const;

  double element_area(int e) const;
  double total_area() const;
  /// Characteristic size (longest edge) of element e.
  double element_size(int e) const;

  /// Local edge index (0..2) of the pair (na,nb) in element e, or -1.
  int local_edge(int e, int na, int nb) const;

  /// Validates node references, orientation, and boundary tags.
  /// Throws std::runtime_error on the first violation found.
  void validate() const;

  /// Recomputes body_id by union-find over shared element edges.
  void compute_bodies();
};

/// Structured grid of 2*nx*ny CCW triangles over an L-by-H rectangle.
/// Cells are split along the lower-left to upper-right diagonal.
/// Boundary tags "left", "right", "top", "bottom" are populated.
Mesh generate_rect_grid(const Vec2& origin, double L, double H, int nx, int ny,
                        int body = 0);

/// Appends src to dst, renumbering nodes/elements and prefixing every
/// boundary tag with `tag_prefix`. Returns the node-id offset.
int append_mesh(Mesh& dst, const Mesh& src, const std::string& tag_prefix);

/// Reads the line-oriented text format:
///   node <id> <x1> <x2>
///   tri <id> <n1> <n2> <n3>
///   bnd <tag> <nA> <nB>
///   body <elem-id> <body-id>
/// '#' starts a comment. Ids may be arbitrary; they are compacted.
Mesh load_mesh(const std::string& path);

void save_mesh(const Mesh& mesh, const std::string& path);

/// Segments of a boundary tag, in stored order, with outward normals.
std::vector<Segment> boundary_segments(const Mesh& mesh,
                                       const std::string& tag);

}  // namespace enrfem
