#ifndef LCS_TRIANGULATION_HPP
#define LCS_TRIANGULATION_HPP

#include <array>
#include <vector>

#include "lcs/error.hpp"

namespace lcs {

// Pre-flip halfedges of the two faces at a flipped edge, recorded so that
// dual-edge loops can be rerouted through the flip afterwards.
struct FlipRecord {
  int edge = -1;
  int h = -1, hn = -1, hp = -1;  // face 1: h x->z, hn z->y, hp y->x
  int o = -1, on = -1, op = -1;  // face 2: o z->x, on x->w, op w->z
};

// Oriented closed triangulated surface with n labeled marked vertices.
// Halfedges are stable under flips; so are edge ids (opp never changes).
class MarkedTriangulation {
public:
  MarkedTriangulation() = default;
  MarkedTriangulation(int n_vertices, const std::vector<std::array<int, 3>>& face_vertices,
                      const std::vector<std::array<int, 4>>& gluing);

  int n_vertices() const { return n_vertices_; }
  int n_faces() const { return static_cast<int>(fhalf_.size()); }
  int n_edges() const { return static_cast<int>(ehalf_.size()); }
  int n_halfedges() const { return static_cast<int>(next_.size()); }
  int genus() const;

  int next(int h) const { return next_[h]; }
  int prev(int h) const { return next_[next_[h]]; }
  int opp(int h) const { return opp_[h]; }
  int face_of(int h) const { return face_[h]; }
  int vertex_to(int h) const { return to_[h]; }
  int vertex_from(int h) const { return to_[prev(h)]; }
  int edge_of(int h) const { return edge_[h]; }
  int half(int e, int i) const { return ehalf_[e][i]; }
  int face_halfedge(int f) const { return fhalf_[f]; }
  int vertex_halfedge(int v) const { return vhalf_[v]; }
  // Vertex opposite the edge of h inside face_of(h).
  int apex(int h) const { return to_[next_[h]]; }

  std::array<int, 3> face_halfedges(int f) const;

  // Flips the diagonal of the quad at e. Throws flip_not_embeddable when both
  // sides of e lie on one face (self-folded configuration).
  FlipRecord flip(int e);

  struct Canonical {
    int n = 0;
    std::vector<std::array<int, 3>> face_vertices;
    std::vector<std::array<int, 4>> gluing;        // rows sorted, (fa,sa) < (fb,sb)
    std::vector<int> edge_of_row;                  // internal edge id per gluing row
    bool operator==(const Canonical&) const = default;
  };
  Canonical canonical() const;
  bool same_combinatorics(const MarkedTriangulation& other) const;

private:
  int n_vertices_ = 0;
  std::vector<int> next_, opp_, to_, face_, edge_;
  std::vector<int> fhalf_, vhalf_;
  std::vector<std::array<int, 2>> ehalf_;
};

// Standard complexes used across tests and documentation.
MarkedTriangulation torus_one_vertex();
MarkedTriangulation sphere_tetrahedron();
MarkedTriangulation genus2_one_vertex();
// Mirror double of a fan-triangulated n-gon (front faces (0,i,i+1), back mirrored).
MarkedTriangulation doubled_polygon_complex(int n);

} // namespace lcs

#endif
