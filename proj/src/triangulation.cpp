#include "lcs/triangulation.hpp"

#include <algorithm>
#include <numeric>

namespace lcs {

MarkedTriangulation::MarkedTriangulation(int n_vertices,
                                         const std::vector<std::array<int, 3>>& face_vertices,
                                         const std::vector<std::array<int, 4>>& gluing)
    : n_vertices_(n_vertices) {
  const int nf = static_cast<int>(face_vertices.size());
  require(n_vertices >= 1, errc::invalid_surface, "need at least one marked vertex");
  require(nf >= 1 && nf % 2 == 0, errc::invalid_surface, "face count must be even and positive");
  require(static_cast<int>(gluing.size()) * 2 == 3 * nf, errc::invalid_surface,
          "gluing must pair all face sides");

  const int nh = 3 * nf;
  next_.resize(nh);
  opp_.assign(nh, -1);
  to_.resize(nh);
  face_.resize(nh);
  edge_.assign(nh, -1);
  fhalf_.resize(nf);
  for (int f = 0; f < nf; ++f) {
    fhalf_[f] = 3 * f;
    for (int s = 0; s < 3; ++s) {
      const int h = 3 * f + s;
      next_[h] = 3 * f + (s + 1) % 3;
      face_[h] = f;
      const int v = face_vertices[f][(s + 1) % 3];
      require(v >= 0 && v < n_vertices, errc::invalid_surface, "corner vertex out of range");
      to_[h] = v;
    }
  }

  // Pair sides. Each (face, side) must appear in exactly one gluing row.
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(gluing.size());
  for (const auto& row : gluing) {
    const auto [fa, sa, fb, sb] = std::array{row[0], row[1], row[2], row[3]};
    require(fa >= 0 && fa < nf && fb >= 0 && fb < nf && sa >= 0 && sa < 3 && sb >= 0 && sb < 3,
            errc::invalid_surface, "gluing row out of range");
    const int ha = 3 * fa + sa, hb = 3 * fb + sb;
    require(ha != hb, errc::invalid_surface, "side glued to itself");
    require(opp_[ha] == -1 && opp_[hb] == -1, errc::invalid_surface, "side glued twice");
    require(fa != fb, errc::invalid_surface,
            "both sides of an edge on one face (self-folded input)");
    opp_[ha] = hb;
    opp_[hb] = ha;
    // Heads must meet tails across the gluing.
    require(vertex_from(ha) == vertex_to(hb) && vertex_to(ha) == vertex_from(hb),
            errc::invalid_surface, "glued sides disagree on endpoint vertices");
    pairs.push_back({std::min(ha, hb), std::max(ha, hb)});
  }
  for (int h = 0; h < nh; ++h)
    require(opp_[h] != -1, errc::invalid_surface, "unglued face side");

  std::sort(pairs.begin(), pairs.end());
  ehalf_ = pairs;
  for (int e = 0; e < n_edges(); ++e) {
    edge_[ehalf_[e][0]] = e;
    edge_[ehalf_[e][1]] = e;
  }

  vhalf_.assign(n_vertices, -1);
  for (int h = nh - 1; h >= 0; --h) vhalf_[vertex_from(h)] = h;
  for (int v = 0; v < n_vertices; ++v)
    require(vhalf_[v] != -1, errc::invalid_surface, "marked vertex with no corner");

  // Connectivity over face adjacency.
  std::vector<char> seen(nf, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int s = 0; s < 3; ++s) {
      const int g = face_[opp_[3 * f + s]];
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  require(reached == nf, errc::invalid_surface, "surface is not connected");
  require(2 - 2 * genus() - n_vertices < 0, errc::invalid_surface,
          "need 2 - 2g - n < 0 (no spheres with fewer than three marked points)");
}

int MarkedTriangulation::genus() const {
  const int chi = n_vertices_ - n_edges() + n_faces();
  return (2 - chi) / 2;
}

std::array<int, 3> MarkedTriangulation::face_halfedges(int f) const {
  const int h = fhalf_[f];
  return {h, next_[h], next_[next_[h]]};
}

FlipRecord MarkedTriangulation::flip(int e) {
  require(e >= 0 && e < n_edges(), errc::domain_error, "edge id out of range");
  const int h = ehalf_[e][0], o = ehalf_[e][1];
  require(face_[h] != face_[o], errc::flip_not_embeddable,
          "cannot flip the inner edge of a self-folded triangle");
  FlipRecord rec;
  rec.edge = e;
  rec.h = h;
  rec.hn = next_[h];
  rec.hp = next_[rec.hn];
  rec.o = o;
  rec.on = next_[o];
  rec.op = next_[rec.on];

  const int f1 = face_[h], f2 = face_[o];
  const int x = vertex_from(h), z = to_[h];
  const int y = to_[rec.hn], w = to_[rec.on];

  to_[h] = y;
  to_[o] = w;
  next_[rec.on] = h;
  next_[h] = rec.hp;
  next_[rec.hp] = rec.on;
  next_[rec.op] = rec.hn;
  next_[rec.hn] = o;
  next_[o] = rec.op;
  face_[rec.on] = f1;
  face_[rec.hn] = f2;
  fhalf_[f1] = h;
  fhalf_[f2] = o;
  vhalf_[x] = rec.on;
  vhalf_[z] = rec.hn;
  vhalf_[y] = rec.hp;
  vhalf_[w] = rec.op;
  return rec;
}

MarkedTriangulation::Canonical MarkedTriangulation::canonical() const {
  Canonical out;
  out.n = n_vertices_;
  const int nf = n_faces();
  // Each face is read from its minimal halfedge; side s is the s-th halfedge.
  std::vector<int> start(nf);
  for (int f = 0; f < nf; ++f) {
    const auto hs = face_halfedges(f);
    start[f] = std::min({hs[0], hs[1], hs[2]});
  }
  std::vector<int> side_of(n_halfedges(), -1);
  out.face_vertices.resize(nf);
  for (int f = 0; f < nf; ++f) {
    int h = start[f];
    for (int s = 0; s < 3; ++s) {
      side_of[h] = s;
      out.face_vertices[f][s] = vertex_from(h);
      h = next_[h];
    }
  }
  std::vector<std::pair<std::array<int, 4>, int>> rows;
  rows.reserve(n_edges());
  for (int e = 0; e < n_edges(); ++e) {
    const int ha = ehalf_[e][0], hb = ehalf_[e][1];
    std::array<int, 4> row = {face_[ha], side_of[ha], face_[hb], side_of[hb]};
    if (std::tie(row[2], row[3]) < std::tie(row[0], row[1]))
      row = {row[2], row[3], row[0], row[1]};
    rows.push_back({row, e});
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [row, e] : rows) {
    out.gluing.push_back(row);
    out.edge_of_row.push_back(e);
  }
  return out;
}

bool MarkedTriangulation::same_combinatorics(const MarkedTriangulation& other) const {
  const Canonical a = canonical(), b = other.canonical();
  return a.n == b.n && a.face_vertices == b.face_vertices && a.gluing == b.gluing;
}

MarkedTriangulation torus_one_vertex() {
  return MarkedTriangulation(1, {{0, 0, 0}, {0, 0, 0}},
                             {{0, 0, 1, 1}, {0, 1, 1, 2}, {0, 2, 1, 0}});
}

MarkedTriangulation sphere_tetrahedron() {
  return MarkedTriangulation(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}},
                             {{0, 0, 2, 2},
                              {0, 1, 3, 2},
                              {0, 2, 1, 0},
                              {1, 1, 3, 1},
                              {1, 2, 2, 0},
                              {2, 1, 3, 0}});
}

MarkedTriangulation genus2_one_vertex() {
  std::vector<std::array<int, 3>> faces(6, {0, 0, 0});
  std::vector<std::array<int, 4>> gluing;
  // Octagon fan, boundary word a b a^-1 b^-1 c d c^-1 d^-1.
  gluing.push_back({0, 0, 1, 1});  // side 0 ~ side 2
  gluing.push_back({0, 1, 2, 1});  // side 1 ~ side 3
  gluing.push_back({3, 1, 5, 1});  // side 4 ~ side 6
  gluing.push_back({4, 1, 5, 2});  // side 5 ~ side 7
  for (int i = 1; i <= 5; ++i) gluing.push_back({i - 1, 2, i, 0});
  return MarkedTriangulation(1, faces, gluing);
}

MarkedTriangulation doubled_polygon_complex(int n) {
  require(n >= 3, errc::invalid_polygon, "doubled polygon needs at least 3 vertices");
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i + 2 < n; ++i) faces.push_back({0, i + 1, i + 2});
  for (int i = 0; i + 2 < n; ++i) faces.push_back({0, i + 2, i + 1});
  const int nf = n - 2;  // per side
  std::vector<std::array<int, 4>> gluing;
  gluing.push_back({0, 0, nf, 2});                        // edge (0,1)
  gluing.push_back({nf - 1, 2, 2 * nf - 1, 0});           // edge (n-1,0)
  for (int i = 0; i < nf; ++i) gluing.push_back({i, 1, nf + i, 1});  // rim (i+1,i+2)
  for (int i = 1; i < nf; ++i) {
    gluing.push_back({i - 1, 2, i, 0});                   // front diagonal (0,i+1)
    gluing.push_back({nf + i, 2, nf + i - 1, 0});         // back diagonal
  }
  return MarkedTriangulation(n, faces, gluing);
}

} // namespace lcs
