#include "lcs/io.hpp"

#include <fstream>

#include <json.hpp>

namespace lcs {

namespace {

using nlohmann::json;

json triangulation_to_json(const MarkedTriangulation& tri, const std::vector<double>& values) {
  const auto canon = tri.canonical();
  json out;
  out["version"] = 1;
  out["genus"] = tri.genus();
  out["n"] = canon.n;
  json faces = json::array(), corners = json::array();
  for (size_t f = 0; f < canon.face_vertices.size(); ++f) {
    faces.push_back({3 * f, 3 * f + 1, 3 * f + 2});
    for (int s = 0; s < 3; ++s) corners.push_back(canon.face_vertices[f][s]);
  }
  out["faces"] = faces;
  out["vertex_of_corner"] = corners;
  json gluing = json::array();
  for (const auto& row : canon.gluing) gluing.push_back({row[0], row[1], row[2], row[3]});
  out["gluing"] = gluing;
  json vals = json::object();
  for (size_t r = 0; r < canon.edge_of_row.size(); ++r)
    vals[std::to_string(r)] = values[canon.edge_of_row[r]];
  out["values"] = vals;
  return out;
}

} // namespace

std::string serialize_surface(const SurfaceVariant& m) {
  json out;
  if (std::holds_alternative<ConeMetric>(m)) {
    const auto& c = std::get<ConeMetric>(m);
    out = triangulation_to_json(c.tri, c.length);
    out["curvature"] = geometry_sign(c.K);
  } else {
    const auto& d = std::get<DecoratedMetric>(m);
    out = triangulation_to_json(d.tri, d.lambda);
    out["curvature"] = "decorated";
  }
  return out.dump(2) + "\n";
}

SurfaceVariant parse_surface(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::bad_file, std::string("not valid JSON: ") + e.what());
  }
  try {
    require(in.value("version", 0) == 1, errc::bad_file, "unsupported version");
    const int n = in.at("n").get<int>();
    const auto faces = in.at("faces").get<std::vector<std::array<int, 3>>>();
    const auto corners = in.at("vertex_of_corner").get<std::vector<int>>();
    const auto gluing = in.at("gluing").get<std::vector<std::array<int, 4>>>();
    require(corners.size() == 3 * faces.size(), errc::bad_file,
            "vertex_of_corner must list all corners");
    std::vector<std::array<int, 3>> face_vertices(faces.size());
    for (size_t f = 0; f < faces.size(); ++f)
      for (int s = 0; s < 3; ++s) {
        const int c = faces[f][s];
        require(c >= 0 && c < static_cast<int>(corners.size()), errc::bad_file,
                "corner id out of range");
        face_vertices[f][s] = corners[c];
      }
    MarkedTriangulation tri(n, face_vertices, gluing);
    require(!in.contains("genus") || in.at("genus").get<int>() == tri.genus(), errc::bad_file,
            "stored genus disagrees with the gluing");
    // File edge id = row index as listed; map through the row's first halfedge.
    std::vector<double> values(tri.n_edges(), -1.0);
    const auto& vals = in.at("values");
    require(vals.size() == gluing.size(), errc::bad_file, "one value per edge required");
    for (size_t r = 0; r < gluing.size(); ++r) {
      const int e = tri.edge_of(3 * gluing[r][0] + gluing[r][1]);
      values[e] = vals.at(std::to_string(r)).get<double>();
    }
    const auto& curv = in.at("curvature");
    if (curv.is_string()) {
      require(curv.get<std::string>() == "decorated", errc::bad_file, "unknown curvature tag");
      DecoratedMetric d{std::move(tri), std::move(values)};
      validate(d);
      return d;
    }
    ConeMetric c{std::move(tri), geometry_from_int(curv.get<int>()), std::move(values)};
    validate(c);
    return c;
  } catch (const json::exception& e) {
    fail(errc::bad_file, std::string("malformed surface file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == errc::bad_file) throw;
    fail(errc::bad_file, std::string("invalid surface: ") + e.what());
  }
}

void write_surface(const std::string& path, const SurfaceVariant& m) {
  std::ofstream out(path);
  require(out.good(), errc::bad_file, "cannot open for writing: " + path);
  out << serialize_surface(m);
  require(out.good(), errc::bad_file, "write failed: " + path);
}

SurfaceVariant read_surface(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_file, "cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_surface(text);
}

} // namespace lcs
