#include "monovex/export.hpp"

#include <array>
#include <sstream>

namespace monovex {

namespace {

using Vertex = std::array<double, 3>;

Vertex to_vertex(const Point& p) {
  Vertex v{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < p.size() && i < 3; ++i) v[i] = p[i].to_double();
  return v;
}

std::string render(const std::vector<Vertex>& vertices, const std::vector<std::vector<std::size_t>>& faces) {
  std::ostringstream out;
  out.precision(17);
  out << "OFF\n" << vertices.size() << " " << faces.size() << " 0\n";
  for (const auto& v : vertices) out << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (const auto& f : faces) {
    out << f.size();
    for (auto idx : f) out << " " << idx;
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string off_polylines(const std::vector<std::vector<Point>>& lines) {
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& line : lines) {
    const std::size_t base = vertices.size();
    for (const auto& p : line) vertices.push_back(to_vertex(p));
    for (std::size_t i = 0; i + 1 < line.size(); ++i) faces.push_back({base + i, base + i + 1});
  }
  return render(vertices, faces);
}

std::string off_segments(const std::vector<std::pair<Point, Point>>& segments) {
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& [a, b] : segments) {
    faces.push_back({vertices.size(), vertices.size() + 1});
    vertices.push_back(to_vertex(a));
    vertices.push_back(to_vertex(b));
  }
  return render(vertices, faces);
}

std::string off_boxes(const SpanComplex& complex) {
  // hexahedron faces over corners indexed by bits (x, y, z)
  static constexpr std::array<std::array<std::size_t, 4>, 6> kFaces{{
      {0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5},
  }};
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& box : complex.boxes()) {
    Vertex lo{0.0, 0.0, 0.0}, hi{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < box.ambient_dim() && i < 3; ++i) {
      lo[i] = box[i].lo().to_double();
      hi[i] = box[i].hi().to_double();
    }
    const std::size_t base = vertices.size();
    for (std::size_t c = 0; c < 8; ++c) {
      vertices.push_back({(c & 1) ? hi[0] : lo[0], (c & 2) ? hi[1] : lo[1], (c & 4) ? hi[2] : lo[2]});
    }
    for (const auto& f : kFaces) faces.push_back({base + f[0], base + f[1], base + f[2], base + f[3]});
  }
  return render(vertices, faces);
}

}  // namespace monovex
