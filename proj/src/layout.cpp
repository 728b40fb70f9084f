#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fullerene/codec.hpp"

namespace fullerene {

const char* to_string(LayoutErrorCode code) {
  switch (code) {
    case LayoutErrorCode::SingularSystem: return "SingularSystem";
    case LayoutErrorCode::DidNotConverge: return "DidNotConverge";
    case LayoutErrorCode::NotAFace: return "NotAFace";
    case LayoutErrorCode::MissingLayout: return "MissingLayout";
  }
  return "?";
}

namespace {

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t offset = it - b.begin();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[(offset + i) % b.size()]) return false;
  }
  return true;
}

}  // namespace

Layout layout_tutte(const EmbeddedCubicGraph& g, const Face& outer_face, const TutteOptions& options) {
  const FaceSet faces = trace_faces(g);
  if (!face_census(g, faces, GenusPolicy::Report).genus_zero()) {
    throw LayoutError(LayoutErrorCode::SingularSystem, "embedding is not planar");
  }
  const bool is_face = std::any_of(faces.faces.begin(), faces.faces.end(), [&](const Face& f) {
    return same_cycle(outer_face.boundary, f.boundary);
  });
  if (!is_face) throw LayoutError(LayoutErrorCode::NotAFace, "outer face is not a face of the embedding");
  if (!vertex_connectivity_at_least(g, 3)) {
    throw LayoutError(LayoutErrorCode::SingularSystem, "graph is not 3-connected");
  }

  const int n = g.vertex_count();
  const auto& ring = outer_face.boundary;
  const double k = static_cast<double>(ring.size());
  Layout layout;
  layout.positions.assign(n, Point{});
  std::vector<char> pinned(n, 0);
  Point centroid;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / k;
    layout.positions[ring[i]] = {std::cos(angle), std::sin(angle)};
    pinned[ring[i]] = 1;
    centroid.x += std::cos(angle) / k;
    centroid.y += std::sin(angle) / k;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!pinned[v]) layout.positions[v] = centroid;
  }

  auto residual = [&](Vertex v) {
    Point mean;
    for (Vertex w : g.rotation(v)) {
      mean.x += layout.positions[w].x / 3.0;
      mean.y += layout.positions[w].y / 3.0;
    }
    return std::hypot(layout.positions[v].x - mean.x, layout.positions[v].y - mean.y);
  };

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    for (Vertex v = 0; v < n; ++v) {
      if (pinned[v]) continue;
      Point mean;
      for (Vertex w : g.rotation(v)) {
        mean.x += layout.positions[w].x;
        mean.y += layout.positions[w].y;
      }
      layout.positions[v] = {mean.x / 3.0, mean.y / 3.0};
    }
    double worst = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      if (!pinned[v]) worst = std::max(worst, residual(v));
    }
    if (worst <= options.tolerance) return layout;
  }
  throw LayoutError(LayoutErrorCode::DidNotConverge,
                    "no convergence after " + std::to_string(options.max_sweeps) + " sweeps");
}

namespace {

std::string class_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ' ';
    out += name;
  }
  return out;
}

template <typename Key>
std::vector<std::string> classes_of(const std::map<std::string, std::set<Key>>& table, const Key& key) {
  std::vector<std::string> out;
  for (const auto& [name, members] : table) {
    if (members.count(key)) out.push_back(name);
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

std::string export_dot(const EmbeddedCubicGraph& g, const Annotations& annotations) {
  std::ostringstream out;
  out << "graph fullerene {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v + 1;
    auto classes = classes_of(annotations.vertex_classes, v);
    if (!classes.empty()) out << " [class=\"" << class_list(classes) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first + 1 << " -- " << e.second + 1;
    auto classes = classes_of(annotations.edge_classes, e);
    if (!classes.empty()) out << " [class=\"" << class_list(classes) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_svg(const EmbeddedCubicGraph& g, const Layout& layout, const Annotations& annotations) {
  const int n = g.vertex_count();
  if (static_cast<int>(layout.positions.size()) != n) {
    throw LayoutError(LayoutErrorCode::MissingLayout, "layout does not cover every vertex");
  }
  for (const Point& p : layout.positions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw LayoutError(LayoutErrorCode::MissingLayout, "layout has non-finite coordinates");
    }
  }
  constexpr double kSize = 600.0;
  constexpr double kMargin = 20.0;
  auto sx = [&](const Point& p) { return kMargin + (p.x + 1.0) * 0.5 * (kSize - 2 * kMargin); };
  auto sy = [&](const Point& p) { return kMargin + (1.0 - p.y) * 0.5 * (kSize - 2 * kMargin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "<style>\n"
         "  .edge { stroke: #333; stroke-width: 1.5; }\n"
         "  .star-edge { stroke: #000; stroke-width: 4; }\n"
         "  .chord { stroke: #c00; stroke-dasharray: 6 4; }\n"
         "  .vertex { fill: #fff; stroke: #333; }\n"
         "  .center { fill: #000; }\n"
         "  .pentagon { fill: #f4d58d; }\n"
         "  .hexagon { fill: #dde8f0; }\n"
         "</style>\n";

  if (annotations.shade_faces) {
    FaceSet faces = trace_faces(g);
    std::vector<std::pair<double, int>> order;
    for (int i = 0; i < static_cast<int>(faces.faces.size()); ++i) {
      const auto& b = faces.faces[i].boundary;
      double area = 0.0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        const Point& p = layout.positions[b[j]];
        const Point& q = layout.positions[b[(j + 1) % b.size()]];
        area += p.x * q.y - q.x * p.y;
      }
      order.emplace_back(-std::abs(area), i);
    }
    std::sort(order.begin(), order.end());
    // The largest polygon is the outer face; it is not shaded.
    for (std::size_t r = 1; r < order.size(); ++r) {
      const auto& f = faces.faces[order[r].second];
      const char* cls = f.size() == 5 ? "pentagon" : f.size() == 6 ? "hexagon" : "face";
      out << "<polygon class=\"" << cls << "\" points=\"";
      for (std::size_t j = 0; j < f.boundary.size(); ++j) {
        const Point& p = layout.positions[f.boundary[j]];
        out << (j ? " " : "") << fmt(sx(p)) << ',' << fmt(sy(p));
      }
      out << "\"/>\n";
    }
  }

  for (const Edge& e : g.edges()) {
    auto classes = classes_of(annotations.edge_classes, e);
    classes.insert(classes.begin(), "edge");
    const Point& a = layout.positions[e.first];
    const Point& b = layout.positions[e.second];
    out << "<line class=\"" << class_list(classes) << "\" x1=\"" << fmt(sx(a)) << "\" y1=\""
        << fmt(sy(a)) << "\" x2=\"" << fmt(sx(b)) << "\" y2=\"" << fmt(sy(b)) << "\"/>\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    auto classes = classes_of(annotations.vertex_classes, v);
    classes.insert(classes.begin(), "vertex");
    const Point& p = layout.positions[v];
    out << "<circle class=\"" << class_list(classes) << "\" id=\"v" << v + 1 << "\" cx=\""
        << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p)) << "\" r=\"4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fullerene
