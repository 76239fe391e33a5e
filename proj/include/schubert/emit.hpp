#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "schubert/smoothness.hpp"

namespace schubert {

using json = nlohmann::ordered_json;

inline json root_coords_json(const Root& r) { return json(r.coords); }

inline json roots_json(const RootSystem& rs) {
  json out;
  out["system"] = rs.name();
  out["rank"] = rs.rank();
  json cartan = json::array();
  for (const auto& row : rs.cartan().a) cartan.push_back(row);
  out["cartan"] = std::move(cartan);
  json pos = json::array();
  for (const Root& r : rs.positive_roots()) pos.push_back(root_coords_json(r));
  out["positive_roots"] = std::move(pos);
  out["count"] = {{"positive", rs.positive_roots().size()}, {"all", rs.all_roots().size()}};
  return out;
}

inline json weight_set_json(const WeightSet& ws) {
  const RootSystem& rs = *ws.point.system();
  json out;
  out["point"] = word_string(ws.point);
  out["word"] = format_word(rs, ws.word);
  json weights = json::array();
  for (const Root& w : ws.weights) weights.push_back(root_coords_json(w));
  out["weights"] = std::move(weights);
  return out;
}

inline json gallery_json(const Gallery& g) {
  const RootSystem& rs = *g.type().system();
  json out;
  out["word"] = format_word(rs, g.type().word());
  out["choices"] = json(std::vector<bool>(g.choices()));
  out["display"] = g.display();
  out["target"] = word_string(g.target());
  json walls = json::array();
  const auto ws = walls_of(g);
  for (int j = g.r(); j >= 1; --j)
    walls.push_back({{"step", j},
                     {"root", root_coords_json(ws[static_cast<std::size_t>(j)].wall)},
                     {"kind", ws[static_cast<std::size_t>(j)].crossing ? "crossing" : "bend"}});
  out["walls"] = std::move(walls);
  return out;
}

inline json smoothness_json(const SmoothnessReport& report) {
  const RootSystem& rs = *report.w.system();
  json out;
  out["type"] = rs.name();
  out["w"] = word_string(report.w);
  out["l"] = report.length;
  json points = json::array();
  for (const auto& p : report.points)
    points.push_back({{"u", word_string(p.u)},
                      {"dim", p.dim},
                      {"rs", p.rationally_smooth},
                      {"kl", p.kl.coeffs()}});
  out["points"] = std::move(points);
  out["rationally_smooth_everywhere"] = report.rationally_smooth_everywhere;
  return out;
}

// DOT rendering of the curve graph: vertices named by choice strings, one
// same-rank group per row of target lengths (top row = target identity),
// folding edges labeled phi(wall coordinates).
inline std::string graph_dot(const GalleryGraph& graph) {
  std::string out = "graph bs_curves {\n";
  out += "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n";

  int max_row = 0;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k)
    max_row = std::max(max_row, graph.row(static_cast<int>(k)));
  for (int row = 0; row <= max_row; ++row) {
    std::string line = "  { rank=same;";
    bool any = false;
    for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
      if (graph.row(static_cast<int>(k)) != row) continue;
      line += " \"" + graph.vertices[k].display() + "\";";
      any = true;
    }
    line += " }\n";
    if (any) out += line;
  }

  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    const std::string target = word_string(graph.targets[k]);
    out += "  \"" + graph.vertices[k].display() + "\" [label=\"" + graph.vertices[k].display() +
           " (" + (target.empty() ? "e" : target) + ")\"];\n";
  }

  for (const auto& e : graph.edges) {
    out += "  \"" + graph.vertices[static_cast<std::size_t>(e.a)].display() + "\" -- \"" +
           graph.vertices[static_cast<std::size_t>(e.b)].display() + "\"";
    if (e.fold) {
      std::string coords = e.wall.str();
      out += " [label=\"phi" + coords + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

namespace detail {

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::sqrt(x * x + y * y); }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0 ? Vec2{x / n, y / n} : Vec2{};
  }
  Vec2 perp() const { return {-y, x}; }
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Planar realization of a rank-2 system from the symmetrized Cartan matrix.
struct Plane {
  Vec2 e0, e1;        // images of the simple roots
  double g[2][2];     // Gram matrix of the simple roots
  double ginv[2][2];  // its inverse

  explicit Plane(const RootSystem& rs) {
    const auto& a = rs.cartan().a;
    double d0 = std::max(std::abs(a[1][0]), 1);
    double d1 = std::max(std::abs(a[0][1]), 1);
    g[0][0] = 2 * d0;
    g[1][1] = 2 * d1;
    g[0][1] = g[1][0] = d0 * a[0][1];
    const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    ginv[0][0] = g[1][1] / det;
    ginv[1][1] = g[0][0] / det;
    ginv[0][1] = ginv[1][0] = -g[0][1] / det;
    e0 = {std::sqrt(2 * d0), 0};
    const double x1 = d0 * a[0][1] / std::sqrt(2 * d0);
    e1 = {x1, std::sqrt(2 * d1 - x1 * x1)};
  }

  Vec2 embed(double c0, double c1) const { return e0 * c0 + e1 * c1; }
  Vec2 embed_root(const Root& r) const { return embed(r.coords[0], r.coords[1]); }

  // Root-basis coordinates of the fundamental coweight dual to alpha_i.
  std::pair<double, double> coweight(int i) const { return {ginv[0][i], ginv[1][i]}; }

  Vec2 apply(const WeylElement& w, std::pair<double, double> root_coords) const {
    std::vector<int> col0(2), col1(2);
    for (int k = 0; k < 2; ++k) {
      col0[static_cast<std::size_t>(k)] = w.act(w.system()->simple_root(0)).coords[static_cast<std::size_t>(k)];
      col1[static_cast<std::size_t>(k)] = w.act(w.system()->simple_root(1)).coords[static_cast<std::size_t>(k)];
    }
    const double c0 = col0[0] * root_coords.first + col1[0] * root_coords.second;
    const double c1 = col0[1] * root_coords.first + col1[1] * root_coords.second;
    return embed(c0, c1);
  }

  // Interior direction of the chamber w(F_B).
  Vec2 chamber_dir(const WeylElement& w) const {
    auto [a0, a1] = coweight(0);
    auto [b0, b1] = coweight(1);
    return apply(w, {a0 + b0, a1 + b1}).normalized();
  }

  // Direction of the ray w(fundamental face of type {i}).
  Vec2 face_dir(const WeylElement& w, int i) const {
    return apply(w, coweight(1 - i)).normalized();
  }
};

}  // namespace detail

// Rank-2 apartment picture: every wall as a full line through the center,
// chamber labels, and each given gallery as a polyline through chamber and
// face midpoints with a source bullet and a target arrowhead.  Galleries are
// drawn at staggered radii so the curves stay distinguishable.
inline std::string apartment_svg(const RootSystemPtr& rs, const std::vector<Gallery>& galleries) {
  using detail::Vec2;
  using detail::fmt;

  if (rs->rank() != 2)
    fail(errc::unsupported_rank, "apartment rendering supports rank 2 only");

  const detail::Plane plane(*rs);
  const Vec2 center{500, 500};
  auto at = [&](Vec2 dir, double radius) {
    return Vec2{center.x + dir.x * radius, center.y - dir.y * radius};
  };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  constexpr int kPaletteSize = 10;

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
      "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  // walls: one full line (two rays) per positive root
  svg += "<g stroke=\"#444444\" stroke-width=\"1\">\n";
  for (const Root& m : rs->positive_roots()) {
    const Vec2 d = plane.embed_root(m).perp().normalized();
    const Vec2 p1 = at(d, 480), p2 = at(d * -1.0, 480);
    svg += "<line x1=\"" + fmt(p1.x) + "\" y1=\"" + fmt(p1.y) + "\" x2=\"" + fmt(p2.x) +
           "\" y2=\"" + fmt(p2.y) + "\"/>\n";
  }
  svg += "</g>\n";

  // wall labels at one end of each line
  svg += "<g font-size=\"18\" fill=\"#444444\" font-family=\"sans-serif\">\n";
  for (const Root& m : rs->positive_roots()) {
    const Vec2 d = plane.embed_root(m).perp().normalized();
    const Vec2 p = at(d, 492);
    svg += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\" text-anchor=\"middle\">M" +
           m.str() + "</text>\n";
  }
  svg += "</g>\n";

  // chamber labels
  svg += "<g font-size=\"16\" fill=\"#999999\" font-family=\"sans-serif\">\n";
  for (const WeylElement& w : enumerate_group(rs)) {
    const Vec2 p = at(plane.chamber_dir(w), 445);
    const std::string word = word_string(w);
    svg += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\" text-anchor=\"middle\">" +
           (word.empty() ? "e" : word) + "</text>\n";
  }
  svg += "</g>\n";

  const std::size_t n_galleries = galleries.size();
  for (std::size_t k = 0; k < n_galleries; ++k) {
    const Gallery& g = galleries[k];
    const double radius =
        n_galleries > 1 ? 150.0 + 250.0 * static_cast<double>(k) / static_cast<double>(n_galleries - 1)
                        : 280.0;
    const auto ch = g.chambers();

    // drift slightly inward along the way so retraced segments stay visible
    std::vector<Vec2> pts;
    double rr = radius;
    auto push = [&](Vec2 dir) {
      pts.push_back(at(dir, rr));
      rr -= 3.0;
    };
    push(plane.chamber_dir(ch[static_cast<std::size_t>(g.r())]));
    for (int j = g.r(); j >= 1; --j) {
      push(plane.face_dir(ch[static_cast<std::size_t>(j)], g.type().letter(j)));
      push(plane.chamber_dir(ch[static_cast<std::size_t>(j - 1)]));
    }
    const auto& t = g.type().target_type();
    if (t.size() == 1)
      push(plane.face_dir(ch[0], t[0]));
    else if (t.size() == 2)
      pts.push_back(at(plane.chamber_dir(ch[0]), 14.0 + 3.0 * static_cast<double>(k)));

    const std::string color = kPalette[k % kPaletteSize];
    std::string points;
    for (const Vec2& p : pts) points += fmt(p.x) + "," + fmt(p.y) + " ";
    svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2.5\"/>\n";

    // source bullet
    svg += "<circle cx=\"" + fmt(pts.front().x) + "\" cy=\"" + fmt(pts.front().y) +
           "\" r=\"6\" fill=\"" + color + "\"/>\n";

    // target arrowhead along the last segment
    if (pts.size() >= 2) {
      const Vec2 tip = pts.back();
      const Vec2 dir = (tip - pts[pts.size() - 2]).normalized();
      const Vec2 side = dir.perp();
      const Vec2 b1 = tip - dir * 16.0 + side * 6.0;
      const Vec2 b2 = tip - dir * 16.0 - side * 6.0;
      svg += "<path d=\"M " + fmt(tip.x) + " " + fmt(tip.y) + " L " + fmt(b1.x) + " " + fmt(b1.y) +
             " L " + fmt(b2.x) + " " + fmt(b2.y) + " Z\" fill=\"" + color + "\"/>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace schubert
