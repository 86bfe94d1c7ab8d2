#include "polynorm/svg.hpp"

#include <map>
#include <sstream>

namespace polynorm {

namespace {

constexpr int kUnit = 40;  // pixels per lattice unit

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr int kPaletteSize = 8;

struct Canvas {
  Integer xmin, xmax, ymin, ymax;  // user units, integral with margin

  std::string px(const Rational& x) const { return decimal_string((x - xmin) * kUnit, 2); }
  std::string py(const Rational& y) const { return decimal_string((ymax - y) * kUnit, 2); }
  long width() const { return static_cast<long>(xmax - xmin) * kUnit; }
  long height() const { return static_cast<long>(ymax - ymin) * kUnit; }
};

Canvas canvas_around(const std::vector<Point>& pts) {
  Canvas c{rat_floor(pts[0][0]), rat_ceil(pts[0][0]), rat_floor(pts[0][1]),
           rat_ceil(pts[0][1])};
  for (const auto& p : pts) {
    c.xmin = std::min(c.xmin, rat_floor(p[0]));
    c.xmax = std::max(c.xmax, rat_ceil(p[0]));
    c.ymin = std::min(c.ymin, rat_floor(p[1]));
    c.ymax = std::max(c.ymax, rat_ceil(p[1]));
  }
  c.xmin -= 1;
  c.ymin -= 1;
  c.xmax += 1;
  c.ymax += 1;
  return c;
}

void open_svg(std::ostringstream& out, const Canvas& c) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << c.width() << " "
      << c.height() << "\" width=\"" << c.width() << "\" height=\"" << c.height() << "\">\n";
}

void draw_grid(std::ostringstream& out, const Canvas& c) {
  out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Integer x = c.xmin; x <= c.xmax; ++x)
    out << "    <line x1=\"" << c.px(Rational(x)) << "\" y1=\"0\" x2=\"" << c.px(Rational(x))
        << "\" y2=\"" << c.height() << "\"/>\n";
  for (Integer y = c.ymin; y <= c.ymax; ++y)
    out << "    <line x1=\"0\" y1=\"" << c.py(Rational(y)) << "\" x2=\"" << c.width()
        << "\" y2=\"" << c.py(Rational(y)) << "\"/>\n";
  out << "  </g>\n";
}

/// Vertices of a 2D polytope in counterclockwise boundary order, starting at
/// the lexicographically smallest vertex.
std::vector<Point> boundary_cycle(const Polytope& p) {
  const auto& verts = p.vertices();
  const int n = static_cast<int>(verts.size());
  if (n <= 2) return verts;
  // in the plane every facet is an edge with exactly two incident vertices
  std::vector<std::vector<int>> nbr(n);
  for (const auto& facet : p.incidence()) {
    nbr[facet[0]].push_back(facet[1]);
    nbr[facet[1]].push_back(facet[0]);
  }
  std::vector<int> order = {0, nbr[0][0]};
  while (static_cast<int>(order.size()) < n) {
    int cur = order.back(), prev = order[order.size() - 2];
    order.push_back(nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0]);
  }
  Rational twice_area = 0;  // shoelace; flip if the walk came out clockwise
  for (int i = 0; i < n; ++i) {
    const auto& a = verts[order[i]];
    const auto& b = verts[order[(i + 1) % n]];
    twice_area += a[0] * b[1] - b[0] * a[1];
  }
  if (twice_area < 0) std::reverse(order.begin() + 1, order.end());
  std::vector<Point> cycle;
  for (int i : order) cycle.push_back(verts[i]);
  return cycle;
}

std::string points_attr(const std::vector<Point>& cycle, const Canvas& c) {
  std::string s;
  for (const auto& p : cycle) {
    if (!s.empty()) s += " ";
    s += c.px(p[0]) + "," + c.py(p[1]);
  }
  return s;
}

void draw_polygon(std::ostringstream& out, const Polytope& p, const Canvas& c,
                  const std::string& style) {
  out << "  <polygon points=\"" << points_attr(boundary_cycle(p), c) << "\" " << style
      << "/>\n";
}

std::string render_cover(const Polytope& target, const Polytope& q, const Polytope& p,
                         long budget) {
  if (target.dim() != 2) throw NotTwoDimensional();
  auto verdict = is_covered(target, g_set(q, budget), p);

  std::vector<Point> extent = target.vertices();
  for (const auto& v : q.vertices())
    for (const auto& w : p.vertices()) extent.push_back(add(v, w));
  Canvas c = canvas_around(extent);

  std::ostringstream out;
  open_svg(out, c);
  draw_grid(out, c);
  draw_polygon(out, target, c, "fill=\"#f2f2f2\" stroke=\"#000000\" stroke-width=\"2\"");

  // residual first so translate outlines stay visible on top of it
  for (const auto& cell : verdict.residual_cells)
    draw_polygon(out, Polytope::hull(cell.vertices), c,
                 "fill=\"#ffb3b3\" stroke=\"#cc0000\" stroke-width=\"1.5\"");

  // one group per origin vertex of Q: its G-points and their P-translates
  int color = 0;
  for (const auto& v : q.vertices()) {
    const char* stroke = kPalette[color % kPaletteSize];
    out << "  <g stroke=\"" << stroke << "\" fill=\"" << stroke << "\">\n";
    auto pts = lattice_points(translate(q, scale_point(v, Rational(-1))), budget);
    for (const auto& z : pts.points()) {
      Point g = add(z, v);
      out << "    <polygon points=\"" << points_attr(boundary_cycle(translate(p, g)), c)
          << "\" fill=\"none\" stroke-width=\"1\"/>\n";
      out << "    <circle cx=\"" << c.px(g[0]) << "\" cy=\"" << c.py(g[1])
          << "\" r=\"3.5\" stroke=\"none\"/>\n";
    }
    out << "  </g>\n";
    ++color;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string svg_cover_figure(const Polytope& p, const Rational& c, long budget) {
  if (p.dim() != 2) throw NotTwoDimensional();
  if (c <= 1) throw GeometryError("cover figures need c > 1");
  return render_cover(scale(p, c), scale(p, c - 1), p, budget);
}

std::string svg_pair_figure(const Polytope& q, const Polytope& p, long budget) {
  if (q.dim() != 2 || p.dim() != 2) throw NotTwoDimensional();
  return render_cover(minkowski_sum(q, p), q, p, budget);
}

std::string svg_fan_figure(const Polytope& p) {
  if (p.dim() != 2) throw NotTwoDimensional();
  auto fan = normal_fan(p);
  const auto& faces = p.faces();

  Canvas c{-3, 3, -3, 3};
  std::ostringstream out;
  open_svg(out, c);
  draw_grid(out, c);

  // scale each primitive generator so its largest coordinate is 2
  auto tip = [](const IntVector& g) {
    Integer m = std::max(g[0] < 0 ? Integer(-g[0]) : g[0], g[1] < 0 ? Integer(-g[1]) : g[1]);
    return Point{Rational(2 * g[0], m), Rational(2 * g[1], m)};
  };

  int color = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim != 0) continue;  // one sector per vertex cone
    const auto& gens = fan.cones[i].generators;
    Point a = tip(gens[0]), b = tip(gens[1]);
    out << "  <polygon points=\"" << c.px(Rational(0)) << "," << c.py(Rational(0)) << " "
        << c.px(a[0]) << "," << c.py(a[1]) << " " << c.px(b[0]) << "," << c.py(b[1])
        << "\" fill=\"" << kPalette[color % kPaletteSize] << "\" fill-opacity=\"0.25\""
        << " stroke=\"none\"/>\n";
    ++color;
  }
  // rays on top, one per facet normal
  out << "  <g stroke=\"#000000\" stroke-width=\"2\">\n";
  for (const auto& h : p.facets()) {
    Point t = tip(h.normal);
    out << "    <line x1=\"" << c.px(Rational(0)) << "\" y1=\"" << c.py(Rational(0))
        << "\" x2=\"" << c.px(t[0]) << "\" y2=\"" << c.py(t[1]) << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace polynorm
