#include "polynorm/fan.hpp"

#include <algorithm>

namespace polynorm {

Fan normal_fan(const Polytope& p) {
  Fan fan;
  for (const auto& f : p.faces()) {
    Cone cone;
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
      const auto& inc = p.incidence()[fi];
      if (std::includes(inc.begin(), inc.end(), f.vertex_indices.begin(),
                        f.vertex_indices.end()))
        cone.generators.push_back(p.facets()[fi].normal);
    }
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

bool cone_in_vertex_cone(const IntVector& a, const Polytope& q, const Point& w) {
  bool is_vertex = false;
  for (const auto& v : q.vertices())
    if (v == w) is_vertex = true;
  if (!is_vertex) throw NotAVertex();
  Rational at_w = dot(a, w);
  for (const auto& v : q.vertices())
    if (dot(a, v) > at_w) return false;
  return true;
}

bool refines(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch();
  auto fan_p = normal_fan(p);
  const auto& faces_p = p.faces();
  for (std::size_t i = 0; i < faces_p.size(); ++i) {
    if (faces_p[i].dim != 0) continue;
    const auto& gens = fan_p.cones[i].generators;
    bool inside_some = false;
    for (const auto& w : q.vertices()) {
      bool all_in = true;
      for (const auto& g : gens)
        if (!cone_in_vertex_cone(g, q, w)) {
          all_in = false;
          break;
        }
      if (all_in) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

const Face& phi(const Polytope& p, const Polytope& q, const Face& f) {
  if (!refines(p, q)) throw NotRefining();
  // the generator sum is interior to the cone of f, so the face of Q it
  // selects has the smallest normal cone containing that cone
  Cone cone;
  for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
    const auto& inc = p.incidence()[fi];
    if (std::includes(inc.begin(), inc.end(), f.vertex_indices.begin(),
                      f.vertex_indices.end()))
      cone.generators.push_back(p.facets()[fi].normal);
  }
  Point c(p.dim(), Rational(0));
  for (const auto& g : cone.generators) c = add(c, to_point(g));

  Rational best = dot(c, q.vertices()[0]);
  for (const auto& v : q.vertices()) best = std::max(best, dot(c, v));
  std::vector<int> argmax;
  for (int i = 0; i < static_cast<int>(q.vertices().size()); ++i)
    if (dot(c, q.vertices()[i]) == best) argmax.push_back(i);
  const Face* face = q.find_face(argmax);
  if (!face) throw GeometryError("internal error: argmax set of a functional is not a face");
  return *face;
}

EdgeHypothesisReport edge_hypothesis(const Polytope& p, const Polytope& q,
                                     const Rational& factor) {
  if (!refines(p, q)) throw NotRefining();
  EdgeHypothesisReport report;
  report.factor = factor;
  report.note =
      "edges of P whose image under the face map is a vertex of Q impose no constraint";
  for (const auto& f : p.faces()) {
    if (f.dim != 1) continue;
    EdgePairCheck check;
    check.edge_p =
        make_edge(p.vertices()[f.vertex_indices[0]], p.vertices()[f.vertex_indices[1]]);
    const Face& image = phi(p, q, f);
    if (image.dim == 1) {
      check.edge_q = make_edge(q.vertices()[image.vertex_indices[0]],
                               q.vertices()[image.vertex_indices[1]]);
      check.satisfied = check.edge_p.length >= factor * check.edge_q->length;
    } else {
      check.collapsed = true;
      ++report.collapsed_edges;
    }
    report.all_satisfied = report.all_satisfied && check.satisfied;
    report.pairs.push_back(std::move(check));
  }
  return report;
}

}  // namespace polynorm
