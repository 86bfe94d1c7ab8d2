#pragma once

#include <map>
#include <string>

#include "polynorm/polytope.hpp"

namespace polynorm {

class NotRefining : public GeometryError {
 public:
  NotRefining() : GeometryError("normal fan of P does not refine that of Q") {}
};

/// Normal cone of a face, given by the primitive outer normals of the facets
/// containing it. Empty generator list = the zero cone (the whole polytope's
/// face).
struct Cone {
  std::vector<IntVector> generators;
};

/// Normal fan: one cone per nonempty face, indexed like Polytope::faces().
struct Fan {
  std::vector<Cone> cones;
};

Fan normal_fan(const Polytope& p);

/// Is `a` in the normal cone of vertex w, i.e. does w maximize a over Q?
bool cone_in_vertex_cone(const IntVector& a, const Polytope& q, const Point& w);

/// Does N(P) refine N(Q)? For complete fans it is enough that every vertex
/// cone of P sits inside some vertex cone of Q.
bool refines(const Polytope& p, const Polytope& q);

/// The face of Q whose normal cone is the smallest cone of N(Q) containing
/// the normal cone of face F of P. Requires refines(p, q).
const Face& phi(const Polytope& p, const Polytope& q, const Face& f);

struct EdgePairCheck {
  Edge edge_p;
  bool collapsed = false;        // Phi image is a vertex: no constraint
  std::optional<Edge> edge_q;    // present when not collapsed
  bool satisfied = true;         // length_p >= factor * length_q
};

struct EdgeHypothesisReport {
  Rational factor;
  std::vector<EdgePairCheck> pairs;
  bool all_satisfied = true;
  int collapsed_edges = 0;
  /// Reading of the hypothesis: edges of P whose image collapses to a
  /// vertex impose no constraint; always stated in the report.
  std::string note;
};

/// Checks length(e_P) >= factor * length(Phi(e_P)) for every edge of P whose
/// image is an edge of Q.
EdgeHypothesisReport edge_hypothesis(const Polytope& p, const Polytope& q,
                                     const Rational& factor);

}  // namespace polynorm
