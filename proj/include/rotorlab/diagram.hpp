// Combinatorial link diagrams on the 2-sphere.
//
// A diagram is a planar-diagram code: each crossing lists its four edge
// labels counterclockwise starting at the incoming under-strand. Edges are
// numbered consecutively along each component in the direction of
// orientation, so orientation is encoded in the labels. Crossingless unknot
// components are stored as a free-loop count (PD codes cannot express them).
//
// Crossing sign convention, inherited by every other module: +1 when the
// under-strand passes right-to-left under the over-strand as seen along the
// over-strand orientation. Equivalently, with slots [a,b,c,d], the crossing
// is positive exactly when the over-strand enters at slot 3.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "rotorlab/errors.hpp"

namespace rotorlab::diagram {

struct Diagram {
  std::vector<std::array<int, 4>> crossings;
  long free_loops = 0;
  bool framed = false;
};

// A dart is a directed edge-traversal: 2*edge for forward (along
// orientation), 2*edge+1 for backward.
using Dart = int;
inline Dart fwd(int e) { return 2 * e; }
inline Dart bwd(int e) { return 2 * e + 1; }
inline int dart_edge(Dart d) { return d / 2; }
inline bool dart_forward(Dart d) { return (d & 1) == 0; }
inline Dart dart_reverse(Dart d) { return d ^ 1; }

struct Face {
  std::vector<Dart> darts;  // cyclic, face on the left of each dart's travel
  bool shaded = false;
};

// Validated view of a diagram. Construction performs the full validation:
// edge pairing, label consecutivity along components, slot-0 = incoming
// under-strand, and the per-component Euler check V - E + F = 2.
class Info {
 public:
  explicit Info(const Diagram& d);

  const Diagram& dia() const { return d_; }
  long n_crossings() const { return static_cast<long>(d_.crossings.size()); }
  long n_edges() const { return 2 * n_crossings(); }

  // components containing edges, ordered by smallest edge label; free loops
  // are counted separately.
  const std::vector<std::vector<int>>& edge_components() const { return comps_; }
  long n_components() const { return static_cast<long>(comps_.size()) + d_.free_loops; }
  int comp_of_edge(int e) const { return comp_of_[e]; }

  int succ(int e) const { return succ_[e]; }  // next edge along orientation

  // incidences: head = (crossing, slot) where e points into the crossing,
  // tail = where it leaves.
  std::pair<int, int> head(int e) const { return head_[e]; }
  std::pair<int, int> tail(int e) const { return tail_[e]; }

  int sign(int c) const { return sign_[c]; }          // +1 / -1
  int over_in_slot(int c) const { return over_in_[c]; }  // 1 or 3
  long writhe() const;
  long self_writhe(int comp) const;  // blackboard framing of one component

  bool connected() const { return connected_; }
  void require_connected() const { if (!connected_) throw DisconnectedDiagram(); }

  // Faces of the sphere map (empty for the crossingless unknot, which is
  // special-cased by callers). face_of(dart) -> face index.
  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }
  int unbounded_face() const { return unbounded_face_; }

  // quadrant i of crossing c: the face between slots i and i+1 (ccw).
  int quadrant_face(int c, int q) const;

  // checkerboard coloring (requires connectivity); shaded flags are set on
  // faces(), unbounded face is white.
  bool shaded(int face) const { return faces_[face].shaded; }

  // seifert smoothing successor: orientation-respecting resolution.
  int seifert_succ(int e) const { return seifert_succ_[e]; }

 private:
  Diagram d_;
  std::vector<int> succ_;
  std::vector<int> comp_of_;
  std::vector<std::vector<int>> comps_;
  std::vector<std::pair<int, int>> head_, tail_;
  std::vector<int> sign_, over_in_;
  std::vector<Face> faces_;
  std::vector<int> face_of_;
  int unbounded_face_ = -1;
  bool connected_ = false;
  std::vector<int> seifert_succ_;

  void validate_and_build();
};

// ---------------------------------------------------------------------------
// Operations

Diagram parse_diagram(const std::string& text);
std::string serialize(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram reverse(const Diagram& d, const std::vector<int>& components);
Diagram reverse_all(const Diagram& d);

long writhe(const Diagram& d);

// Fixed example diagrams used across tests and docs.
Diagram unknot();
Diagram hopf_positive();
Diagram trefoil_right();
Diagram figure_eight();

}  // namespace rotorlab::diagram
