// n-tangles with the dihedral symmetry action used by rotor links.
//
// A tangle lives in a disk with 2n boundary points in counterclockwise
// cyclic order a0,b0,a1,b1,...,a_{n-1},b_{n-1} (positions 0..2n-1). Crossing
// quadruples are counterclockwise with the under-strand at slots {0,2};
// validated tangles are normalized so slot 0 is the incoming under-strand.
//
// The group acting is D_2n = <phi, d0 | phi^n = d0^2 = 1, d0 phi d0 =
// phi^{-1}>: phi = rotate by one sector (boundary position p -> p+2),
// d0 = boundary reflection p -> 1-p combined with a diagram reflection and
// an over/under switch of every crossing. d_{k/2} = phi^k d0.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotorlab/diagram.hpp"
#include "rotorlab/errors.hpp"

namespace rotorlab::tangle {

struct BoundaryAttach {
  int edge = -1;
  bool in = false;  // strand enters the tangle at this point
  friend bool operator==(const BoundaryAttach& a, const BoundaryAttach& b) {
    return a.edge == b.edge && a.in == b.in;
  }
};

struct Tangle {
  int n = 0;
  std::vector<std::array<int, 4>> crossings;
  std::vector<BoundaryAttach> boundary;  // size 2n
  long free_loops = 0;
  // Orientation pins for closed components the quadruples cannot orient
  // (circles that are the over-strand at every crossing they meet):
  // {edge, crossing, slot} marks the edge's head incidence.
  std::vector<std::array<int, 3>> pinned_heads;

  friend bool operator==(const Tangle& a, const Tangle& b) {
    return a.n == b.n && a.crossings == b.crossings && a.boundary == b.boundary &&
           a.free_loops == b.free_loops && a.pinned_heads == b.pinned_heads;
  }
};

enum class OrientClass { Preserving, Reversing, Neither };
std::string to_string(OrientClass c);

// A strand of a tangle: either an open arc between two boundary positions or
// a closed component.
struct Strand {
  bool closed = false;
  int from_pos = -1, to_pos = -1;  // boundary positions (open strands)
  std::vector<int> edges;          // in traversal order along orientation
};

// Validated, normalized view. Construction throws ValidationError on bad
// data and normalizes crossings so slot 0 is the incoming under-strand.
class TInfo {
 public:
  explicit TInfo(const Tangle& raw);

  const Tangle& tangle() const { return t_; }
  long n_crossings() const { return static_cast<long>(t_.crossings.size()); }

  // incidences: kind 0 = crossing (c, slot), kind 1 = boundary (pos)
  struct Inc {
    int kind, c, s;
    friend bool operator==(const Inc& a, const Inc& b) {
      return a.kind == b.kind && a.c == b.c && a.s == b.s;
    }
  };
  const std::map<int, std::pair<Inc, Inc>>& edge_ends() const { return ends_; }  // head, tail
  int sign(int c) const { return sign_[c]; }

  const std::vector<Strand>& strands() const { return strands_; }
  int strand_of_edge(int e) const { return strand_of_.at(e); }
  // index into strands() for the open strand starting or ending at position p
  int strand_at(int pos) const { return strand_at_[pos]; }
  long closed_components() const;  // closed strands + free loops

  OrientClass orient_class() const;

 private:
  Tangle t_;
  std::map<int, std::pair<Inc, Inc>> ends_;
  std::vector<int> sign_;
  std::vector<Strand> strands_;
  std::map<int, int> strand_of_;
  std::vector<int> strand_at_;

  friend Tangle normalized(const Tangle& raw);
};

inline Tangle normalized(const Tangle& raw) { return TInfo(raw).t_; }

// ---------------------------------------------------------------------------
// Group action and structure operations

Tangle rotate(const Tangle& t, int k);            // phi^k
Tangle dihedral_flype(const Tangle& t, int k);    // d_{k/2} = phi^k d0
Tangle reverse_orientation(const Tangle& t);      // flip every strand
OrientClass classify_orientation(const Tangle& t);

// Canonical form: relabel internal edges by a deterministic traversal from
// the boundary; equality of canonical forms is equality of tangles up to
// internal edge renaming.
Tangle canonical(const Tangle& t);
bool same_tangle(const Tangle& a, const Tangle& b);

// phi(R) = R, allowing the global orientation reversal of R that the
// reversing class requires.
bool is_rotor_symmetric(const Tangle& t);

// ---------------------------------------------------------------------------
// Composition

struct ComposeResult {
  diagram::Diagram dia;
  // for every diagram component (edge components in order, then free loops):
  // the sorted stator edge labels it runs through (empty for rotor-only
  // components and free loops)
  std::vector<std::vector<int>> stator_edges_of_component;
  long stator_crossings = 0;  // diagram crossings [0, stator_crossings) are stator
};

ComposeResult compose(const Tangle& stator, const Tangle& rotor);

// ---------------------------------------------------------------------------
// Rotor links and rotants

struct RotorLink {
  int n = 0;
  Tangle stator, rotor;
};

// Validates arities, rotor symmetry and composability.
void validate_rotor_link(const RotorLink& rl);

struct RotantResult {
  ComposeResult composed;
  RotorLink flyped_link;  // stator + the flyped (and possibly re-oriented) rotor
};

// Compose the stator with d_{k/2}(rotor), reversing the flyped rotor's
// orientation when needed to match the stator.
RotantResult rotant(const RotorLink& rl, int k = 0);

// ---------------------------------------------------------------------------
// Serialization (rotor-link file format)

std::string serialize_tangle(const Tangle& t);
Tangle parse_tangle(const std::string& text);
std::string serialize_rotor_link(const RotorLink& rl);
RotorLink parse_rotor_link(const std::string& text);

// ---------------------------------------------------------------------------
// Generation

Tangle trivial_rotor(int n);   // n arcs a_i -> b_i
Tangle trivial_stator(int n);  // n arcs b_i -> a_i in the outer disk

// Random symmetric rotor: one random fundamental domain replicated n times.
// Deterministic for a given seed. Reversing requires even n.
Tangle random_rotor(int n, int domain_crossings, OrientClass klass, uint64_t seed,
                    bool allow_closed = false);

// Random stator whose boundary directions complement `rotor_pattern` (the
// in/out sequence of the rotor it will be composed with).
Tangle random_stator(int n, int crossings, uint64_t seed,
                     const std::vector<bool>& rotor_in_pattern);

// Random connected link diagrams for the cross-route suites (closed Morse
// words; retries until connected with <= max_crossings crossings).
diagram::Diagram random_diagram(int target_crossings, uint64_t seed);

}  // namespace rotorlab::tangle
