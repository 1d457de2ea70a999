#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rotorlab/diagram.hpp"

using namespace rotorlab;
using namespace rotorlab::diagram;

TEST_CASE("crossingless unknot") {
  Diagram u = parse_diagram(R"({"crossings": [], "free_loops": 1, "framed": false})");
  Info info(u);
  CHECK(info.n_components() == 1);
  CHECK(info.n_crossings() == 0);
  CHECK(info.connected());
  CHECK(writhe(u) == 0);
}

TEST_CASE("trefoil validates: V=3, E=6, F=5, one component") {
  Diagram t = trefoil_right();
  Info info(t);
  CHECK(info.n_components() == 1);
  CHECK(info.n_edges() == 6);
  CHECK(info.faces().size() == 5);
  CHECK(info.connected());
  CHECK(info.writhe() == 3);
  for (int c = 0; c < 3; ++c) CHECK(info.sign(c) == 1);
}

TEST_CASE("hopf link: 2 components, 4 faces, both crossings positive") {
  Diagram h = hopf_positive();
  Info info(h);
  CHECK(info.n_components() == 2);
  CHECK(info.faces().size() == 4);
  CHECK(info.sign(0) == 1);
  CHECK(info.sign(1) == 1);
  CHECK(info.writhe() == 2);
}

TEST_CASE("figure eight: 1 component, writhe 0, 6 faces") {
  Diagram f = figure_eight();
  Info info(f);
  CHECK(info.n_components() == 1);
  CHECK(info.faces().size() == 6);  // V=4, E=8 -> F=6
  CHECK(info.writhe() == 0);
}

TEST_CASE("bad inputs rejected") {
  CHECK_THROWS_AS(parse_diagram("not json"), ParseError);
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": 7})"), ParseError);
  // edge appears once
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": [[0,1,2,3]], "free_loops": 0})"),
                  ValidationError);
  // two circles crossing once: passes pairing, fails the Euler check
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": [[0,1,0,1]], "free_loops": 0})"),
                  ValidationError);
  // empty diagram
  CHECK_THROWS_AS(parse_diagram(R"({"crossings": [], "free_loops": 0})"), ValidationError);
}

TEST_CASE("round trip parse(serialize(d)) == d") {
  for (const Diagram& d : {unknot(), hopf_positive(), trefoil_right(), figure_eight()}) {
    Diagram e = parse_diagram(serialize(d));
    CHECK(e.crossings == d.crossings);
    CHECK(e.free_loops == d.free_loops);
    CHECK(e.framed == d.framed);
  }
}

TEST_CASE("mirror is an involution and negates writhe") {
  for (const Diagram& d : {hopf_positive(), trefoil_right(), figure_eight()}) {
    Diagram m = mirror(d);
    CHECK(writhe(m) == -writhe(d));
    Diagram mm = mirror(m);
    CHECK(mm.crossings == d.crossings);
  }
}

TEST_CASE("reverse on all components is an involution; preserves writhe") {
  for (const Diagram& d : {hopf_positive(), trefoil_right(), figure_eight()}) {
    Diagram r = reverse_all(d);
    CHECK(writhe(r) == writhe(d));
    Diagram rr = reverse_all(r);
    CHECK(rr.crossings == d.crossings);
  }
}

TEST_CASE("checkerboard: proper coloring, unbounded face white") {
  for (const Diagram& d : {hopf_positive(), trefoil_right(), figure_eight()}) {
    Info info(d);
    CHECK_FALSE(info.shaded(info.unbounded_face()));
    for (size_t f = 0; f < info.faces().size(); ++f)
      for (Dart dart : info.faces()[f].darts) {
        int g = info.face_of(dart_reverse(dart));
        CHECK(info.shaded(static_cast<int>(f)) != info.shaded(g));
      }
  }
}

TEST_CASE("component edge counts sum to n_edges") {
  for (const Diagram& d : {hopf_positive(), trefoil_right(), figure_eight()}) {
    Info info(d);
    long total = 0;
    for (const auto& c : info.edge_components()) total += static_cast<long>(c.size());
    CHECK(total == info.n_edges());
  }
}

TEST_CASE("kink diagrams validate") {
  // one-crossing unknots: [0,0,1,1] is the positive kink, [0,1,1,0] negative
  Diagram k{{{0, 0, 1, 1}}, 0, false};
  Info info(k);
  CHECK(info.n_components() == 1);
  CHECK(info.faces().size() == 3);
  CHECK(info.writhe() == 1);
  Diagram k2{{{0, 1, 1, 0}}, 0, false};
  Info info2(k2);
  CHECK(info2.writhe() == -1);
}

TEST_CASE("quadrant faces are consistent with colors") {
  for (const Diagram& d : {hopf_positive(), trefoil_right(), figure_eight()}) {
    Info info(d);
    for (int c = 0; c < info.n_crossings(); ++c) {
      // opposite quadrants share a color, adjacent quadrants differ
      CHECK(info.shaded(info.quadrant_face(c, 0)) == info.shaded(info.quadrant_face(c, 2)));
      CHECK(info.shaded(info.quadrant_face(c, 1)) == info.shaded(info.quadrant_face(c, 3)));
      CHECK(info.shaded(info.quadrant_face(c, 0)) != info.shaded(info.quadrant_face(c, 1)));
    }
  }
}
