#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusp/projgeom.hpp"
#include "test_util.hpp"

using namespace cusp;
using namespace cusp::testutil;

namespace {

ProjPoint e(int i) {
  ProjPoint p{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  p[i] = Scalar(1);
  return p;
}

ProjLine span(const ProjPoint& a, const ProjPoint& b) { return ProjLine(a, b); }

ProjPoint random_point(Rng& rng) {
  for (;;) {
    ProjPoint p{rng.small(), rng.small(), rng.small(), rng.small()};
    if (!pt_is_zero(p)) return p;
  }
}

}  // namespace

TEST_CASE("pluecker coordinates of the axis spans") {
  ProjLine l = span(e(0), e(1));
  CHECK(l.pluecker() == std::array<Scalar, 6>{Scalar(1), Scalar(0), Scalar(0), Scalar(0),
                                              Scalar(0), Scalar(0)});
  // swapping the spanning points negates the vector
  ProjLine r = span(e(1), e(0));
  for (int i = 0; i < 6; ++i) CHECK(r.pluecker()[i] == -l.pluecker()[i]);
  // same line, different second point: proportional coordinates
  ProjLine s = span(e(0), ProjPoint{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
  CHECK(s.same_line(l));
}

TEST_CASE("every constructed line satisfies the Pluecker quadric") {
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    ProjPoint a = random_point(rng), b = random_point(rng);
    if (same_projective_point(a, b)) continue;
    ProjLine l(a, b);
    const auto& p = l.pluecker();
    CHECK((p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).is_zero());
  }
}

TEST_CASE("degenerate spans are rejected") {
  CHECK_THROWS_AS(span(e(0), e(0)), Error);
  ProjPoint d{Scalar(2), Scalar(0), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(span(e(0), d), Error);
}

TEST_CASE("line incidence") {
  // two axes through e0 meet
  CHECK(lines_meet(span(e(0), e(1)), span(e(0), e(2))));
  // opposite coordinate axes are skew with pairing 1
  ProjLine l1 = span(e(0), e(1)), l2 = span(e(2), e(3));
  CHECK_FALSE(lines_meet(l1, l2));
  CHECK(pluecker_pairing(l1.pluecker(), l2.pluecker()) == Scalar(1));
  // a line meets itself, and the pairing is symmetric
  CHECK(lines_meet(l1, l1));
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    ProjPoint a = random_point(rng), b = random_point(rng), c = random_point(rng),
              d = random_point(rng);
    if (same_projective_point(a, b) || same_projective_point(c, d)) continue;
    ProjLine x(a, b), y(c, d);
    CHECK(lines_meet(x, y) == lines_meet(y, x));
  }
}

TEST_CASE("the paper's skew pair stays skew after homogenization") {
  CHECK_FALSE(lines_meet(fermat_l1(), fermat_l2()));
  CHECK(lines_meet(fermat_m(), fermat_l1()));
  CHECK(lines_meet(fermat_m(), fermat_l2()));
}

TEST_CASE("plane through a point and a line") {
  ProjLine l01 = span(e(0), e(1));
  ProjPlane h = plane_through(ProjPoint{Scalar(1), Scalar(1), Scalar(1), Scalar(1)}, l01);
  // x2 - x3 = 0 up to scale
  CHECK(h[0].is_zero());
  CHECK(h[1].is_zero());
  CHECK_FALSE(h[2].is_zero());
  CHECK(h[2] == -h[3]);

  ProjPlane h2 = plane_through(e(2), l01);
  CHECK((h2[0].is_zero() && h2[1].is_zero() && h2[2].is_zero()));
  CHECK_FALSE(h2[3].is_zero());  // x3 = 0

  ProjPlane h3 = plane_through(e(3), l01);
  CHECK((h3[0].is_zero() && h3[1].is_zero() && h3[3].is_zero()));
  CHECK_FALSE(h3[2].is_zero());  // x2 = 0

  CHECK_THROWS_AS(plane_through(e(0), l01), Error);  // point on the line
}

TEST_CASE("meeting two planes") {
  ProjPlane a{Scalar(0), Scalar(0), Scalar(1), Scalar(-1)};  // x2 = x3
  ProjPlane b{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)};  // x0 = x1
  ProjLine l = meet_planes(a, b);
  ProjLine expect(ProjPoint{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                  ProjPoint{Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
  CHECK(l.same_line(expect));

  ProjPlane x3{Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  ProjPlane x2{Scalar(0), Scalar(0), Scalar(1), Scalar(0)};
  CHECK(meet_planes(x3, x2).same_line(span(e(0), e(1))));

  ProjPlane x2scaled{Scalar(0), Scalar(0), Scalar(2), Scalar(0)};
  CHECK_THROWS_AS(meet_planes(x2, x2scaled), Error);
}

TEST_CASE("planes through a common point intersect through it") {
  Rng rng(33);
  ProjLine l1 = span(e(0), e(1)), l2 = span(e(2), e(3));
  for (int i = 0; i < 30; ++i) {
    ProjPoint x = random_point(rng);
    if (l1.contains(x) || l2.contains(x)) continue;
    ProjLine cut = meet_planes(plane_through(x, l1), plane_through(x, l2));
    CHECK(cut.contains(x));
  }
}

TEST_CASE("transversal of the symmetric configuration") {
  ProjPoint x{Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
  Transversal t = transversal(x, span(e(0), e(1)), span(e(2), e(3)));
  CHECK(same_projective_point(t.on_l1, ProjPoint{Scalar(1), Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(same_projective_point(t.on_l2, ProjPoint{Scalar(0), Scalar(0), Scalar(1), Scalar(1)}));
  ProjLine expect(ProjPoint{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                  ProjPoint{Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
  CHECK(t.line.same_line(expect));
}

TEST_CASE("transversal postconditions and uniqueness on random input") {
  Rng rng(404);
  ProjLine l1 = fermat_l1(), l2 = fermat_l2();
  int checked = 0;
  for (int i = 0; i < 60 && checked < 25; ++i) {
    ProjPoint x = random_point(rng);
    if (l1.contains(x) || l2.contains(x)) continue;
    Transversal t = transversal(x, l1, l2);
    ++checked;
    CHECK(t.line.contains(x));
    CHECK(lines_meet(t.line, l1));
    CHECK(lines_meet(t.line, l2));
    CHECK(l1.contains(t.on_l1));
    CHECK(l2.contains(t.on_l2));
    // uniqueness: the line through x and either marked point is the same line
    CHECK(ProjLine(x, t.on_l1).same_line(t.line));
    CHECK(ProjLine(x, t.on_l2).same_line(t.line));
  }
  CHECK(checked == 25);
}

TEST_CASE("transversal degenerates exactly on the blow-up loci") {
  ProjLine l1 = span(e(0), e(1)), l2 = span(e(2), e(3));
  CHECK_THROWS_AS(transversal(e(0), l1, l2), Error);
  CHECK_THROWS_AS(transversal(e(3), l1, l2), Error);
  // meeting lines are rejected up front
  CHECK_THROWS_AS(transversal(ProjPoint{Scalar(1), Scalar(1), Scalar(1), Scalar(1)},
                              span(e(0), e(1)), span(e(0), e(2))),
                  Error);
}

TEST_CASE("intersection point of two meeting lines") {
  ProjPoint p = line_line_meet(fermat_m(), fermat_l1());
  Scalar w = W();
  // hand-computed: (1, -w^2, -1, w^2)
  ProjPoint expect{Scalar(1), -(w * w), Scalar(-1), w * w};
  CHECK(same_projective_point(p, expect));
  CHECK(fermat_m().contains(p));
  CHECK(fermat_l1().contains(p));
  CHECK_THROWS_AS(line_line_meet(span(e(0), e(1)), span(e(2), e(3))), Error);
  CHECK_THROWS_AS(line_line_meet(span(e(0), e(1)), span(e(0), e(1))), Error);
}

TEST_CASE("symbolic transversal satisfies all incidences identically") {
  // chart x = (y0, y1, -y0, y2) of the plane x0 + x2 = 0
  MPoly y0 = MPoly::variable("y0"), y1 = MPoly::variable("y1"), y2 = MPoly::variable("y2");
  SymPoint x{y0, y1, -y0, y2};
  ProjLine l1 = fermat_l1(), l2 = fermat_l2();
  SymTransversal t = transversal_sym(x, l1, l2);

  auto lift = [](const ProjPoint& p) {
    return SymPoint{MPoly(p[0]), MPoly(p[1]), MPoly(p[2]), MPoly(p[3])};
  };
  // marked points stay on their lines: the plane cofactors of [q; a; b]
  // vanish as polynomials
  auto on_line = [&](const SymPoint& q, const ProjLine& l) {
    SymPlane cof = plane_through_points(q, lift(l.a()), lift(l.b()));
    return cof[0].is_zero() && cof[1].is_zero() && cof[2].is_zero() && cof[3].is_zero();
  };
  CHECK(on_line(t.on_l1, l1));
  CHECK(on_line(t.on_l2, l2));

  // x, q1, q2 collinear: every 3x3 minor of the stacked matrix vanishes
  SymPlane cof = plane_through_points(x, t.on_l1, t.on_l2);
  CHECK((cof[0].is_zero() && cof[1].is_zero() && cof[2].is_zero() && cof[3].is_zero()));

  // the symbolic line meets both input lines: Pluecker pairing is the zero
  // polynomial
  auto sym_pl = pluecker_of(t.line.a, t.line.b);
  auto lift6 = [&](const ProjLine& l) {
    std::array<MPoly, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = MPoly(l.pluecker()[i]);
    return out;
  };
  CHECK(pluecker_pairing(sym_pl, lift6(l1)).is_zero());
  CHECK(pluecker_pairing(sym_pl, lift6(l2)).is_zero());
}
