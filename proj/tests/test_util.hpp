#pragma once

// Shared fixtures: the Fermat cubic with its conjugate pair of skew lines,
// the real line m meeting both, and small deterministic generators.

#include <random>

#include "cusp/projgeom.hpp"
#include "cusp/surface.hpp"

namespace cusp::testutil {

inline Scalar W() { return Scalar(QuadExt::generator(MinPoly::omega())); }

inline CubicSurface fermat() {
  MPoly f = MPoly::variable("x0").pow(3) + MPoly::variable("x1").pow(3) +
            MPoly::variable("x2").pow(3) + MPoly::variable("x3").pow(3);
  return CubicSurface(f);
}

// Affine (-w^2, -w t, t) homogenized: base point at t=0 plus direction.
inline ProjLine fermat_l1() {
  Scalar w = W();
  return ProjLine({Scalar(1), -(w * w), Scalar(0), Scalar(0)},
                  {Scalar(0), Scalar(0), -w, Scalar(1)});
}

inline ProjLine fermat_l2() {
  Scalar w = W();
  return ProjLine({Scalar(1), -w, Scalar(0), Scalar(0)},
                  {Scalar(0), Scalar(0), -(w * w), Scalar(1)});
}

// Affine (-t, -1, t) homogenized.
inline ProjLine fermat_m() {
  return ProjLine({Scalar(1), Scalar(0), Scalar(-1), Scalar(0)},
                  {Scalar(0), Scalar(-1), Scalar(0), Scalar(1)});
}

// Chart basis of H: x0 + x2 = 0 matching the paper's affine chart
// (y1, y2) -> (1, y1, -1, y2).
inline std::array<ProjPoint, 3> paper_chart() {
  return {ProjPoint{Scalar(1), Scalar(0), Scalar(-1), Scalar(0)},
          ProjPoint{Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
          ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  long pick(long lo, long hi) { return lo + static_cast<long>(g_() % (hi - lo + 1)); }
  Scalar small() { return Scalar(pick(-4, 4)); }
  Scalar small_nonzero() {
    long v = 0;
    while (v == 0) v = pick(-4, 4);
    return Scalar(v);
  }

 private:
  std::mt19937_64 g_;
};

// Random triple in the normal form m = span{e0, e1},
// l1 = {(1, a, 0, 0), (0, b1, b2, b3)}, l2 = {(1, c, 0, 0), (0, d1, d2, d3)},
// retried until the skew-pair and triple invariants hold.
inline LineTriple random_normal_form_triple(Rng& rng) {
  for (;;) {
    Scalar a = rng.small_nonzero(), c = rng.small_nonzero();
    if (a == c) continue;
    ProjPoint A1{Scalar(1), a, Scalar(0), Scalar(0)};
    ProjPoint B1{Scalar(0), rng.small(), rng.small_nonzero(), rng.small()};
    ProjPoint A2{Scalar(1), c, Scalar(0), Scalar(0)};
    ProjPoint B2{Scalar(0), rng.small(), rng.small(), rng.small_nonzero()};
    ProjLine l1(A1, B1), l2(A2, B2);
    if (lines_meet(l1, l2)) continue;
    ProjLine m({Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
               {Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    return LineTriple(l1, l2, m);
  }
}

// Conjugate-stable pair over Q(w) with a rational m: l1 passes through
// M1 + w*M2 on m with an w-direction; l2 is its conjugate.
inline LineTriple random_conjugate_triple(Rng& rng) {
  Scalar w = W();
  for (;;) {
    ProjPoint M1{Scalar(1), rng.small(), rng.small(), rng.small()};
    ProjPoint M2{Scalar(0), Scalar(1), rng.small(), rng.small()};
    ProjPoint P;  // on m, not rational
    for (int i = 0; i < 4; ++i) P[i] = M1[i] + w * M2[i];
    ProjPoint D;
    for (int i = 0; i < 4; ++i) D[i] = rng.small() + w * rng.small();
    if (pt_is_zero(D)) continue;
    try {
      ProjLine l1(P, D);
      ProjLine l2 = l1.conjugate();
      if (lines_meet(l1, l2)) continue;
      ProjLine m(M1, M2);
      if (!lines_meet(m, l1) || !lines_meet(m, l2)) continue;
      return LineTriple(l1, l2, m);
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace cusp::testutil
