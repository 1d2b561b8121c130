#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "cusp/linalg.hpp"
#include "cusp/surface.hpp"
#include "test_util.hpp"

using namespace cusp;
using namespace cusp::testutil;

namespace {

// Independent rank oracle: clear denominators row-wise, reduce mod several
// primes, take the maximum rank. Independent of the fraction-free
// elimination used by cubic_space.
int modular_rank(const ScalarMatrix& m, const std::vector<unsigned long>& primes) {
  int best = 0;
  for (unsigned long p : primes) {
    std::vector<std::vector<unsigned long>> a(m.rows(), std::vector<unsigned long>(m.cols(), 0));
    bool bad = false;
    for (size_t i = 0; i < m.rows() && !bad; ++i) {
      for (size_t j = 0; j < m.cols(); ++j) {
        const Rational& r = m.at(i, j).as_rational();
        unsigned long den = mpz_fdiv_ui(r.denominator().get_mpz_t(), p);
        if (den == 0) { bad = true; break; }
        unsigned long num = mpz_fdiv_ui(r.numerator().get_mpz_t(), p);
        // den^(p-2) mod p
        unsigned long inv = 1, base = den, e = p - 2;
        while (e) {
          if (e & 1) inv = inv * base % p;
          base = base * base % p;
          e >>= 1;
        }
        a[i][j] = num * inv % p;
      }
    }
    if (bad) continue;
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      size_t piv = row;
      while (piv < m.rows() && a[piv][col] == 0) ++piv;
      if (piv == m.rows()) continue;
      std::swap(a[piv], a[row]);
      unsigned long ip = 1, base = a[row][col], e = p - 2;
      while (e) {
        if (e & 1) ip = ip * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (size_t i = row + 1; i < m.rows(); ++i) {
        if (a[i][col] == 0) continue;
        unsigned long f = a[i][col] * ip % p;
        for (size_t j = col; j < m.cols(); ++j) {
          a[i][j] = (a[i][j] + p - (f * a[row][j] % p)) % p;
        }
      }
      ++rank;
      ++row;
    }
    best = std::max(best, rank);
  }
  return best;
}

// Rebuild the condition matrix exactly as cubic_space defines it, so the
// oracle sees the same system through an unrelated elimination path.
ScalarMatrix condition_matrix(const LineTriple& t) {
  const auto& monos = cubic_monomials();
  ScalarMatrix m(12, 20);
  const ProjLine* lines[3] = {&t.l1(), &t.l2(), &t.m()};
  for (int li = 0; li < 3; ++li) {
    for (size_t k = 0; k < monos.size(); ++k) {
      MPoly mono(Scalar(1));
      for (int i = 0; i < 4; ++i) {
        if (monos[k][i]) mono *= MPoly::variable(kSurfaceVars[i]).pow(monos[k][i]);
      }
      // restriction of the single monomial to the line
      MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
      std::map<std::string, MPoly> bind;
      for (int i = 0; i < 4; ++i) {
        bind[kSurfaceVars[i]] = u * MPoly(lines[li]->a()[i]) + v * MPoly(lines[li]->b()[i]);
      }
      MPoly r = mono.substitute(bind);
      auto cu = r.coefficients_in("u");
      std::array<Scalar, 4> c{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
      for (size_t a = 0; a < cu.size(); ++a) {
        if (cu[a].is_zero()) continue;
        auto cv = cu[a].coefficients_in("v");
        for (size_t b = 0; b < cv.size(); ++b) {
          if (!cv[b].is_zero()) c[3 - a] += cv[b].constant_value();
        }
      }
      for (int j = 0; j < 4; ++j) m.at(li * 4 + j, k) = c[j];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("containment of lines in the Fermat cubic") {
  CubicSurface S = fermat();
  CHECK(contains_line(S, fermat_m()));
  CHECK(contains_line(S, fermat_l1()));
  CHECK(contains_line(S, fermat_l2()));
  ProjLine e01(ProjPoint{Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
               ProjPoint{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK_FALSE(contains_line(S, e01));
  // representation independence: swapped spanning points
  ProjLine swapped(fermat_m().b(), fermat_m().a());
  CHECK(contains_line(S, swapped));
}

TEST_CASE("restriction to a line is the expected binary cubic") {
  MPoly f = MPoly::variable("x0").pow(3) + MPoly::variable("x1").pow(3);
  CubicSurface S(f);
  ProjLine e01(ProjPoint{Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
               ProjPoint{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  BinaryForm r = restrict_to_line(S, e01);
  CHECK(r.c == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});  // u^3 + v^3
  CHECK(restrict_to_line(fermat(), fermat_m()).is_zero());
}

TEST_CASE("restriction is linear in the surface") {
  Rng rng(5);
  ProjLine l(ProjPoint{Scalar(1), Scalar(2), Scalar(0), Scalar(1)},
             ProjPoint{Scalar(0), Scalar(1), Scalar(1), Scalar(-1)});
  MPoly a = MPoly::variable("x0").pow(2) * MPoly::variable("x3");
  MPoly b = MPoly::variable("x1") * MPoly::variable("x2") * MPoly::variable("x3");
  BinaryForm ra = restrict_to_line(CubicSurface(a), l);
  BinaryForm rb = restrict_to_line(CubicSurface(b), l);
  BinaryForm rab = restrict_to_line(CubicSurface(a + b), l);
  for (int i = 0; i < 4; ++i) CHECK(rab.c[i] == ra.c[i] + rb.c[i]);
}

TEST_CASE("gradient and the Euler relation") {
  CubicSurface S = fermat();
  auto g = S.gradient();
  for (int i = 0; i < 4; ++i) {
    CHECK(g[i] == MPoly::variable(kSurfaceVars[i]).pow(2).times(Scalar(3)));
  }
  MPoly euler;
  for (int i = 0; i < 4; ++i) euler += MPoly::variable(kSurfaceVars[i]) * g[i];
  CHECK(euler == S.form().times(Scalar(3)));

  // cone x0 x1 x2: gradient vanishes at (0,0,0,1)
  CubicSurface cone(MPoly::variable("x0") * MPoly::variable("x1") * MPoly::variable("x2"));
  auto gc = cone.gradient();
  std::map<std::string, Scalar> vertex{
      {"x0", Scalar(0)}, {"x1", Scalar(0)}, {"x2", Scalar(0)}, {"x3", Scalar(1)}};
  for (int i = 0; i < 4; ++i) {
    if (gc[i].is_zero()) continue;
    CHECK(gc[i].evaluate(vertex).is_zero());
  }
}

TEST_CASE("triple invariants are validated") {
  CHECK_THROWS_AS(LineTriple(fermat_l1(), fermat_l1().conjugate().conjugate(), fermat_m()),
                  Error);  // l1 vs itself is not skew
  CHECK_NOTHROW(LineTriple(fermat_l1(), fermat_l2(), fermat_m()));
  // a non-conjugate extension pair is rejected
  Scalar w = W();
  ProjLine other(ProjPoint{Scalar(1), w, Scalar(0), Scalar(0)},
                 ProjPoint{Scalar(0), Scalar(0), Scalar(1), w});
  if (!lines_meet(fermat_l1(), other)) {
    CHECK_THROWS_AS(LineTriple(fermat_l1(), other, fermat_m()), Error);
  }
}

TEST_CASE("cubic space of random rational triples has the pinned dimension") {
  Rng rng(2026);
  for (int trial = 0; trial < 4; ++trial) {
    LineTriple t = random_normal_form_triple(rng);
    CubicSpace V = cubic_space(t);
    CHECK(V.rank == 10);
    CHECK(V.dimension == 10);
    // independent oracle on the same condition matrix
    ScalarMatrix m = condition_matrix(t);
    CHECK(modular_rank(m, {100003, 100019, 100043}) == 10);
    // every basis member contains all three lines
    for (const auto& B : V.basis) {
      CHECK(contains_line(B, t.l1()));
      CHECK(contains_line(B, t.l2()));
      CHECK(contains_line(B, t.m()));
    }
  }
}

TEST_CASE("cubic space descends to Q for a conjugate-stable triple") {
  LineTriple t(fermat_l1(), fermat_l2(), fermat_m());
  REQUIRE(t.conjugate_stable());
  CubicSpace V = cubic_space(t);
  CHECK(V.dimension > 0);
  for (const auto& B : V.basis) {
    CHECK(B.form().all_coeffs_rational());
    CHECK(contains_line(B, t.l1()));
    CHECK(contains_line(B, t.l2()));
    CHECK(contains_line(B, t.m()));
  }

  // the Fermat form itself lies in the space: appending it must not grow
  // the rank of the stacked coefficient matrix
  const auto& monos = cubic_monomials();
  auto coeff_row = [&](const MPoly& f, ScalarMatrix& m, size_t row) {
    for (size_t k = 0; k < monos.size(); ++k) {
      std::map<std::string, unsigned> mono;
      for (int i = 0; i < 4; ++i) {
        if (monos[k][i]) mono[kSurfaceVars[i]] = monos[k][i];
      }
      m.at(row, k) = f.coefficient_of(mono);
    }
  };
  ScalarMatrix with(V.basis.size() + 1, 20);
  for (size_t i = 0; i < V.basis.size(); ++i) coeff_row(V.basis[i].form(), with, i);
  coeff_row(fermat().form(), with, V.basis.size());
  CHECK(ff_rank(std::move(with)) == V.dimension);
}

TEST_CASE("conjugate-stable random triples also land in the pinned pattern") {
  Rng rng(99);
  LineTriple t = random_conjugate_triple(rng);
  CubicSpace V = cubic_space(t);
  CHECK(V.rank == 10);
  CHECK(V.dimension == 10);
  for (const auto& B : V.basis) {
    CHECK(B.form().all_coeffs_rational());
    CHECK(contains_line(B, t.l1()));
  }
}
