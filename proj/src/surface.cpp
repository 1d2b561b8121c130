#include "cusp/surface.hpp"

#include <algorithm>

#include "cusp/linalg.hpp"

namespace cusp {

CubicSurface::CubicSurface(MPoly form) : form_(std::move(form)) {
  if (form_.is_zero()) fail(Err::BadInput, "zero cubic form");
  if (!form_.is_homogeneous() || form_.total_degree() != 3) {
    fail(Err::BadInput, "surface form must be homogeneous of degree 3");
  }
  for (const auto& v : form_.vars()) {
    if (std::find(kSurfaceVars.begin(), kSurfaceVars.end(), v) == kSurfaceVars.end()) {
      fail(Err::BadInput, "surface form uses unexpected variable " + v);
    }
  }
}

std::array<MPoly, 4> CubicSurface::gradient() const {
  return {form_.derivative("x0"), form_.derivative("x1"), form_.derivative("x2"),
          form_.derivative("x3")};
}

Scalar CubicSurface::evaluate(const ProjPoint& p) const {
  std::map<std::string, Scalar> bind;
  for (int i = 0; i < 4; ++i) bind[kSurfaceVars[i]] = p[i];
  return form_.evaluate(bind);
}

namespace {

// Collect a (u, v)-homogeneous cubic into its 4 coefficients.
std::array<MPoly, 4> binary_collect(const MPoly& p) {
  std::array<MPoly, 4> out{MPoly(), MPoly(), MPoly(), MPoly()};
  auto by_u = p.coefficients_in("u");  // index = power of u
  for (size_t a = 0; a < by_u.size(); ++a) {
    if (by_u[a].is_zero()) continue;
    auto by_v = by_u[a].coefficients_in("v");
    for (size_t b = 0; b < by_v.size(); ++b) {
      if (by_v[b].is_zero()) continue;
      if (a + b != 3) fail(Err::Internal, "restriction is not a binary cubic");
      out[3 - a] += by_v[b];  // coefficient of u^a v^(3-a), index by v-power
    }
  }
  return out;
}

MPoly substituted_on_span(const MPoly& form, const SymPoint& A, const SymPoint& B) {
  MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
  std::map<std::string, MPoly> bind;
  for (int i = 0; i < 4; ++i) bind[kSurfaceVars[i]] = u * A[i] + v * B[i];
  return form.substitute(bind);
}

SymPoint lift(const ProjPoint& p) {
  return SymPoint{MPoly(p[0]), MPoly(p[1]), MPoly(p[2]), MPoly(p[3])};
}

}  // namespace

SymBinaryForm restrict_to_symline(const CubicSurface& S, const SymPoint& A, const SymPoint& B) {
  MPoly r = substituted_on_span(S.form(), A, B);
  auto cs = binary_collect(r);
  return SymBinaryForm{3, {cs[0], cs[1], cs[2], cs[3]}};
}

BinaryForm restrict_to_line(const CubicSurface& S, const ProjLine& l) {
  SymBinaryForm sym = restrict_to_symline(S, lift(l.a()), lift(l.b()));
  BinaryForm out{3, {}};
  out.c.reserve(4);
  for (const auto& ci : sym.c) {
    if (!ci.is_constant()) fail(Err::Internal, "restriction to a concrete line is not constant");
    out.c.push_back(ci.constant_value());
  }
  return out;
}

bool contains_line(const CubicSurface& S, const ProjLine& l) {
  return restrict_to_line(S, l).is_zero();
}

LineTriple::LineTriple(ProjLine l1, ProjLine l2, ProjLine m)
    : l1_(std::move(l1)), l2_(std::move(l2)), m_(std::move(m)) {
  if (lines_meet(l1_, l2_)) fail(Err::NotSkew, "l1 and l2 must be skew");
  if (!lines_meet(m_, l1_) || !lines_meet(m_, l2_)) {
    fail(Err::BadTriple, "m must meet both skew lines");
  }
  if (!l1_.is_rational() || !l2_.is_rational()) {
    if (!l1_.conjugate().same_line(l2_)) {
      fail(Err::BadTriple, "skew pair with extension entries must be conjugate-stable");
    }
    if (!m_.is_rational()) fail(Err::BadTriple, "m must be defined over the rationals");
    conjugate_stable_ = true;
  }
}

const std::vector<std::array<unsigned, 4>>& cubic_monomials() {
  static const std::vector<std::array<unsigned, 4>> monos = [] {
    std::vector<std::array<unsigned, 4>> out;
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; a + b <= 3; ++b) {
        for (unsigned c = 0; a + b + c <= 3; ++c) {
          out.push_back({a, b, c, 3 - a - b - c});
        }
      }
    }
    // graded-lex descending on (e0, e1, e2, e3); all have degree 3
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    });
    return out;
  }();
  return monos;
}

MPoly cubic_from_coeffs(const std::vector<Scalar>& coeffs) {
  const auto& monos = cubic_monomials();
  if (coeffs.size() != monos.size()) fail(Err::Internal, "expected 20 cubic coefficients");
  MPoly f;
  for (size_t k = 0; k < monos.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    MPoly term(coeffs[k]);
    for (int i = 0; i < 4; ++i) {
      if (monos[k][i]) term *= MPoly::variable(kSurfaceVars[i]).pow(monos[k][i]);
    }
    f += term;
  }
  return f;
}

CubicSpace cubic_space(const LineTriple& triple) {
  const auto& monos = cubic_monomials();
  ScalarMatrix m(12, 20);
  const ProjLine* lines[3] = {&triple.l1(), &triple.l2(), &triple.m()};
  for (int li = 0; li < 3; ++li) {
    const ProjLine& l = *lines[li];
    SymPoint A = lift(l.a()), B = lift(l.b());
    for (size_t k = 0; k < monos.size(); ++k) {
      MPoly mono(Scalar(1));
      for (int i = 0; i < 4; ++i) {
        if (monos[k][i]) mono *= MPoly::variable(kSurfaceVars[i]).pow(monos[k][i]);
      }
      MPoly r = substituted_on_span(mono, A, B);
      auto cs = binary_collect(r);
      for (int j = 0; j < 4; ++j) {
        if (!cs[j].is_constant()) fail(Err::Internal, "line condition is not constant");
        m.at(li * 4 + j, k) = cs[j].constant_value();
      }
    }
  }
  ScalarMatrix rank_copy = m;
  int rank = ff_rank(std::move(rank_copy));
  auto ker = kernel_basis(std::move(m));

  CubicSpace out;
  out.rank = rank;

  std::vector<std::vector<Scalar>> vectors;
  if (triple.conjugate_stable()) {
    // Descend to Q: trace and alpha-trace of each kernel vector are rational
    // and together span the rational points of the (conjugation-stable)
    // kernel; re-eliminate to extract a canonical independent set.
    std::vector<std::vector<Scalar>> cands;
    std::optional<MinPoly> ctx;
    for (const auto& v : ker) {
      for (const auto& c : v) {
        if (!c.is_rational()) { ctx = c.context(); break; }
      }
      if (ctx) break;
    }
    Scalar alpha = ctx ? Scalar(QuadExt::generator(*ctx)) : Scalar(0);
    for (const auto& v : ker) {
      std::vector<Scalar> tr, atr;
      tr.reserve(20);
      atr.reserve(20);
      for (const auto& c : v) {
        tr.push_back(c + c.conjugate());
        Scalar ac = alpha.is_zero() ? c : alpha * c;
        atr.push_back(ac + ac.conjugate());
      }
      cands.push_back(std::move(tr));
      cands.push_back(std::move(atr));
    }
    for (const auto& cand : cands) {
      for (const auto& c : cand) {
        if (!c.is_rational()) fail(Err::Internal, "trace combination not rational");
      }
    }
    // greedy rank growth picks a canonical independent subset
    std::vector<std::vector<Scalar>> picked;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (static_cast<int>(picked.size()) == static_cast<int>(ker.size())) break;
      picked.push_back(cands[i]);
      ScalarMatrix t(picked.size(), 20);
      for (size_t r = 0; r < picked.size(); ++r) {
        for (size_t c = 0; c < 20; ++c) t.at(r, c) = picked[r][c];
      }
      if (ff_rank(std::move(t)) != static_cast<int>(picked.size())) picked.pop_back();
    }
    if (picked.size() != ker.size()) {
      fail(Err::Internal, "rational descent of the cubic space lost dimension");
    }
    vectors = std::move(picked);
  } else {
    vectors = std::move(ker);
  }

  for (const auto& v : vectors) {
    MPoly f = cubic_from_coeffs(v);
    f = f.divided_by(f.leading_coefficient());
    out.basis.emplace_back(f);
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace cusp
