#include "cusp/parametrizer.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cusp/fforacle.hpp"
#include "cusp/linalg.hpp"
#include "cusp/mpoly_gcd.hpp"

namespace cusp {

namespace {

SymPoint lift(const ProjPoint& p) {
  return SymPoint{MPoly(p[0]), MPoly(p[1]), MPoly(p[2]), MPoly(p[3])};
}

MPoly chart_var(int i) { return MPoly::variable(kChartVars[i]); }

SymPoint chart_point(const std::array<ProjPoint, 3>& chart) {
  SymPoint x{MPoly(), MPoly(), MPoly(), MPoly()};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) x[i] += chart_var(j).times(chart[j][i]);
  }
  return x;
}

bool plane_is_rational(const ProjPlane& h) {
  for (const auto& c : h) {
    if (!c.is_rational()) return false;
  }
  return true;
}

bool point_is_rational(const ProjPoint& p) {
  for (const auto& c : p) {
    if (!c.is_rational()) return false;
  }
  return true;
}

// Canonical solution basis of h . x = 0 (kernel of the 1x4 row).
std::array<ProjPoint, 3> plane_basis(const ProjPlane& h) {
  ScalarMatrix m(1, 4);
  for (int j = 0; j < 4; ++j) m.at(0, j) = h[j];
  auto ker = kernel_basis(std::move(m));
  if (ker.size() != 3) fail(Err::BadInput, "degenerate plane");
  std::array<ProjPoint, 3> out{ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                               ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                               ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = ker[i][j];
  }
  return out;
}

void validate_chart(const std::array<ProjPoint, 3>& chart, const ProjPlane& h) {
  ScalarMatrix m(3, 4);
  for (int i = 0; i < 3; ++i) {
    if (!plane_contains_point(h, chart[i])) {
      fail(Err::BadInput, "chart point " + point_str(chart[i]) + " is not on the plane");
    }
    for (int j = 0; j < 4; ++j) m.at(i, j) = chart[i][j];
  }
  if (ff_rank(std::move(m)) != 3) fail(Err::BadInput, "chart points do not span the plane");
}

// mod-p transversal screen: does the plane contain a line of the surface
// meeting both skew lines? A clean "no" at one good prime is sound; a
// consistent "yes" is only heuristic (the witness cannot be lifted here).
struct TransversalScreen {
  bool contained = false;
  bool heuristic = false;
};

TransversalScreen screen_plane_for_transversals(const CubicSurface& S, const ProjLine& l1,
                                                const ProjLine& l2, const ProjPlane& h) {
  TransversalScreen out;
  int tested = 0;
  static const unsigned primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (unsigned p : primes) {
    if (tested >= 3) break;
    try {
      FpCubic Sp = reduce_surface_mod_p(S, p);
      FpLine a = reduce_line_mod_p(l1, p);
      FpLine b = reduce_line_mod_p(l2, p);
      if (fp_lines_meet(a, b, p)) continue;  // bad reduction for the pair
      std::array<unsigned, 4> hp = reduce_point_mod_p(ProjPoint{h[0], h[1], h[2], h[3]}, p, 0);
      ++tested;
      bool found = false;
      for (const FpLine& t : transversals_on_surface(Sp, a, b)) {
        if (fp_plane_contains_line(hp, t, p)) { found = true; break; }
      }
      if (!found) {
        out.contained = false;
        out.heuristic = false;
        return out;  // sound negative
      }
      out.contained = true;
      out.heuristic = true;
    } catch (const Error&) {
      continue;  // bad prime, try the next one
    }
  }
  return out;
}

std::mt19937_64 sample_rng_seeded() { return std::mt19937_64(0x5caff01d2026ULL); }

}  // namespace

std::pair<ProjPlane, std::array<ProjPoint, 3>> choose_plane(const ProjLine& l1,
                                                            const ProjLine& l2,
                                                            const ProjLine& m) {
  // pencil of planes through m
  ScalarMatrix pm(2, 4);
  for (int j = 0; j < 4; ++j) {
    pm.at(0, j) = m.a()[j];
    pm.at(1, j) = m.b()[j];
  }
  auto pencil = kernel_basis(std::move(pm));
  if (pencil.size() != 2) fail(Err::Internal, "pencil through a line must be 2-dimensional");
  auto mk_plane = [&](long s, long t) {
    ProjPlane h;
    for (int j = 0; j < 4; ++j) h[j] = Scalar(s) * pencil[0][j] + Scalar(t) * pencil[1][j];
    return h;
  };
  auto acceptable = [&](const ProjPlane& h) {
    bool zero = h[0].is_zero() && h[1].is_zero() && h[2].is_zero() && h[3].is_zero();
    return !zero && !plane_contains_line(h, l1) && !plane_contains_line(h, l2);
  };
  static const long fixed[][2] = {{1, 0}, {0, 1}, {1, 1},  {1, -1}, {1, 2},
                                  {2, 1}, {1, -2}, {2, -1}, {1, 3},  {3, 1}};
  std::optional<ProjPlane> chosen;
  for (const auto& st : fixed) {
    ProjPlane h = mk_plane(st[0], st[1]);
    if (acceptable(h)) { chosen = h; break; }
  }
  if (!chosen) {
    // each line rules out at most one member of the pencil, so this
    // fallback terminates immediately in practice
    std::mt19937_64 rng(0x9fa3107ULL);
    for (int i = 0; i < 64 && !chosen; ++i) {
      long s = static_cast<long>(rng() % 17) - 8;
      long t = static_cast<long>(rng() % 17) - 8;
      ProjPlane h = mk_plane(s, t);
      if (acceptable(h)) chosen = h;
    }
  }
  if (!chosen) fail(Err::Internal, "no valid plane in the pencil");

  std::array<ProjPoint, 3> chart{m.a(), m.b(), ProjPoint{Scalar(0), Scalar(0), Scalar(0),
                                                         Scalar(0)}};
  bool found = false;
  for (const ProjPoint& cand : plane_basis(*chosen)) {
    if (!m.contains(cand)) { chart[2] = cand; found = true; break; }
  }
  if (!found) fail(Err::Internal, "plane basis degenerate against m");
  return {*chosen, chart};
}

ParamResult parametrize(const ParamInput& in) {
  const CubicSurface& S = in.S;
  // ---- input invariants ----
  if (lines_meet(in.l1, in.l2)) fail(Err::NotSkew, "l1 and l2 must be skew");
  if (!contains_line(S, in.l1)) fail(Err::InputNotOnSurface, "l1 is not on the surface");
  if (!contains_line(S, in.l2)) fail(Err::InputNotOnSurface, "l2 is not on the surface");
  bool rational_pair = in.l1.is_rational() && in.l2.is_rational();
  bool conj_stable = false;
  if (!rational_pair) {
    if (!in.l1.conjugate().same_line(in.l2)) {
      fail(Err::RealnessViolated,
           "skew pair must be rational or conjugate-stable over the extension");
    }
    conj_stable = true;
  }
  if (!in.m) fail(Err::BadInput, "no line m supplied and none found among the inputs");
  const ProjLine& m = *in.m;
  if (!contains_line(S, m)) fail(Err::InputNotOnSurface, "m is not on the surface");
  if (!lines_meet(m, in.l1) || !lines_meet(m, in.l2)) {
    fail(Err::BadTriple, "m must meet both skew lines");
  }
  if (!m.is_rational()) fail(Err::RealnessViolated, "m must be rational");

  ProjPlane plane{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  std::array<ProjPoint, 3> chart{ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                                 ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                                 ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
  if (in.plane) {
    plane = *in.plane;
    if (!plane_is_rational(plane)) fail(Err::RealnessViolated, "plane must be rational");
    if (plane_contains_line(plane, in.l1) || plane_contains_line(plane, in.l2)) {
      fail(Err::BadInput, "plane may not contain one of the skew lines");
    }
    if (in.chart) {
      chart = *in.chart;
      for (const auto& pt : chart) {
        if (!point_is_rational(pt)) fail(Err::RealnessViolated, "chart must be rational");
      }
      validate_chart(chart, plane);
    } else if (plane_contains_line(plane, m)) {
      chart = {m.a(), m.b(), ProjPoint{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
      bool found = false;
      for (const ProjPoint& cand : plane_basis(plane)) {
        if (!m.contains(cand)) { chart[2] = cand; found = true; break; }
      }
      if (!found) fail(Err::Internal, "plane basis degenerate against m");
    } else {
      chart = plane_basis(plane);
    }
  } else {
    if (in.chart) fail(Err::BadInput, "a chart needs an explicit plane");
    auto [h, c] = choose_plane(in.l1, in.l2, m);
    plane = h;
    chart = c;
  }

  // ---- the construction ----
  SymPoint x = chart_point(chart);
  SymTransversal t = transversal_sym(x, in.l1, in.l2);
  SymBinaryForm F = restrict_to_symline(S, t.on_l1, t.on_l2);
  if (F.is_zero()) {
    fail(Err::DegenerateChart, "restriction to the transversal vanishes on the whole chart");
  }
  SymBinaryForm after_v, lin;
  try {
    after_v = exact_divide_binary(F, SymBinaryForm::linear(MPoly(0), MPoly(1)));
    lin = exact_divide_binary(after_v, SymBinaryForm::linear(MPoly(1), MPoly(0)));
  } catch (const Error& e) {
    if (e.code() == Err::NotARoot) {
      fail(Err::InputNotOnSurface, "a marked intersection point is not on the surface");
    }
    throw;
  }
  auto [ru, rv] = lin.root();  // third root (u : v)
  if (ru.is_zero() && rv.is_zero()) {
    fail(Err::DegenerateChart, "third intersection point degenerates on the whole chart");
  }
  std::array<MPoly, 4> raw;
  for (int i = 0; i < 4; ++i) raw[i] = ru * t.on_l1[i] + rv * t.on_l2[i];

  std::vector<MPoly> nonzero;
  for (const auto& c : raw) {
    if (!c.is_zero()) nonzero.push_back(c);
  }
  if (nonzero.empty()) fail(Err::DegenerateChart, "all components vanish identically");
  MPoly g = mpoly_gcd_many(nonzero);
  std::array<MPoly, 4> phi;
  for (int i = 0; i < 4; ++i) {
    if (raw[i].is_zero()) phi[i] = MPoly();
    else phi[i] = *try_divide(raw[i], g);
  }
  // one global unit: scale the first nonzero component monic
  for (const auto& c : phi) {
    if (!c.is_zero()) {
      Scalar lc = c.leading_coefficient();
      for (auto& cc : phi) cc = cc.divided_by(lc);
      break;
    }
  }

  int degree = -1;
  for (const auto& c : phi) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) fail(Err::Internal, "non-homogeneous parametrization component");
    if (degree < 0) degree = c.total_degree();
    if (c.total_degree() != degree) fail(Err::Internal, "mixed-degree parametrization");
  }

  ParamResult result{phi,   degree, plane,        chart,
                     in.l1, in.l2,  m,            conj_stable,
                     g,     VerifyReport{}};
  result.verification = verify(result, S);
  return result;
}

std::pair<ProjPoint, ProjPoint> phi1(const ProjPoint& x, const ParamInput& in) {
  ProjPlane plane{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  if (in.plane) {
    plane = *in.plane;
  } else {
    if (!in.m) fail(Err::BadInput, "no plane or m to pin the chart");
    plane = choose_plane(in.l1, in.l2, *in.m).first;
  }
  if (!plane_contains_point(plane, x)) fail(Err::BadInput, "point is not in the chart plane");
  Transversal t = transversal(x, in.l1, in.l2);
  return {t.on_l1, t.on_l2};
}

BiquadResult biquadratic(const ParamInput& in) {
  const CubicSurface& S = in.S;
  if (!in.l1.is_rational() || !in.l2.is_rational()) {
    fail(Err::RealnessViolated, "the chord construction needs a rational skew pair");
  }
  if (lines_meet(in.l1, in.l2)) fail(Err::NotSkew, "l1 and l2 must be skew");
  if (!contains_line(S, in.l1) || !contains_line(S, in.l2)) {
    fail(Err::InputNotOnSurface, "both lines must lie on the surface");
  }
  MPoly u0 = MPoly::variable("u0"), u1 = MPoly::variable("u1");
  MPoly v0 = MPoly::variable("v0"), v1 = MPoly::variable("v1");
  SymPoint U, V;
  for (int i = 0; i < 4; ++i) {
    U[i] = u0.times(in.l1.a()[i]) + u1.times(in.l1.b()[i]);
    V[i] = v0.times(in.l2.a()[i]) + v1.times(in.l2.b()[i]);
  }
  SymBinaryForm G = restrict_to_symline(S, U, V);
  SymBinaryForm after, lin;
  try {
    after = exact_divide_binary(G, SymBinaryForm::linear(MPoly(0), MPoly(1)));
    lin = exact_divide_binary(after, SymBinaryForm::linear(MPoly(1), MPoly(0)));
  } catch (const Error& e) {
    if (e.code() == Err::NotARoot) {
      fail(Err::InputNotOnSurface, "a chord endpoint is not on the surface");
    }
    throw;
  }
  auto [ru, rv] = lin.root();
  std::array<MPoly, 4> raw;
  for (int i = 0; i < 4; ++i) raw[i] = ru * U[i] + rv * V[i];

  // gcd of bihomogeneous forms: strip the shared pure powers of the two
  // homogenizing variables, dehomogenize both factors, reduce in (u0, v0),
  // rehomogenize per factor, restore the stripped powers
  auto min_exp = [](const MPoly& f, const std::string& var) -> unsigned {
    auto it = std::find(f.vars().begin(), f.vars().end(), var);
    if (it == f.vars().end()) return 0;
    size_t idx = it - f.vars().begin();
    unsigned m = ~0u;
    for (const auto& [e, c] : f.terms()) m = std::min(m, e[idx]);
    return m;
  };
  unsigned ku = ~0u, kv = ~0u;
  for (const auto& c : raw) {
    if (c.is_zero()) continue;
    ku = std::min(ku, min_exp(c, "u1"));
    kv = std::min(kv, min_exp(c, "v1"));
  }
  if (ku == ~0u) fail(Err::DegenerateChart, "all chord components vanish identically");
  MPoly common = u1.pow(ku) * v1.pow(kv);

  std::map<std::string, MPoly> dehom{{"u1", MPoly(1)}, {"v1", MPoly(1)}};
  std::vector<MPoly> flat;
  for (const auto& c : raw) {
    if (!c.is_zero()) flat.push_back(c.substitute(dehom));
  }
  MPoly g2 = mpoly_gcd_many(flat);
  MPoly g = common;
  if (!g2.is_constant()) {
    // pad u1 to the u-degree and v1 to the v-degree of the reduced gcd
    int Du = std::max(g2.degree_in("u0"), 0);
    int Dv = std::max(g2.degree_in("v0"), 0);
    MPoly hu = MPoly::variable("u1"), hv = MPoly::variable("v1");
    MPoly acc;
    for (const auto& [e, c] : g2.terms()) {
      MPoly term(c);
      int eu = 0, ev = 0;
      for (size_t i = 0; i < g2.vars().size(); ++i) {
        if (e[i]) term *= MPoly::variable(g2.vars()[i]).pow(e[i]);
        if (g2.vars()[i] == "u0") eu = static_cast<int>(e[i]);
        if (g2.vars()[i] == "v0") ev = static_cast<int>(e[i]);
      }
      term *= hu.pow(static_cast<unsigned>(Du - eu));
      term *= hv.pow(static_cast<unsigned>(Dv - ev));
      acc += term;
    }
    g = acc * common;
  }

  BiquadResult out{{MPoly(), MPoly(), MPoly(), MPoly()}, {0, 0}, g, false};
  for (int i = 0; i < 4; ++i) {
    if (raw[i].is_zero()) continue;
    if (g.is_constant()) out.phi2[i] = raw[i];
    else out.phi2[i] = *try_divide(raw[i], g);
  }
  for (const auto& c : out.phi2) {
    if (c.is_zero()) continue;
    Scalar lc = c.leading_coefficient();
    for (auto& cc : out.phi2) cc = cc.divided_by(lc);
    break;
  }
  int du = -1, dv = -1;
  for (const auto& c : out.phi2) {
    if (c.is_zero()) continue;
    int cu = std::max(c.degree_in("u0"), 0) + std::max(c.degree_in("u1"), 0);
    int cv = std::max(c.degree_in("v0"), 0) + std::max(c.degree_in("v1"), 0);
    du = std::max(du, cu);
    dv = std::max(dv, cv);
  }
  out.bidegree = {du, dv};

  std::map<std::string, MPoly> bind;
  for (int i = 0; i < 4; ++i) bind[kSurfaceVars[i]] = out.phi2[i];
  out.identity_ok = S.form().substitute(bind).is_zero();
  return out;
}

VerifyReport verify(const ParamResult& r, const CubicSurface& S) {
  VerifyReport rep;

  std::map<std::string, MPoly> bind;
  for (int i = 0; i < 4; ++i) bind[kSurfaceVars[i]] = r.phi[i];
  rep.identity_ok = S.form().substitute(bind).is_zero();

  std::vector<MPoly> nonzero;
  for (const auto& c : r.phi) {
    if (!c.is_zero()) nonzero.push_back(c);
  }
  rep.gcd_unit = !nonzero.empty() && mpoly_gcd_many(nonzero).is_constant();

  rep.degree = r.degree;
  bool has_line = plane_contains_line(r.plane, r.m);
  if (!has_line) {
    TransversalScreen s = screen_plane_for_transversals(S, r.l1, r.l2, r.plane);
    has_line = s.contained;
    rep.screen_was_heuristic = s.heuristic;
  }
  rep.plane_has_surface_line = has_line;
  // observed law: a transversal inside the plane is a contracted chart line
  // and drops the degree from 4 to 3
  rep.predicted_degree = has_line ? 3 : 4;
  rep.degree_ok = rep.degree == rep.predicted_degree;

  bool rational = true;
  for (const auto& c : r.phi) {
    if (!c.all_coeffs_rational()) rational = false;
  }
  rep.field = rational ? "Q" : "Q(w)";
  rep.descent_ok = rational;  // rational inputs stay rational; stable pairs must descend

  // generic injectivity sample: distinct parameter points map to distinct
  // projective images
  auto rng = sample_rng_seeded();
  auto small = [&]() { return Scalar(Rational(static_cast<long>(rng() % 41) - 20,
                                              static_cast<long>(rng() % 7) + 1)); };
  std::vector<ProjPoint> images;
  std::set<std::array<std::string, 3>> used;
  int guard = 0;
  while (images.size() < 25 && guard++ < 500) {
    std::map<std::string, Scalar> pt{{"y0", Scalar(1)}, {"y1", small()}, {"y2", small()}};
    std::array<std::string, 3> key{pt["y0"].str(), pt["y1"].str(), pt["y2"].str()};
    if (!used.insert(key).second) continue;
    ProjPoint img;
    for (int i = 0; i < 4; ++i) img[i] = r.phi[i].evaluate(pt);
    if (pt_is_zero(img)) continue;  // base point
    images.push_back(img);
  }
  rep.injective_sample_ok = images.size() == 25;
  for (size_t i = 0; i < images.size() && rep.injective_sample_ok; ++i) {
    for (size_t j = i + 1; j < images.size(); ++j) {
      if (same_projective_point(images[i], images[j])) {
        rep.injective_sample_ok = false;
        break;
      }
    }
  }
  return rep;
}

std::array<RatFn, 3> affine_view(const ParamResult& r) {
  std::map<std::string, MPoly> y0_one{{"y0", MPoly(1)}};
  MPoly den = r.phi[0].substitute(y0_one);
  if (den.is_zero()) fail(Err::DegenerateChart, "affine chart denominator is identically zero");
  return {RatFn(r.phi[1].substitute(y0_one), den), RatFn(r.phi[2].substitute(y0_one), den),
          RatFn(r.phi[3].substitute(y0_one), den)};
}

MPoly chart_line_form(const ParamResult& r, const ProjLine& line) {
  if (!plane_contains_line(r.plane, line)) {
    fail(Err::BadInput, "line is not inside the chart plane");
  }
  SymPoint x = chart_point(r.chart);
  SymPlane cof = plane_through_points(x, lift(line.a()), lift(line.b()));
  for (const auto& c : cof) {
    if (!c.is_zero()) return c;
  }
  fail(Err::Internal, "chart line form vanished identically");
}

std::array<MPoly, 4> restrict_phi_to_chart_line(const ParamResult& r, const MPoly& linform) {
  // canonical basis of the kernel of the linear form on (y0, y1, y2)
  ScalarMatrix m(1, 3);
  for (int j = 0; j < 3; ++j) {
    std::map<std::string, unsigned> mono{{kChartVars[j], 1}};
    m.at(0, j) = linform.coefficient_of(mono);
  }
  auto ker = kernel_basis(std::move(m));
  if (ker.size() != 2) fail(Err::BadInput, "chart line form must be a nonzero linear form");
  MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
  std::map<std::string, MPoly> bind;
  for (int j = 0; j < 3; ++j) bind[kChartVars[j]] = s.times(ker[0][j]) + t.times(ker[1][j]);
  std::array<MPoly, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = r.phi[i].substitute(bind);
  return out;
}

bool projectively_constant(const std::array<MPoly, 4>& fam) {
  // collect the union of monomials, stack the coefficient matrix, rank 1
  std::map<std::string, unsigned> dummy;
  std::set<std::vector<std::pair<std::string, unsigned>>> monos;
  for (const auto& f : fam) {
    for (const auto& [e, c] : f.terms()) {
      std::vector<std::pair<std::string, unsigned>> key;
      for (size_t i = 0; i < f.vars().size(); ++i) {
        if (e[i]) key.emplace_back(f.vars()[i], e[i]);
      }
      monos.insert(key);
    }
  }
  if (monos.empty()) return false;  // the zero family is not a point
  ScalarMatrix m(4, monos.size());
  size_t col = 0;
  for (const auto& key : monos) {
    std::map<std::string, unsigned> mono(key.begin(), key.end());
    for (int i = 0; i < 4; ++i) m.at(i, col) = fam[i].coefficient_of(mono);
    ++col;
  }
  return ff_rank(std::move(m)) == 1;
}

std::pair<Scalar, Scalar> line_coords(const ProjLine& l, const ProjPoint& p) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      Scalar det = l.a()[i] * l.b()[j] - l.a()[j] * l.b()[i];
      if (det.is_zero()) continue;
      Scalar alpha = (p[i] * l.b()[j] - p[j] * l.b()[i]) / det;
      Scalar beta = (l.a()[i] * p[j] - l.a()[j] * p[i]) / det;
      return {alpha, beta};
    }
  }
  fail(Err::Internal, "degenerate line in coordinate extraction");
}

}  // namespace cusp
