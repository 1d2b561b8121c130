#include "cusp/mpoly_gcd.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cusp/errors.hpp"

namespace cusp {

namespace {

MPoly normalize_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p.divided_by(p.leading_coefficient());
}

MPoly must_divide(const MPoly& p, const MPoly& d, const char* where) {
  auto q = try_divide(p, d);
  if (!q) fail(Err::Internal, std::string("exact division failed in ") + where);
  return *q;
}

std::vector<std::string> var_union(const MPoly& p, const MPoly& q) {
  std::set<std::string> s(p.vars().begin(), p.vars().end());
  s.insert(q.vars().begin(), q.vars().end());
  return {s.begin(), s.end()};
}

MPoly gcd_impl(const MPoly& p, const MPoly& q);

// --- dense view in one main variable, coefficients are MPoly ---

struct Uni {
  std::vector<MPoly> c;  // c[i] multiplies main^i

  int deg() const { return static_cast<int>(c.size()) - 1; }
  const MPoly& lc() const { return c.back(); }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

Uni to_uni(const MPoly& p, const std::string& main) {
  Uni u;
  u.c = p.coefficients_in(main);
  u.trim();
  return u;
}

MPoly from_uni(const Uni& u, const std::string& main) {
  MPoly x = MPoly::variable(main);
  MPoly r;
  for (size_t i = 0; i < u.c.size(); ++i) {
    if (!u.c[i].is_zero()) r += u.c[i] * x.pow(static_cast<unsigned>(i));
  }
  return r;
}

Uni scale(const Uni& u, const MPoly& f) {
  Uni r = u;
  for (auto& ci : r.c) ci = ci * f;
  r.trim();
  return r;
}

Uni divide_exact(const Uni& u, const MPoly& f, const char* where) {
  Uni r = u;
  for (auto& ci : r.c) ci = must_divide(ci, f, where);
  return r;
}

Uni sub_shifted(const Uni& a, const Uni& b, const MPoly& f, int shift) {
  // a - f * b * main^shift
  Uni r = a;
  if (r.c.size() < b.c.size() + shift) r.c.resize(b.c.size() + shift);
  for (size_t i = 0; i < b.c.size(); ++i) {
    r.c[i + shift] -= f * b.c[i];
  }
  r.trim();
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Uni prem(Uni a, const Uni& b) {
  int n = b.deg();
  int e = a.deg() - n + 1;
  while (!a.zero() && a.deg() >= n) {
    MPoly s = a.lc();
    int shift = a.deg() - n;
    a = sub_shifted(scale(a, b.lc()), b, s, shift);
    --e;
  }
  if (e > 0) {
    MPoly f = b.lc().pow(static_cast<unsigned>(e));
    a = scale(a, f);
  }
  return a;
}

MPoly content(const Uni& u) {
  std::vector<MPoly> cs;
  for (const auto& ci : u.c) {
    if (!ci.is_zero()) cs.push_back(ci);
  }
  if (cs.empty()) return MPoly();
  MPoly g = cs[0];
  for (size_t i = 1; i + 0 < cs.size(); ++i) g = gcd_impl(g, cs[i]);
  return normalize_monic(g);
}

// Subresultant polynomial remainder sequence on primitive parts.
Uni subresultant_gcd(Uni a, Uni b, const std::string& main) {
  if (a.deg() < b.deg()) std::swap(a, b);
  MPoly g(1), h(1);
  while (true) {
    int delta = a.deg() - b.deg();
    Uni r = prem(a, b);
    if (r.zero()) return b;
    if (r.deg() == 0) {
      Uni one;
      one.c = {MPoly(1)};
      return one;
    }
    a = std::move(b);
    MPoly div = g * h.pow(static_cast<unsigned>(delta));
    b = divide_exact(r, div, "subresultant step");
    g = a.lc();
    if (delta > 0) {
      // h <- g^delta / h^(delta-1)
      MPoly num = g.pow(static_cast<unsigned>(delta));
      if (delta > 1) num = must_divide(num, h.pow(static_cast<unsigned>(delta - 1)), "subresultant h");
      h = num;
    }
  }
}

MPoly rehomogenize(const MPoly& p, const std::string& var, unsigned extra) {
  // p does not use var; pad each term with var^(D - deg) then multiply var^extra
  if (p.is_zero()) return p;
  unsigned D = static_cast<unsigned>(p.total_degree());
  MPoly z = MPoly::variable(var);
  MPoly r;
  // reconstruct term by term through coefficients_in of all variables:
  // simplest route: iterate terms via str round-trip is ugly; use the public
  // terms() accessor instead.
  for (const auto& [e, c] : p.terms()) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    MPoly term(c);
    for (size_t i = 0; i < p.vars().size(); ++i) {
      if (e[i]) term *= MPoly::variable(p.vars()[i]).pow(e[i]);
    }
    r += term * z.pow(D - d + extra);
  }
  return r;
}

unsigned min_exponent_of(const MPoly& p, const std::string& var) {
  auto it = std::find(p.vars().begin(), p.vars().end(), var);
  if (it == p.vars().end()) return 0;
  size_t idx = it - p.vars().begin();
  unsigned m = ~0u;
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[idx]);
  return m;
}

MPoly gcd_impl(const MPoly& p, const MPoly& q) {
  if (p.is_zero()) return normalize_monic(q);
  if (q.is_zero()) return normalize_monic(p);
  if (p.is_constant() || q.is_constant()) return MPoly(1);

  std::vector<std::string> vars = var_union(p, q);
  if (vars.size() > 3) fail(Err::Unsupported, "gcd supports at most 3 variables");

  if (vars.size() == 3 && p.is_homogeneous() && q.is_homogeneous()) {
    const std::string& z = vars.back();
    unsigned a = min_exponent_of(p, z);
    unsigned b = min_exponent_of(q, z);
    unsigned common = std::min(a, b);
    MPoly zp = MPoly::variable(z);
    MPoly ps = a ? must_divide(p, zp.pow(a), "strip z") : p;
    MPoly qs = b ? must_divide(q, zp.pow(b), "strip z") : q;
    std::map<std::string, MPoly> one{{z, MPoly(1)}};
    MPoly g2 = gcd_impl(ps.substitute(one), qs.substitute(one));
    return normalize_monic(rehomogenize(g2, z, common));
  }

  const std::string main = vars.front();
  Uni up = to_uni(p, main);
  Uni uq = to_uni(q, main);
  if (up.deg() == 0 || uq.deg() == 0) {
    // p or q does not actually involve main (it sits entirely in the
    // coefficient ring): gcd via contents only
    MPoly cp = content(up);
    MPoly cq = content(uq);
    return normalize_monic(gcd_impl(cp, cq));
  }
  MPoly cp = content(up);
  MPoly cq = content(uq);
  Uni pp_p = divide_exact(up, cp, "content p");
  Uni pp_q = divide_exact(uq, cq, "content q");
  Uni raw = subresultant_gcd(std::move(pp_p), std::move(pp_q), main);
  MPoly craw = content(raw);
  Uni prim = divide_exact(raw, craw, "primitive part");
  MPoly g = gcd_impl(cp, cq) * from_uni(prim, main);
  return normalize_monic(g);
}

// Coprimality certificate: restrict both cofactors to a random affine line
// and take the univariate gcd; a nonconstant result on every attempt means
// the computed gcd missed a common factor.
bool coprime_on_random_lines(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return true;
  std::vector<std::string> vars = var_union(a, b);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  auto small = [&]() { return Scalar(static_cast<long>(rng() % 19) - 9); };
  MPoly tvar = MPoly::variable("t#cert");
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<std::string, MPoly> line;
    for (const auto& v : vars) line[v] = tvar.times(small()) + MPoly(small());
    MPoly ra = a.substitute(line);
    MPoly rb = b.substitute(line);
    if (static_cast<size_t>(ra.total_degree()) != static_cast<size_t>(a.total_degree()) ||
        static_cast<size_t>(rb.total_degree()) != static_cast<size_t>(b.total_degree())) {
      continue;  // degenerate line, try again
    }
    MPoly g = gcd_impl(ra, rb);
    if (g.is_constant()) return true;
  }
  return false;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& p, const MPoly& q) {
  MPoly g = gcd_impl(p, q);
  if (g.is_zero()) return g;  // both inputs zero
  MPoly cp = must_divide(p, g, "gcd check p");
  MPoly cq = must_divide(q, g, "gcd check q");
  if (!coprime_on_random_lines(cp, cq)) {
    fail(Err::Internal, "gcd certificate failed: cofactors share a factor");
  }
  return g;
}

MPoly mpoly_gcd_many(const std::vector<MPoly>& ps) {
  MPoly g;
  for (const auto& p : ps) g = mpoly_gcd(g, p);
  return g;
}

}  // namespace cusp
