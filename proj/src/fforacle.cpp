#include "cusp/fforacle.hpp"

#include <algorithm>
#include <optional>

namespace cusp {

namespace {

bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned mod_of(const mpz_class& z, unsigned p) {
  unsigned r = static_cast<unsigned>(mpz_fdiv_ui(z.get_mpz_t(), p));
  return r;
}

// Rational mod p; BadPrime when p divides the denominator.
unsigned reduce_rational(const Rational& r, unsigned p) {
  unsigned den = mod_of(r.denominator(), p);
  if (den == 0) fail(Err::BadPrime, "prime divides a denominator");
  unsigned num = mod_of(r.numerator(), p);
  return static_cast<unsigned>((static_cast<unsigned long>(num) * fp_inv(den, p)) % p);
}

unsigned reduce_scalar(const Scalar& s, unsigned p, int root_index) {
  if (s.is_rational()) return reduce_rational(s.as_rational(), p);
  const QuadExt& q = s.as_quadext();
  auto roots = minpoly_roots_mod_p(q.context(), p);
  if (roots.empty()) fail(Err::NonSplitPrime, "minimal polynomial has no root mod p");
  unsigned root = roots[static_cast<size_t>(root_index) % roots.size()];
  unsigned a = reduce_rational(q.base(), p);
  unsigned b = reduce_rational(q.ext(), p);
  return static_cast<unsigned>((a + static_cast<unsigned long>(b) * root) % p);
}

}  // namespace

unsigned fp_inv(unsigned a, unsigned p) {
  if (a % p == 0) fail(Err::DivisionByZero, "inverse of zero mod p");
  unsigned long r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

std::vector<unsigned> minpoly_roots_mod_p(const MinPoly& ctx, unsigned p) {
  std::vector<unsigned> roots;
  unsigned pp, qq;
  try {
    pp = reduce_rational(ctx.p(), p);
    qq = reduce_rational(ctx.q(), p);
  } catch (const Error&) {
    return roots;  // context does not reduce: treat as non-split
  }
  for (unsigned r = 0; r < p; ++r) {
    // r^2 - pp*r - qq = 0 mod p
    unsigned long lhs = (static_cast<unsigned long>(r) * r) % p;
    unsigned long rhs = (static_cast<unsigned long>(pp) * r + qq) % p;
    if (lhs == rhs) roots.push_back(r);
  }
  return roots;
}

unsigned FpCubic::eval(const std::array<unsigned, 4>& pt) const {
  const auto& monos = cubic_monomials();
  unsigned long acc = 0;
  for (size_t k = 0; k < monos.size(); ++k) {
    if (c[k] == 0) continue;
    unsigned long t = c[k];
    for (int i = 0; i < 4; ++i) {
      for (unsigned e = 0; e < monos[k][i]; ++e) t = t * pt[i] % p;
    }
    acc = (acc + t) % p;
  }
  return static_cast<unsigned>(acc);
}

FpCubic reduce_surface_mod_p(const CubicSurface& S, unsigned p, int root_index) {
  if (!is_small_prime(p) || p > kMaxOraclePrime || p < 5) {
    fail(Err::BadPrime, "oracle primes are 5 <= p <= 31");
  }
  FpCubic out;
  out.p = p;
  const auto& monos = cubic_monomials();
  for (size_t k = 0; k < monos.size(); ++k) {
    std::map<std::string, unsigned> mono;
    for (int i = 0; i < 4; ++i) {
      if (monos[k][i]) mono[kSurfaceVars[i]] = monos[k][i];
    }
    out.c[k] = reduce_scalar(S.form().coefficient_of(mono), p, root_index);
  }
  bool all_zero = std::all_of(out.c.begin(), out.c.end(), [](unsigned x) { return x == 0; });
  if (all_zero) fail(Err::BadPrime, "surface vanishes mod p");
  return out;
}

std::array<unsigned, 4> reduce_point_mod_p(const ProjPoint& pt, unsigned p, int root_index) {
  // clear denominators and strip the common numerator content so the
  // representative is primitive before reduction
  mpz_class lcm_den = 1;
  std::optional<MinPoly> ctx;
  for (const auto& c : pt) {
    if (c.is_rational()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.as_rational().denominator().get_mpz_t());
    } else {
      ctx = c.as_quadext().context();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.as_quadext().base().denominator().get_mpz_t());
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.as_quadext().ext().denominator().get_mpz_t());
    }
  }
  // integer pairs (a_i, b_i) with coordinate = a_i + b_i * alpha
  std::array<mpz_class, 4> ai, bi;
  for (int i = 0; i < 4; ++i) {
    if (pt[i].is_rational()) {
      ai[i] = pt[i].as_rational().numerator() * (lcm_den / pt[i].as_rational().denominator());
      bi[i] = 0;
    } else {
      const QuadExt& q = pt[i].as_quadext();
      ai[i] = q.base().numerator() * (lcm_den / q.base().denominator());
      bi[i] = q.ext().numerator() * (lcm_den / q.ext().denominator());
    }
  }
  mpz_class content = 0;
  for (int i = 0; i < 4; ++i) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ai[i].get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), bi[i].get_mpz_t());
  }
  if (content == 0) fail(Err::BadReduction, "zero point");
  unsigned root = 0;
  if (ctx) {
    auto roots = minpoly_roots_mod_p(*ctx, p);
    if (roots.empty()) fail(Err::NonSplitPrime, "minimal polynomial has no root mod p");
    root = roots[static_cast<size_t>(root_index) % roots.size()];
  }
  std::array<unsigned, 4> out{};
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    mpz_class a = ai[i] / content, b = bi[i] / content;
    unsigned v = static_cast<unsigned>(
        (mod_of(a, p) + static_cast<unsigned long>(mod_of(b, p)) * root) % p);
    out[i] = v;
    if (v) nonzero = true;
  }
  if (!nonzero) fail(Err::BadReduction, "point vanishes mod p");
  return out;
}

FpLine reduce_line_mod_p(const ProjLine& l, unsigned p, int root_index) {
  FpLine out{reduce_point_mod_p(l.a(), p, root_index),
             reduce_point_mod_p(l.b(), p, root_index)};
  auto pl = fp_pluecker(out, p);
  bool nonzero = std::any_of(pl.begin(), pl.end(), [](unsigned x) { return x != 0; });
  if (!nonzero) fail(Err::BadReduction, "spanning points collide mod p");
  return out;
}

std::array<unsigned, 6> fp_pluecker(const FpLine& l, unsigned p) {
  auto mm = [&](int i, int j) {
    unsigned long x = static_cast<unsigned long>(l.a[i]) * l.b[j] % p;
    unsigned long y = static_cast<unsigned long>(l.a[j]) * l.b[i] % p;
    return static_cast<unsigned>((x + p - y) % p);
  };
  return {mm(0, 1), mm(0, 2), mm(0, 3), mm(1, 2), mm(1, 3), mm(2, 3)};
}

bool fp_lines_meet(const FpLine& l1, const FpLine& l2, unsigned p) {
  auto a = fp_pluecker(l1, p);
  auto b = fp_pluecker(l2, p);
  unsigned long acc = 0;
  acc += static_cast<unsigned long>(a[0]) * b[5] + static_cast<unsigned long>(a[2]) * b[3] +
         static_cast<unsigned long>(a[5]) * b[0] + static_cast<unsigned long>(a[3]) * b[2];
  unsigned long neg = static_cast<unsigned long>(a[1]) * b[4] +
                      static_cast<unsigned long>(a[4]) * b[1];
  return (acc % p) == (neg % p);
}

bool fp_same_line(const FpLine& l1, const FpLine& l2, unsigned p) {
  auto a = fp_pluecker(l1, p);
  auto b = fp_pluecker(l2, p);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      unsigned long x = static_cast<unsigned long>(a[i]) * b[j] % p;
      unsigned long y = static_cast<unsigned long>(a[j]) * b[i] % p;
      if (x != y) return false;
    }
  }
  return true;
}

bool fp_line_on_surface(const FpCubic& S, const FpLine& l) {
  // four distinct points of the line determine the binary cubic
  unsigned p = S.p;
  auto comb = [&](unsigned s, unsigned t) {
    std::array<unsigned, 4> pt;
    for (int i = 0; i < 4; ++i) {
      pt[i] = static_cast<unsigned>(
          (static_cast<unsigned long>(s) * l.a[i] + static_cast<unsigned long>(t) * l.b[i]) % p);
    }
    return pt;
  };
  if (S.eval(l.a) != 0) return false;
  if (S.eval(l.b) != 0) return false;
  if (S.eval(comb(1, 1)) != 0) return false;
  return S.eval(comb(1, 2)) == 0;
}

size_t total_line_count(unsigned p) {
  size_t p2 = static_cast<size_t>(p) * p;
  return (p2 + 1) * (p2 + p + 1);
}

namespace {

// Lines of P^3(F_p) indexed by their canonical reduced-echelon basis:
// pivot columns j1 < j2, free entries elsewhere. Deterministic flat order.
struct RrefBlock {
  int j1, j2;
  std::array<int, 2> free1;  // free columns of row 1 (after j1, not j2); -1 unused
  std::array<int, 2> free2;  // free columns of row 2 (after j2)
  int n1, n2;                // number of free entries per row
  size_t size;               // p^(n1+n2)
};

std::vector<RrefBlock> rref_blocks(unsigned p) {
  std::vector<RrefBlock> blocks;
  for (int j1 = 0; j1 < 4; ++j1) {
    for (int j2 = j1 + 1; j2 < 4; ++j2) {
      RrefBlock b{j1, j2, {-1, -1}, {-1, -1}, 0, 0, 1};
      for (int c = j1 + 1; c < 4; ++c) {
        if (c == j2) continue;
        b.free1[b.n1++] = c;
      }
      for (int c = j2 + 1; c < 4; ++c) {
        b.free2[b.n2++] = c;
      }
      for (int k = 0; k < b.n1 + b.n2; ++k) b.size *= p;
      blocks.push_back(b);
    }
  }
  return blocks;
}

FpLine line_from_index(const RrefBlock& b, size_t idx, unsigned p) {
  FpLine l{{0, 0, 0, 0}, {0, 0, 0, 0}};
  l.a[b.j1] = 1;
  l.b[b.j2] = 1;
  for (int k = 0; k < b.n1; ++k) {
    l.a[b.free1[k]] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  for (int k = 0; k < b.n2; ++k) {
    l.b[b.free2[k]] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  return l;
}

}  // namespace

std::vector<FpLine> enumerate_lines_serial(const FpCubic& S) {
  std::vector<FpLine> out;
  for (const auto& b : rref_blocks(S.p)) {
    for (size_t idx = 0; idx < b.size; ++idx) {
      FpLine l = line_from_index(b, idx, S.p);
      if (fp_line_on_surface(S, l)) out.push_back(l);
    }
  }
  return out;
}

std::vector<FpLine> enumerate_lines(const FpCubic& S) {
  std::vector<FpLine> out;
  for (const auto& b : rref_blocks(S.p)) {
    std::vector<unsigned char> hit(b.size, 0);
    long n = static_cast<long>(b.size);
#ifdef CUSP_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long idx = 0; idx < n; ++idx) {
      FpLine l = line_from_index(b, static_cast<size_t>(idx), S.p);
      if (fp_line_on_surface(S, l)) hit[static_cast<size_t>(idx)] = 1;
    }
    for (size_t idx = 0; idx < b.size; ++idx) {
      if (hit[idx]) out.push_back(line_from_index(b, idx, S.p));
    }
  }
  return out;
}

int count_transversals(const FpCubic& S, const FpLine& l1, const FpLine& l2,
                       const std::vector<FpLine>& lines) {
  unsigned p = S.p;
  if (fp_same_line(l1, l2, p)) fail(Err::BadReduction, "the two lines coincide mod p");
  if (fp_lines_meet(l1, l2, p)) fail(Err::BadReduction, "lines are not skew mod p");
  int count = 0;
  for (const auto& l : lines) {
    if (fp_lines_meet(l, l1, p) && fp_lines_meet(l, l2, p)) ++count;
  }
  return count;
}

std::vector<FpLine> transversals_on_surface(const FpCubic& S, const FpLine& l1,
                                            const FpLine& l2) {
  unsigned p = S.p;
  if (fp_lines_meet(l1, l2, p)) fail(Err::BadReduction, "lines are not skew mod p");
  std::vector<FpLine> out;
  auto point_on = [&](const FpLine& l, unsigned s, unsigned t) {
    std::array<unsigned, 4> pt;
    for (int i = 0; i < 4; ++i) {
      pt[i] = static_cast<unsigned>(
          (static_cast<unsigned long>(s) * l.a[i] + static_cast<unsigned long>(t) * l.b[i]) % p);
    }
    return pt;
  };
  // (p+1)^2 chords: a point on each line spans each candidate transversal
  for (unsigned i = 0; i <= p; ++i) {
    auto a = i == p ? point_on(l1, 0, 1) : point_on(l1, 1, i);
    for (unsigned j = 0; j <= p; ++j) {
      auto b = j == p ? point_on(l2, 0, 1) : point_on(l2, 1, j);
      FpLine chord{a, b};
      if (fp_line_on_surface(S, chord)) out.push_back(chord);
    }
  }
  return out;
}

bool fp_plane_contains_line(const std::array<unsigned, 4>& h, const FpLine& l, unsigned p) {
  unsigned long da = 0, db = 0;
  for (int i = 0; i < 4; ++i) {
    da += static_cast<unsigned long>(h[i]) * l.a[i] % p;
    db += static_cast<unsigned long>(h[i]) * l.b[i] % p;
  }
  return da % p == 0 && db % p == 0;
}

namespace {

std::vector<std::pair<std::array<unsigned, 4>, unsigned>> gradient_terms(const FpCubic& S,
                                                                         int var) {
  std::vector<std::pair<std::array<unsigned, 4>, unsigned>> terms;
  const auto& monos = cubic_monomials();
  for (size_t k = 0; k < monos.size(); ++k) {
    if (S.c[k] == 0 || monos[k][var] == 0) continue;
    std::array<unsigned, 4> e = monos[k];
    unsigned coeff = static_cast<unsigned>(
        static_cast<unsigned long>(S.c[k]) * e[var] % S.p);
    if (coeff == 0) continue;
    e[var] -= 1;
    terms.emplace_back(e, coeff);
  }
  return terms;
}

unsigned eval_terms(const std::vector<std::pair<std::array<unsigned, 4>, unsigned>>& terms,
                    const std::array<unsigned, 4>& pt, unsigned p) {
  unsigned long acc = 0;
  for (const auto& [e, c] : terms) {
    unsigned long t = c;
    for (int i = 0; i < 4; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t = t * pt[i] % p;
    }
    acc = (acc + t) % p;
  }
  return static_cast<unsigned>(acc);
}

std::array<unsigned, 4> point_from_index(unsigned p, int lead, size_t idx) {
  std::array<unsigned, 4> pt{0, 0, 0, 0};
  pt[lead] = 1;
  for (int i = lead + 1; i < 4; ++i) {
    pt[i] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  return pt;
}

template <class Fn>
std::optional<std::array<unsigned, 4>> scan_points(const FpCubic& S, bool parallel, Fn&& singular) {
  unsigned p = S.p;
  for (int lead = 0; lead < 4; ++lead) {
    size_t n = 1;
    for (int i = lead + 1; i < 4; ++i) n *= p;
    if (!parallel) {
      for (size_t idx = 0; idx < n; ++idx) {
        auto pt = point_from_index(p, lead, idx);
        if (singular(pt)) return pt;
      }
    } else {
      long found = -1;
      long ln = static_cast<long>(n);
#ifdef CUSP_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long idx = 0; idx < ln; ++idx) {
        auto pt = point_from_index(p, lead, static_cast<size_t>(idx));
        if (singular(pt)) {
#ifdef CUSP_HAVE_OPENMP
#pragma omp critical
#endif
          {
            if (found < 0 || idx < found) found = idx;
          }
        }
      }
      if (found >= 0) return point_from_index(p, lead, static_cast<size_t>(found));
    }
  }
  return std::nullopt;
}

std::optional<std::array<unsigned, 4>> scan_impl(const FpCubic& S, bool parallel) {
  std::array<std::vector<std::pair<std::array<unsigned, 4>, unsigned>>, 4> grads;
  for (int v = 0; v < 4; ++v) grads[v] = gradient_terms(S, v);
  auto singular = [&](const std::array<unsigned, 4>& pt) {
    for (int v = 0; v < 4; ++v) {
      if (eval_terms(grads[v], pt, S.p) != 0) return false;
    }
    return true;
  };
  return scan_points(S, parallel, singular);
}

}  // namespace

std::optional<std::array<unsigned, 4>> scan_singular_serial(const FpCubic& S) {
  return scan_impl(S, false);
}

std::optional<std::array<unsigned, 4>> scan_singular(const FpCubic& S) {
  return scan_impl(S, true);
}

ScreenReport smoothness_screen(const CubicSurface& S, const std::vector<unsigned>& primes) {
  ScreenReport rep;
  int usable = 0;
  for (unsigned p : primes) {
    ScreenResult r;
    r.p = p;
    try {
      FpCubic Sp = reduce_surface_mod_p(S, p);
      r.usable = true;
      ++usable;
      auto pt = scan_singular(Sp);
      if (pt) {
        r.singular_found = true;
        r.point = *pt;
        rep.any_singular = true;
      }
    } catch (const Error&) {
      r.usable = false;
    }
    rep.per_prime.push_back(r);
  }
  if (usable == 0) fail(Err::NoGoodPrime, "every requested prime fails to reduce the surface");
  rep.heuristic_pass = !rep.any_singular;
  return rep;
}

std::vector<unsigned> good_split_primes(const CubicSurface& S, int count) {
  std::vector<unsigned> out;
  for (unsigned p = 5; p <= kMaxOraclePrime && static_cast<int>(out.size()) < count; ++p) {
    if (!is_small_prime(p)) continue;
    try {
      reduce_surface_mod_p(S, p);
      out.push_back(p);
    } catch (const Error&) {
      continue;
    }
  }
  if (out.empty()) fail(Err::NoGoodPrime, "no usable prime up to 31");
  return out;
}

}  // namespace cusp
