#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cusp/projgeom.hpp"
#include "cusp/surface.hpp"

namespace cusp {

// Brute-force laboratory over small prime fields: reduce exact data mod p,
// enumerate every line of P^3(F_p) on the surface, count transversals,
// scan for singular points. Primes up to 31 are supported; the scans are
// O(p^4)-ish which is ample at this scale.
inline constexpr unsigned kMaxOraclePrime = 31;

struct FpLine {
  std::array<unsigned, 4> a, b;
  friend bool operator==(const FpLine&, const FpLine&) = default;
};

struct FpCubic {
  unsigned p = 0;
  std::array<unsigned, 20> c{};  // aligned with cubic_monomials()

  unsigned eval(const std::array<unsigned, 4>& pt) const;
};

unsigned fp_inv(unsigned a, unsigned p);

// Roots of the context's minimal polynomial mod p (0, 1 or 2 of them).
std::vector<unsigned> minpoly_roots_mod_p(const MinPoly& ctx, unsigned p);

// Coefficientwise reduction; alpha maps to the chosen root (root_index
// picks which embedding). Throws BadPrime when p divides a denominator and
// NonSplitPrime when the minimal polynomial has no root mod p.
FpCubic reduce_surface_mod_p(const CubicSurface& S, unsigned p, int root_index = 0);

FpLine reduce_line_mod_p(const ProjLine& l, unsigned p, int root_index = 0);

// Primitive integer representative reduced mod p; throws BadReduction when
// the whole point dies mod p.
std::array<unsigned, 4> reduce_point_mod_p(const ProjPoint& pt, unsigned p, int root_index = 0);

std::array<unsigned, 6> fp_pluecker(const FpLine& l, unsigned p);
bool fp_lines_meet(const FpLine& l1, const FpLine& l2, unsigned p);
bool fp_same_line(const FpLine& l1, const FpLine& l2, unsigned p);
bool fp_line_on_surface(const FpCubic& S, const FpLine& l);

// All lines of P^3(F_p) lying on S, one canonical (reduced-echelon)
// representative each, in a fixed deterministic order.
std::vector<FpLine> enumerate_lines_serial(const FpCubic& S);
std::vector<FpLine> enumerate_lines(const FpCubic& S);  // OpenMP, same output

size_t total_line_count(unsigned p);  // (p^2+1)(p^2+p+1)

// Number of enumerated lines meeting both (the lines themselves never
// qualify: each is skew to the other). Pre: l1, l2 distinct and skew mod p.
int count_transversals(const FpCubic& S, const FpLine& l1, const FpLine& l2,
                       const std::vector<FpLine>& lines);

// Direct (p+1)^2 chord scan for the transversal lines of the pair on S;
// cheaper than full enumeration when only the pair matters.
std::vector<FpLine> transversals_on_surface(const FpCubic& S, const FpLine& l1,
                                            const FpLine& l2);

bool fp_plane_contains_line(const std::array<unsigned, 4>& h, const FpLine& l, unsigned p);

struct ScreenResult {
  unsigned p = 0;
  bool usable = false;             // reduction worked
  bool singular_found = false;
  std::optional<std::array<unsigned, 4>> point;  // first one in scan order
};

struct ScreenReport {
  std::vector<ScreenResult> per_prime;
  bool any_singular = false;
  bool heuristic_pass = false;  // no singular point mod any tested prime
};

// Exhaustive gradient scan over P^3(F_p) for each prime. Heuristic by
// construction and labeled as such in every consumer.
ScreenReport smoothness_screen(const CubicSurface& S, const std::vector<unsigned>& primes);

std::optional<std::array<unsigned, 4>> scan_singular_serial(const FpCubic& S);
std::optional<std::array<unsigned, 4>> scan_singular(const FpCubic& S);  // OpenMP

// Smallest `count` primes >= 5 where the surface (and its extension
// context, if any) reduces cleanly. Throws NoGoodPrime when none exist.
std::vector<unsigned> good_split_primes(const CubicSurface& S, int count);

}  // namespace cusp
