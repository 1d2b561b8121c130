#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusp/scalar.hpp"

namespace cusp {

using ExpVec = std::vector<unsigned>;

// Graded lexicographic, descending: higher total degree first, ties broken
// by the lexicographically larger exponent vector. map::begin() is the
// leading term.
struct GrlexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Scalar with named variables.
// Canonical form: no zero coefficients, no unused variables, variables
// sorted by name. Binary operations merge variable sets by name.
class MPoly {
 public:
  using TermMap = std::map<ExpVec, Scalar, GrlexDesc>;

  MPoly() = default;  // zero
  explicit MPoly(Scalar c);
  MPoly(long n) : MPoly(Scalar(n)) {}
  static MPoly variable(const std::string& name);
  static MPoly constant(Scalar c) { return MPoly(std::move(c)); }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // 0 for the zero polynomial
  size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for zero
  int degree_in(const std::string& var) const;
  bool is_homogeneous() const;
  bool uses_var(const std::string& var) const;

  Scalar leading_coefficient() const;  // 0 for zero polynomial
  // Coefficient of the monomial given by variable -> exponent (absent = 0).
  Scalar coefficient_of(const std::map<std::string, unsigned>& mono) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly times(const Scalar& c) const;
  MPoly divided_by(const Scalar& c) const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Exact composition; unbound variables pass through.
  MPoly substitute(const std::map<std::string, MPoly>& bindings) const;
  // c0..cd with p = sum c_i * var^i; no c_i mentions var.
  std::vector<MPoly> coefficients_in(const std::string& var) const;
  MPoly derivative(const std::string& var) const;
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;

  MPoly map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const;
  MPoly conjugate() const;
  bool all_coeffs_rational() const;

  // Canonical text: terms sorted graded-lex descending, explicit '*' and '^'.
  std::string str() const;

  friend std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void add_term(const ExpVec& e, const Scalar& c);
  void prune();
  // Reindex this polynomial's exponent vectors onto the given variable list
  // (a superset of vars_).
  MPoly reindexed(const std::vector<std::string>& newvars) const;
  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b);
  friend class MPolyBuilder;
};

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d);

}  // namespace cusp
