#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusp/parametrizer.hpp"
#include "cusp/surface.hpp"

namespace cusp {

// JSON problem file: polynomial strings, scalar-literal line entries, an
// optional quadratic field [1, p, q] (alpha^2 = p*alpha + q), an optional
// plane expression, and options (primes, chart).
struct ProblemFile {
  std::optional<MinPoly> field;
  std::optional<CubicSurface> surface;
  std::vector<std::pair<std::string, ProjLine>> lines;  // insertion order = file order
  std::optional<ProjPlane> plane;
  std::optional<std::array<ProjPoint, 3>> chart;
  std::vector<unsigned> primes;

  const ProjLine* find_line(const std::string& name) const;
};

ProblemFile load_problem(const std::string& path);
ProblemFile parse_problem(const std::string& json_text);

// Resolves l1, l2 (required) and m: the named "m" when present, otherwise
// the first other line (by name) lying on the surface and meeting both.
ParamInput to_param_input(const ProblemFile& pf);

LineTriple to_triple(const ProblemFile& pf);

ProjPlane parse_plane(const std::string& expr, const std::optional<MinPoly>& field);
std::string plane_str(const ProjPlane& h);

}  // namespace cusp
