#include "cusp/problem.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cusp/expr.hpp"

namespace cusp {

using nlohmann::json;

namespace {

ProjPoint parse_point(const json& arr, const std::optional<MinPoly>& field,
                      const std::string& where) {
  if (!arr.is_array() || arr.size() != 4) {
    fail(Err::BadInput, where + ": a point needs exactly 4 scalar entries");
  }
  ProjPoint p;
  for (int i = 0; i < 4; ++i) {
    if (!arr[i].is_string()) fail(Err::BadInput, where + ": point entries are strings");
    p[i] = parse_scalar(arr[i].get<std::string>(), field);
  }
  return p;
}

ProjLine parse_line(const json& spec, const std::optional<MinPoly>& field,
                    const std::string& name) {
  if (!spec.is_array() || spec.size() != 2) {
    fail(Err::BadInput, "line '" + name + "' needs exactly two points");
  }
  return ProjLine(parse_point(spec[0], field, "line " + name),
                  parse_point(spec[1], field, "line " + name));
}

}  // namespace

const ProjLine* ProblemFile::find_line(const std::string& name) const {
  for (const auto& [n, l] : lines) {
    if (n == name) return &l;
  }
  return nullptr;
}

ProjPlane parse_plane(const std::string& expr, const std::optional<MinPoly>& field) {
  MPoly p = parse_poly(expr, field, {kSurfaceVars.begin(), kSurfaceVars.end()});
  if (p.is_zero() || !p.is_homogeneous() || p.total_degree() != 1) {
    fail(Err::BadInput, "plane must be a nonzero homogeneous linear form: " + expr);
  }
  ProjPlane h;
  for (int i = 0; i < 4; ++i) {
    h[i] = p.coefficient_of({{kSurfaceVars[i], 1}});
  }
  return h;
}

std::string plane_str(const ProjPlane& h) {
  MPoly p;
  for (int i = 0; i < 4; ++i) p += MPoly::variable(kSurfaceVars[i]).times(h[i]);
  return p.str();
}

ProblemFile parse_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("problem file is not valid JSON: ") + e.what());
  }
  ProblemFile pf;
  if (j.contains("field") && !j["field"].is_null()) {
    const auto& f = j["field"];
    if (!f.is_array() || f.size() != 3 || !f[0].is_number_integer() || f[0].get<long>() != 1) {
      fail(Err::BadInput, "field must be [1, p, q] with integer entries");
    }
    pf.field = MinPoly(Rational(f[1].get<long>()), Rational(f[2].get<long>()));
  }
  if (j.contains("surface")) {
    if (!j["surface"].is_string()) fail(Err::BadInput, "surface must be a string expression");
    MPoly form = parse_poly(j["surface"].get<std::string>(), pf.field,
                            {kSurfaceVars.begin(), kSurfaceVars.end()});
    pf.surface = CubicSurface(form);
  }
  if (j.contains("lines")) {
    if (!j["lines"].is_object()) fail(Err::BadInput, "lines must be an object");
    std::vector<std::string> names;
    for (auto it = j["lines"].begin(); it != j["lines"].end(); ++it) names.push_back(it.key());
    std::sort(names.begin(), names.end());
    for (const auto& n : names) {
      pf.lines.emplace_back(n, parse_line(j["lines"][n], pf.field, n));
    }
  }
  if (j.contains("plane") && !j["plane"].is_null()) {
    if (!j["plane"].is_string()) fail(Err::BadInput, "plane must be a string expression");
    pf.plane = parse_plane(j["plane"].get<std::string>(), pf.field);
  }
  if (j.contains("options") && j["options"].is_object()) {
    const auto& o = j["options"];
    if (o.contains("primes")) {
      for (const auto& p : o["primes"]) pf.primes.push_back(p.get<unsigned>());
    }
    if (o.contains("chart") && !o["chart"].is_null()) {
      const auto& c = o["chart"];
      if (!c.is_array() || c.size() != 3) fail(Err::BadInput, "chart needs three points");
      pf.chart = std::array<ProjPoint, 3>{parse_point(c[0], pf.field, "chart"),
                                          parse_point(c[1], pf.field, "chart"),
                                          parse_point(c[2], pf.field, "chart")};
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::BadInput, "cannot open problem file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

ParamInput to_param_input(const ProblemFile& pf) {
  if (!pf.surface) fail(Err::BadInput, "problem file has no surface");
  const ProjLine* l1 = pf.find_line("l1");
  const ProjLine* l2 = pf.find_line("l2");
  if (!l1 || !l2) fail(Err::BadInput, "problem file must name lines l1 and l2");
  std::optional<ProjLine> m;
  if (const ProjLine* named = pf.find_line("m")) {
    m = *named;
  } else {
    // first candidate (by name) on the surface meeting both
    for (const auto& [n, cand] : pf.lines) {
      if (n == "l1" || n == "l2") continue;
      if (contains_line(*pf.surface, cand) && lines_meet(cand, *l1) && lines_meet(cand, *l2)) {
        m = cand;
        break;
      }
    }
  }
  return ParamInput{*pf.surface, *l1, *l2, m, pf.plane, pf.chart};
}

LineTriple to_triple(const ProblemFile& pf) {
  const ProjLine* l1 = pf.find_line("l1");
  const ProjLine* l2 = pf.find_line("l2");
  const ProjLine* m = pf.find_line("m");
  if (!l1 || !l2 || !m) fail(Err::BadInput, "triple needs lines l1, l2 and m");
  return LineTriple(*l1, *l2, *m);
}

}  // namespace cusp
