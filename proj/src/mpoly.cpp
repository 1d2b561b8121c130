#include "cusp/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cusp {

bool GrlexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(ExpVec{}, std::move(c));
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace(ExpVec{1}, Scalar(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec(vars_.size(), 0);
}

Scalar MPoly::constant_value() const {
  if (is_zero()) return Scalar(0);
  if (!is_constant()) fail(Err::Internal, "constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const ExpVec& lead = terms_.begin()->first;  // grlex: leading term has max degree
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0u));
}

int MPoly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  size_t idx = it - vars_.begin();
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  }
  return true;
}

bool MPoly::uses_var(const std::string& var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

Scalar MPoly::leading_coefficient() const {
  if (terms_.empty()) return Scalar(0);
  return terms_.begin()->second;
}

Scalar MPoly::coefficient_of(const std::map<std::string, unsigned>& mono) const {
  ExpVec e(vars_.size(), 0);
  for (const auto& [name, exp] : mono) {
    if (exp == 0) continue;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return Scalar(0);
    e[it - vars_.begin()] = exp;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::vector<std::string> MPoly::merge_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MPoly MPoly::reindexed(const std::vector<std::string>& newvars) const {
  if (newvars == vars_) return *this;
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
    pos[i] = it - newvars.begin();
  }
  MPoly r;
  r.vars_ = newvars;
  for (const auto& [e, c] : terms_) {
    ExpVec ne(newvars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

void MPoly::add_term(const ExpVec& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  // drop variables that no longer occur
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i]) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> keep;
  std::vector<size_t> idx;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) { keep.push_back(vars_[i]); idx.push_back(i); }
  }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    ExpVec ne(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) ne[k] = e[idx[k]];
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(keep);
  terms_ = std::move(nt);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  std::vector<std::string> nv = merge_vars(vars_, o.vars_);
  MPoly a = reindexed(nv);
  MPoly b = o.reindexed(nv);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  a.prune();
  return *this = std::move(a);
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  std::vector<std::string> nv = MPoly::merge_vars(a.vars_, b.vars_);
  MPoly x = a.reindexed(nv);
  MPoly y = b.reindexed(nv);
  MPoly r;
  r.vars_ = nv;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      ExpVec e(nv.size());
      for (size_t i = 0; i < nv.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  r.prune();
  return r;
}

MPoly MPoly::times(const Scalar& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r(*this);
  for (auto& [e, co] : r.terms_) co *= c;
  return r;
}

MPoly MPoly::divided_by(const Scalar& c) const {
  if (c.is_zero()) fail(Err::DivisionByZero, "polynomial scaled by zero");
  MPoly r(*this);
  for (auto& [e, co] : r.terms_) co /= c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(Scalar(1));
  MPoly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& bindings) const {
  // per-variable power tables, built lazily
  std::vector<const MPoly*> bound(vars_.size(), nullptr);
  std::vector<std::vector<MPoly>> powers(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) bound[i] = &it->second;
  }
  auto power = [&](size_t i, unsigned e) -> const MPoly& {
    auto& tab = powers[i];
    if (tab.empty()) {
      tab.push_back(MPoly(Scalar(1)));
      tab.push_back(bound[i] ? *bound[i] : MPoly::variable(vars_[i]));
    }
    while (tab.size() <= e) tab.push_back(tab.back() * tab[1]);
    return tab[e];
  };
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

std::vector<MPoly> MPoly::coefficients_in(const std::string& var) const {
  if (is_zero()) return {MPoly()};
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {*this};
  size_t idx = it - vars_.begin();
  int d = degree_in(var);
  std::vector<MPoly> out(static_cast<size_t>(d) + 1);
  for (const auto& [e, c] : terms_) {
    unsigned k = e[idx];
    ExpVec rest = e;
    rest[idx] = 0;
    MPoly& tgt = out[k];
    if (tgt.vars_ != vars_) tgt = tgt.reindexed(merge_vars(tgt.vars_, vars_));
    tgt.add_term(rest, c);
  }
  for (auto& p : out) p.prune();
  return out;
}

MPoly MPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return MPoly();
  size_t idx = it - vars_.begin();
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    ExpVec ne = e;
    ne[idx] -= 1;
    r.add_term(ne, c * Scalar(static_cast<long>(e[idx])));
  }
  r.prune();
  return r;
}

Scalar MPoly::evaluate(const std::map<std::string, Scalar>& point) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!e[i]) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end()) fail(Err::BadInput, "evaluate: unbound variable " + vars_[i]);
      for (unsigned k = 0; k < e[i]; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const {
  MPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
  r.prune();
  return r;
}

MPoly MPoly::conjugate() const {
  return map_coeffs([](const Scalar& c) { return c.conjugate(); });
}

bool MPoly::all_coeffs_rational() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool neg = c.leading_negative();
    Scalar shown = neg ? -c : c;
    std::string cs = shown.str();
    if (shown.needs_parens()) cs = "(" + cs + ")";
    std::string body;
    if (mono.empty()) {
      body = cs;
    } else if (shown.is_one()) {
      body = mono;
    } else {
      body = cs + "*" + mono;
    }
    if (first) {
      os << (neg ? "-" : "") << body;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
  }
  return os.str();
}

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  if (p.is_zero()) return MPoly();
  if (d.is_constant()) return p.divided_by(d.constant_value());
  std::vector<std::string> nv = MPoly::merge_vars(p.vars_, d.vars_);
  MPoly rem = p.reindexed(nv);
  MPoly div = d.reindexed(nv);
  if (rem.vars_ != div.vars_) {
    // divisor uses a variable absent from p
    return std::nullopt;
  }
  const ExpVec& dlead = div.terms_.begin()->first;
  const Scalar& dc = div.terms_.begin()->second;
  MPoly q;
  q.vars_ = nv;
  while (!rem.terms_.empty()) {
    const ExpVec& rlead = rem.terms_.begin()->first;
    ExpVec diff(nv.size());
    bool divisible = true;
    for (size_t i = 0; i < nv.size(); ++i) {
      if (rlead[i] < dlead[i]) { divisible = false; break; }
      diff[i] = rlead[i] - dlead[i];
    }
    if (!divisible) return std::nullopt;
    Scalar qc = rem.terms_.begin()->second / dc;
    q.add_term(diff, qc);
    // rem -= qc * x^diff * div
    MPoly sub;
    sub.vars_ = nv;
    for (const auto& [e, c] : div.terms_) {
      ExpVec ne(nv.size());
      for (size_t i = 0; i < nv.size(); ++i) ne[i] = e[i] + diff[i];
      sub.add_term(ne, c * qc);
    }
    rem -= sub;
    rem = rem.reindexed(nv);  // keep index space stable during the loop
  }
  q.prune();
  return q;
}

}  // namespace cusp
