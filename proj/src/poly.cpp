#include "dgar/poly.hpp"

namespace dgar {

Poly Poly::constant(const Field& f, int nvars, const Elem& c) {
  Poly p(f, nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(const Field& f, int nvars, int i) {
  Poly p(f, nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, f.one());
  return p;
}

void Poly::add_term(const std::vector<int>& e, const Elem& c) {
  if (field_.is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, field_.normalize(c));
  } else {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::add(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
  Poly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = field_.neg(c);
  return r;
}

Poly Poly::scale(const Elem& c) const {
  Poly r(field_, nvars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = field_.mul(v, c);
  return r;
}

Poly Poly::mul(const Poly& o) const {
  Poly r(field_, nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, field_.mul(c1, c2));
    }
  return r;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::substitute(int var, const Elem& value) const {
  Poly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Elem coeff = c;
    for (int k = 0; k < e[var]; ++k) coeff = field_.mul(coeff, value);
    std::vector<int> e2 = e;
    e2[var] = 0;
    r.add_term(e2, coeff);
  }
  return r;
}

Elem Poly::eval(const Vec& point) const {
  Elem s(0);
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t = field_.mul(t, point[i]);
    s = field_.add(s, t);
  }
  return s;
}

namespace {
Poly det_rec(const std::vector<std::vector<Poly>>& m, std::vector<int>& cols, int row,
             const Field& f, int nvars) {
  if (cols.empty()) return Poly::constant(f, nvars, f.one());
  Poly acc(f, nvars);
  for (size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    int c = cols[k];
    cols.erase(cols.begin() + k);
    Poly minor = det_rec(m, cols, row + 1, f, nvars);
    cols.insert(cols.begin() + k, c);
    Poly term = entry.mul(minor);
    if (k % 2 == 1) term = term.neg();
    acc = acc.add(term);
  }
  return acc;
}
}  // namespace

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  if (m.empty()) throw ValidationError("poly_det of empty matrix");
  const Poly& p0 = m[0][0];
  std::vector<int> cols;
  for (size_t j = 0; j < m.size(); ++j) cols.push_back(int(j));
  for (const auto& row : m)
    if (row.size() != m.size()) throw ValidationError("poly_det needs a square matrix");
  return det_rec(m, cols, 0, p0.field(), p0.nvars());
}

}  // namespace dgar
