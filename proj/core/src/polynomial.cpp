#include "vecdil/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace vecdil {

MPoly MPoly::constant(size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(size_t nvars, const Expo& e, const Rat& c) {
  MPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("MPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MPoly::eval(const RatVec& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("MPoly::eval: arity mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t i = 0; i < nvars_; ++i)
      for (int p = 0; p < e[i]; ++p) term *= x[i];
    total += term;
  }
  return total;
}

MPoly MPoly::derivative(size_t var) const {
  MPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo de = e;
    --de[var];
    d.add_term(de, c * Rat(e[var]));
  }
  return d;
}

MPoly MPoly::operator+(const MPoly& other) const {
  MPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& other) const {
  MPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& other) const {
  MPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      Expo e(nvars_);
      for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  MPoly r(nvars_);
  for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
  return r;
}

MPoly MPoly::compose_linear(const Mat& m) const {
  if (m.rows() != nvars_) throw std::invalid_argument("compose_linear: shape mismatch");
  size_t out_vars = m.cols();
  // Linear forms for each input variable.
  std::vector<MPoly> forms;
  for (size_t i = 0; i < nvars_; ++i) {
    MPoly f(out_vars);
    for (size_t j = 0; j < out_vars; ++j) {
      Expo e(out_vars, 0);
      e[j] = 1;
      f.add_term(e, m(i, j));
    }
    forms.push_back(std::move(f));
  }
  MPoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(out_vars, c);
    for (size_t i = 0; i < nvars_; ++i)
      for (int p = 0; p < e[i]; ++p) term = term * forms[i];
    result = result + term;
  }
  return result;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int MPoly::degree_in(size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<MPoly::Expo> exponents_up_to(size_t k, int max_total,
                                         const std::vector<int>& per_var_cap) {
  std::vector<MPoly::Expo> out;
  MPoly::Expo e(k, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int remaining) {
    if (pos == k) {
      out.push_back(e);
      return;
    }
    int cap = per_var_cap.empty() ? remaining : std::min(remaining, per_var_cap[pos]);
    for (int v = 0; v <= cap; ++v) {
      e[pos] = v;
      rec(pos + 1, remaining - v);
    }
    e[pos] = 0;
  };
  rec(0, max_total);
  return out;
}

std::optional<MPoly> fit_polynomial(size_t nvars, const std::vector<MPoly::Expo>& basis,
                                    const std::vector<std::pair<RatVec, Rat>>& samples) {
  if (samples.size() < basis.size()) return std::nullopt;
  // Square system on the first |basis| samples; remaining samples act as
  // consistency checks.
  Mat m(basis.size(), basis.size());
  RatVec rhs(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      Rat v = 1;
      for (size_t t = 0; t < nvars; ++t)
        for (int p = 0; p < basis[j][t]; ++p) v *= samples[i].first[t];
      m(i, j) = v;
    }
    rhs[i] = samples[i].second;
  }
  auto coef = solve(m, rhs);
  if (!coef) return std::nullopt;
  MPoly poly(nvars);
  for (size_t j = 0; j < basis.size(); ++j) poly.add_term(basis[j], (*coef)[j]);
  for (size_t i = basis.size(); i < samples.size(); ++i)
    if (poly.eval(samples[i].first) != samples[i].second) return std::nullopt;
  return poly;
}

}  // namespace vecdil
