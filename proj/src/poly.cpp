#include "cartankit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cartankit {

Poly Poly::constant(int nvars, const ExactScalar& c) {
  Poly p(nvars);
  Monomial m;
  m.exp.assign(static_cast<size_t>(nvars), 0u);
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  return monomial(nvars, var, 1, rat(1));
}

Poly Poly::monomial(int nvars, int var, unsigned power, const ExactScalar& c) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("Poly: variable out of range");
  Poly p(nvars);
  Monomial m;
  m.exp.assign(static_cast<size_t>(nvars), 0u);
  m.exp[static_cast<size_t>(var)] = power;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const ExactScalar& c) {
  if (is_zero_scalar(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (is_zero_scalar(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_ != 0 ? nvars_ : o.nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      m.exp.resize(m1.exp.size());
      for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = m1.exp[i] + m2.exp[i];
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

Poly Poly::operator*(const ExactScalar& c) const {
  Poly r(nvars_);
  if (is_zero_scalar(c)) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("Poly: variable out of range");
  Poly r(nvars_);
  const auto v = static_cast<size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (m.exp[v] == 0) continue;
    Monomial d = m;
    d.exp[v] -= 1;
    r.add_term(d, c * rat(static_cast<long>(m.exp[v])));
  }
  return r;
}

ExactScalar Poly::eval(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Poly::eval: wrong point dimension");
  ExactScalar total = 0;
  for (const auto& [m, c] : terms_) {
    ExactScalar t = c;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, m.degree());
  }
  return d;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << scalar_str(c);
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      out << "*" << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m.exp[i] > 1) out << "^" << m.exp[i];
    }
  }
  return out.str();
}

Poly operator*(const ExactScalar& c, const Poly& p) { return p * c; }

}  // namespace cartankit
