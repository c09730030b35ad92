#pragma once

#include <map>
#include <string>
#include <vector>

#include "cartankit/exact_scalar.hpp"
#include "cartankit/dense_matrix.hpp"

namespace cartankit {

// Exponent vector over a fixed variable universe.  Kept at full length so
// that comparisons are plain lexicographic comparisons.
struct Monomial {
  std::vector<unsigned> exp;

  bool operator<(const Monomial& o) const { return exp < o.exp; }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exp) d += e;
    return d;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const ExactScalar& c);
  static Poly variable(int nvars, int var);
  // c * (x_var)^power
  static Poly monomial(int nvars, int var, unsigned power, const ExactScalar& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, ExactScalar>& terms() const { return terms_; }

  void add_term(const Monomial& m, const ExactScalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const ExactScalar& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int var) const;
  ExactScalar eval(const Vec& point) const;
  // Substitute: largest total degree appearing, used for iteration bounds.
  unsigned degree() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Monomial, ExactScalar> terms_;
};

Poly operator*(const ExactScalar& c, const Poly& p);

}  // namespace cartankit
