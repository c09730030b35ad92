#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cartankit {

// All arithmetic in this library is exact rational arithmetic.  ExactScalar
// is GMP's canonical rational type: every value is kept in lowest terms with
// a positive denominator, so equality is plain equality and there is no
// rounding anywhere in the toolkit.
using ExactScalar = mpq_class;

inline ExactScalar rat(long num, long den = 1) {
  ExactScalar q(num, den);
  q.canonicalize();
  return q;
}

inline ExactScalar rat_from_string(const std::string& text) {
  ExactScalar q(text);
  q.canonicalize();
  return q;
}

inline bool is_zero(const ExactScalar& q) { return sgn(q) == 0; }

// Alias usable inside classes that have their own is_zero() member.
inline bool is_zero_scalar(const ExactScalar& q) { return sgn(q) == 0; }

inline std::string scalar_str(const ExactScalar& q) { return q.get_str(); }

// Exact factorial as a rational (used by Taylor-style coefficients).
inline ExactScalar factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return ExactScalar(f);
}

}  // namespace cartankit
