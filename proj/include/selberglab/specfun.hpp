#ifndef SELBERGLAB_SPECFUN_HPP
#define SELBERGLAB_SPECFUN_HPP

#include "selberglab/exact.hpp"

#include <complex>
#include <vector>

namespace selberglab::specfun {

// Bernoulli numbers B_0..B_n as exact rationals (B_1 = -1/2 convention).
// The table is grown on demand and cached behind a lock; indices up to 40 are
// precomputed on first use.
const Rational& bernoulli_number(unsigned n);

// Coefficients of B_n(x) = sum_k binom(n,k) B_k x^{n-k}.
std::vector<Rational> bernoulli_poly_coeffs(unsigned n);

Rational bernoulli_polynomial(unsigned n, const Rational& x);
GaussianRational bernoulli_polynomial(unsigned n, const GaussianRational& x);
std::complex<double> bernoulli_polynomial(unsigned n, std::complex<double> x);

// Principal-branch complex log Gamma.  Lanczos for Re(s) >= 1/2, reflection
// otherwise.  Throws std::domain_error at nonpositive integers.
std::complex<double> log_gamma(std::complex<double> s);

inline std::complex<double> gamma(std::complex<double> s) { return std::exp(log_gamma(s)); }

// Gamma(n + 1/2) as an exact rational multiple of sqrt(pi); works for any
// integer n via the reflection formula (half-integers are never poles).
PiExact gamma_half_integer(long n);

// x(x-1)...(x-n+1)/n!
Rational generalized_binomial(const Rational& x, unsigned n);
std::complex<double> generalized_binomial(std::complex<double> x, unsigned n);

// E_beta(w) = sum_{l>=0} (-w)^l / Gamma(l+beta); entire in w.  Terms whose
// Gamma argument is a nonpositive integer contribute 0.  Truncated at relative
// 1e-16 against the running maximum of partial sums, hard cap 500 terms.
std::complex<double> eval_mittag_leffler(double beta, std::complex<double> w);

// cos(pi x), sin(pi x) for exact rational x: exact +-1/0 at multiples of 1/2,
// argument reduced mod 2 before evaluation otherwise.
double cospi(const Rational& x);
double sinpi(const Rational& x);

// 1/Gamma(x) for real x, zero at nonpositive integers.
double inv_gamma_real(double x);

}  // namespace selberglab::specfun

#endif
