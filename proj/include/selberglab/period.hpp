#ifndef SELBERGLAB_PERIOD_HPP
#define SELBERGLAB_PERIOD_HPP

#include "selberglab/core.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace selberglab {

// effective q-expansion f(z) = sum_n c(n) e^{2 pi i n z} with c(n) = a(n) n^lambda
struct QExpansion {
    std::vector<std::complex<double>> c;  // c[0] is c(1)
    std::complex<double> lambda{0.0, 0.0};
    double c_growth = 6.0;  // |c(n)| <= n^c_growth, checked on the stored prefix
    bool finite = false;    // true when the stored prefix is the whole series

    int n_max() const { return static_cast<int>(c.size()); }
    void validate() const;  // throws std::invalid_argument on a growth-bound violation
};

// tau(1..n_max) of the weight-12 cusp form, exact integers
std::vector<Integer> delta_tau(int n_max);

// effective expansion of the normalized weight-12 form: c(n) = tau(n), lambda = 11/2
QExpansion delta_expansion(int n_max);

// divisor-function expansion: c(n) = d(n), lambda = 0
QExpansion divisor_expansion(int n_max);

struct PeriodPoint {
    std::complex<double> z;   // Im z > 0
    int truncation = 0;       // terms actually summed
    double tail_bound = 0.0;  // certified bound on the dropped tail
};

struct insufficient_coefficients : std::runtime_error {
    int required_n_max;
    explicit insufficient_coefficients(int required)
        : std::runtime_error("q-expansion prefix too short; need n_max >= " +
                             std::to_string(required)),
          required_n_max(required) {}
};

// truncated f(z) with a certified geometric tail bound <= 1e-12 of the partial
// sum; throws insufficient_coefficients with the n_max that would suffice
std::complex<double> eval_f(const QExpansion& q, std::complex<double> z,
                            PeriodPoint* info = nullptr);

// psi(z) = f(z) - z^{-2 lambda - 1} f(-1/z), principal branch on the upper half-plane
std::complex<double> eval_psi(const QExpansion& q, std::complex<double> z);

// psi(z) - psi(z+1) - (z+1)^{-2 lambda - 1} psi(z/(z+1)); vanishes to truncation
// accuracy for any 1-periodic f, which exercises the branch bookkeeping only
std::complex<double> three_term_residual(const QExpansion& q, std::complex<double> lambda,
                                         std::complex<double> z);

// mean square over a period, sum |c(n)|^2 e^{-4 pi n y}; diverges as y drops to 0
// whenever the series has the real line as a natural boundary
double mean_square(const QExpansion& q, double y);

}  // namespace selberglab

#endif
