#ifndef SELBERGLAB_SFUNCTION_HPP
#define SELBERGLAB_SFUNCTION_HPP

#include "selberglab/core.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace selberglab {

struct STerm {
    ExactReal frequency;      // nu_j, strictly increasing across the list
    ExactComplex coefficient; // a_j, nonzero
};

// S(s) = sum_j a_j e^{i pi nu_j s}; for degree 2 the frequencies span [-1, 1]
struct SFunctionExpansion {
    std::vector<STerm> terms;
    int float_merges = 0;  // frequency merges decided by tolerance, float mode only

    std::complex<double> eval(std::complex<double> s) const;
    bool frequency_symmetric(double tol = 1e-12) const;  // nu_j = -nu_{N-j}
};

// expansion of the product 2^r prod_j sin(pi(lambda_j s + mu_j))
SFunctionExpansion s_expansion(const GammaFactor& gamma);

struct HFunctionHandle {
    GammaFactor gamma;
    bool omega_F_multiplier = false;  // h_F = omega_F h_gamma instead of h_gamma
};

struct pole_error : std::runtime_error {
    std::size_t factor_index;
    pole_error(const std::string& what, std::size_t j) : std::runtime_error(what), factor_index(j) {}
};

// h_gamma(s) = prod lambda_j^{2i Im mu_j} (2pi)^{-r} Q^{1-2s}
//              prod Gamma(lambda_j(1-s) + conj(mu_j)) Gamma(1 - lambda_j s - mu_j),
// evaluated through log-Gamma sums.  Throws pole_error at Gamma poles and
// std::domain_error for |Im s| > 50.
std::complex<double> eval_h(const HFunctionHandle& handle, std::complex<double> s);

// log h (principal determination of each Gamma factor); no height restriction,
// for callers that combine it with other log-scale quantities
std::complex<double> eval_h_log(const HFunctionHandle& handle, std::complex<double> s);

// h_gamma(s) S_gamma(s) gamma(s)/gamma(1-s) - 1; zero up to rounding for every
// valid gamma-factor.
std::complex<double> reflection_residual(const GammaFactor& gamma, std::complex<double> s);

// R(s) = S_F(s)/S_gamma(s); throws std::domain_error at zeros of S_gamma.
std::complex<double> r_ratio(const SFunctionExpansion& F_exp, const SFunctionExpansion& gamma_exp,
                             std::complex<double> s);

struct DecayReport {
    std::vector<double> t;
    std::vector<double> log_abs;  // log|R(sigma+it) - 1|
    double slope = 0.0;           // least-squares slope of log_abs against t
    bool identically_one = false;
    bool exponential_decay = false;
};

// samples |R - 1| along sigma + i t_grid and fits a decay rate
DecayReport decay_diagnostic(const SFunctionExpansion& F_exp, const SFunctionExpansion& gamma_exp,
                             double sigma, const std::vector<double>& t_grid);

}  // namespace selberglab

#endif
