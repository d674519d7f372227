#ifndef SELBERGLAB_STRUCTURAL_HPP
#define SELBERGLAB_STRUCTURAL_HPP

#include "selberglab/core.hpp"

#include <complex>
#include <vector>

namespace selberglab {

// a[nu][k]: coefficients of (sum_{k>=3} binom(1/2,k) xi^k)^nu up to xi^{k_max}
std::vector<std::vector<Rational>> akn_table(int k_max);

// r_nu = B_{nu+1}(3/2)/2^nu - (1/2){ sum_k binom(nu+1,k) conj(H(k)) + (-1)^{nu+1} H(nu+1) }
ExactComplex stirling_r(const InvariantSet& inv, int nu);

// series exponential of sum_nu r_nu/(nu(nu+1)) u^nu; returns V[0..h_max], V[0] = 1
std::vector<ExactComplex> v_coefficients(const std::vector<ExactComplex>& r, int h_max);

// A[h][l] with 1/s^h = sum_{l>=h} A[h][l] / (z(z-1)...(z-l+1)), z = 1/2 - 2s,
// as formal series in 1/z; rows h = 1..h_max, columns l = 0..l_max (zero for l < h)
std::vector<std::vector<Rational>> factorial_series(int h_max, int l_max);

struct StructuralSequence {
    enum class Provenance { Pipeline, Oracle, Recursion };
    Provenance provenance = Provenance::Pipeline;
    std::vector<ExactComplex> d;  // d[0..l_max], d[0] = 1
    std::vector<double> spread;   // oracle only: per-l extraction spread
    bool ill_conditioned = false; // oracle only: spread > 10% of a value
};

// d_l = sum_{h=1}^l A_{h,l} V_h through the exact pipeline
StructuralSequence structural_invariants(const InvariantSet& inv, int l_max);

// independent numeric fit of the same d_l from the asymptotic expansion of the
// h-function along the ray s = -1 + it, t in {T, 2T, 4T}
StructuralSequence oracle_structural_fit(const GammaFactor& gamma, int l_max, double T);

// polynomial in s scaled by a power of sqrt(pi): coeffs[k] s^k * pi^{half_grade/2}
struct BPolynomial {
    std::vector<GaussianRational> coeffs;
    int half_grade = 0;

    bool is_zero() const { return coeffs.empty(); }
    GaussianRational coefficient_at(const Rational& s) const;  // without the pi power
    PiExact value_at(const Rational& s) const;
    std::complex<double> value_at(std::complex<double> s) const;
};

// the B_m(s, l, h) tables assembled from the universal A coefficients
class WmTables {
public:
    explicit WmTables(int m_max);

    int m_max() const { return m_max_; }
    const BPolynomial& B(int m, int l, int h) const;  // zero polynomial outside support

    // W_m(s, alpha) = sum_{2l+h<=m} B_m(s,l,h) d_l alpha^h
    PiExact wm_exact(int m, const Rational& s, const Rational& alpha,
                     const std::vector<Rational>& d) const;
    std::complex<double> wm_eval(int m, std::complex<double> s, std::complex<double> alpha,
                                 const std::vector<std::complex<double>>& d) const;

private:
    int m_max_;
    // indexed [m][l][h] with 2l+h <= m
    std::vector<std::vector<std::vector<BPolynomial>>> table_;
};

struct QuadraticForm {
    int N = 0;
    std::vector<std::vector<Rational>> alpha;  // alpha[l][h], l+h <= N
    PiExact normalization;                     // divisor applied to the raw form

    Rational eval(const std::vector<Rational>& d) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& d) const;
};

// normalized universal quadratic form vanishing on every structural sequence
QuadraticForm quadratic_form(int N);

// bilinear constraint sum for M >= 1, 1 <= p <= 2M; exact component carried
// when the d-sequence is exact
PiValue constraint_residual(const WmTables& tables, const StructuralSequence& d, int M, int p);

// rebuilds d_2..d_{l_max} from d_1 alone by solving Q_N = 0 for d_N
StructuralSequence recursive_d(const ExactComplex& d1, int l_max);

// rho_l(alpha) = e^{i pi/4} a(alpha^2/4)/sqrt(alpha) d_l (-2 pi i)^{-l} alpha^{-l};
// throws std::domain_error when alpha is not in the coefficient spectrum
std::complex<double> twist_residue(const LFunctionData& F, double alpha, int l);

}  // namespace selberglab

#endif
