#ifndef SELBERGLAB_CORE_HPP
#define SELBERGLAB_CORE_HPP

#include "selberglab/exact.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace selberglab {

// Q stored as c * 2^a * pi^b so that conductor-one checks can be exact
// equalities.  a is rational internally (factor duplication shifts it by
// lambda), integral in serialized documents.
struct QExactRep {
    Rational c{1};
    Rational two_exp{0};
    Rational pi_exp{0};
};

struct QRep {
    std::optional<QExactRep> exact;
    double value = 1.0;

    static QRep from_exact(QExactRep e);
    static QRep from_float(double v) { QRep q; q.value = v; return q; }
    bool is_exact() const { return exact.has_value(); }
};

struct GammaTerm {
    ExactReal lambda;  // > 0
    ExactComplex mu;   // Re >= 0
};

struct GammaFactor {
    QRep q;             // the Q-datum of the functional equation
    ExactComplex omega; // |omega| = 1
    std::vector<GammaTerm> factors;

    bool exact_mode() const;
    void validate() const;  // throws std::invalid_argument on bad data
};

// Dirichlet coefficient prefix.  a(n) = base(n) * n^shift, with the shift kept
// symbolic so that twists by n^{-i theta} and the Ramanujan tau exponent -11/2
// stay exact.
struct CoefficientPrefix {
    enum class Kind { ZetaSquared, Ramanujan, List, Virtual };
    Kind kind = Kind::List;
    std::vector<ExactComplex> base;  // base(1..n_max)
    ExactComplex shift;              // exponent of n

    int n_max() const { return static_cast<int>(base.size()); }
    std::complex<double> value(int n) const;  // a(n), 1-based
    bool all_zero() const;
};

struct LFunctionData {
    GammaFactor gamma;
    CoefficientPrefix coefficients;
    int pole_order = 0;  // order m of the pole at s=1
};

struct InvariantSet {
    ExactReal degree;                // d
    PiValue conductor;               // q, with pi-grade in exact mode
    ExactComplex omega_F;
    ExactComplex xi;
    ExactReal eta;
    ExactReal theta;
    std::vector<ExactComplex> H;     // H(0..n_max_H)
    ExactComplex chi;

    bool degree_is(long d, double tol = 1e-9) const;
    bool conductor_is_one(double tol = 1e-9) const;
};

InvariantSet compute_invariants(const GammaFactor& gamma, unsigned n_max_H);

struct NormalizationCertificate {
    ExactReal shift;        // the theta removed from the data
    ExactComplex scale;     // global coefficient scaling applied
    bool identity = false;  // true when nothing changed
};

struct NormalizedResult {
    LFunctionData data;
    NormalizationCertificate certificate;
};

// Lemma-4.1 normalization for degree 2, conductor 1.  Throws std::domain_error
// when degree/conductor checks fail, std::invalid_argument on all-zero
// coefficients.
NormalizedResult normalize(const LFunctionData& f);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

ValidationReport validate_normalized(const LFunctionData& f, unsigned n_max_H = 4);

// -e^{i pi xi / 2}, the root number forced on normalized data; exact when xi
// is an integer
ExactComplex normalized_root_number(const ExactComplex& xi);

// Equivalence generator: replaces factor j by its Legendre-duplication pair
// (lambda/2, mu/2), (lambda/2, (mu+1)/2) and sets Q <- Q * 2^lambda.  The
// omega datum absorbs the unit part 2^{-2i Im mu_j} of the duplication
// constant so that omega_F is preserved (a no-op for real mu_j).
GammaFactor duplicate_factor(const GammaFactor& gamma, std::size_t j);

}  // namespace selberglab

#endif
