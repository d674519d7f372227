#ifndef SELBERGLAB_CLASSIFIER_HPP
#define SELBERGLAB_CLASSIFIER_HPP

#include "selberglab/core.hpp"

#include <optional>
#include <vector>

namespace selberglab {

// the two one-parameter shapes every degree-2, conductor-1 h-function matches
struct VirtualGammaFactor {
    enum class Kind { Hecke, Maass };
    Kind kind = Kind::Hecke;
    ExactReal mu;       // Hecke: mu > 0
    int epsilon = 0;    // Maass: parity, 0 or 1
    ExactReal kappa;    // Maass: kappa >= 0
};

// chi > 0 -> Hecke{mu = sqrt(chi/2)}; chi <= 0 -> Maass{kappa = sqrt(-chi/2),
// epsilon = (1 - omega_F)/2}.  chi must be real and omega_F must be +-1.
VirtualGammaFactor associate_virtual(const ExactComplex& chi, const ExactComplex& omega_F);

// Hecke -> (2pi)^{-s} Gamma(s + mu); Maass -> pi^{-s} Gamma((s+eps+ik)/2) Gamma((s+eps-ik)/2).
// omega defaults to the consistent root number ((-1)^{k/2} resp. (-1)^eps)
// when `omega` is not supplied.
GammaFactor virtual_to_gamma(const VirtualGammaFactor& v,
                             std::optional<ExactComplex> omega = std::nullopt);

struct Classification {
    enum class Verdict { HoloCuspForm, ZetaSquared, MaassForm };
    Verdict verdict = Verdict::ZetaSquared;
    ExactReal weight;      // k, HoloCuspForm only
    ExactReal eigenvalue;  // (1 - 2 chi)/4, MaassForm only
    int parity = 0;        // MaassForm only
    ExactComplex chi;
    ExactComplex omega_F;
    std::vector<CheckResult> diagnostics;
};

// verdict from (chi, omega_F) of the normalized input; diagnostics flag
// inconsistency with the existence constraints but never change the verdict
Classification classify(const LFunctionData& F);

}  // namespace selberglab

#endif
