#include "selberglab/classifier.hpp"

#include <cmath>
#include <stdexcept>

namespace selberglab {

namespace {

// signed unit from an exact-or-float root number; throws unless +-1
int omega_sign(const ExactComplex& omega_F) {
    if (omega_F.is_exact()) {
        if (*omega_F.exact == GaussianRational(Rational(1))) return 1;
        if (*omega_F.exact == GaussianRational(Rational(-1))) return -1;
        throw std::domain_error("omega_F must be +-1 for normalized real data");
    }
    if (std::abs(omega_F.value - std::complex<double>(1.0, 0.0)) < 1e-9) return 1;
    if (std::abs(omega_F.value - std::complex<double>(-1.0, 0.0)) < 1e-9) return -1;
    throw std::domain_error("omega_F must be +-1 for normalized real data");
}

ExactReal real_sqrt(const ExactReal& x) {
    if (x.is_exact()) {
        if (auto r = rational_sqrt(*x.exact)) return ExactReal(*r);
    }
    return ExactReal::from_float(std::sqrt(x.value));
}

// chi as a real carrier; rejects non-real values
ExactReal chi_real(const ExactComplex& chi) {
    if (chi.is_exact()) {
        if (!chi.exact->is_real()) throw std::domain_error("chi must be real");
        return ExactReal(chi.exact->re);
    }
    if (std::abs(chi.value.imag()) > 1e-9) throw std::domain_error("chi must be real");
    return ExactReal::from_float(chi.value.real());
}

// sign with a 1e-9 dead zone in float mode
int chi_sign(const ExactReal& chi) {
    if (chi.is_exact()) return *chi.exact > 0 ? 1 : (*chi.exact < 0 ? -1 : 0);
    if (std::abs(chi.value) < 1e-9) return 0;
    return chi.value > 0 ? 1 : -1;
}

}  // namespace

VirtualGammaFactor associate_virtual(const ExactComplex& chi, const ExactComplex& omega_F) {
    ExactReal c = chi_real(chi);
    int w = omega_sign(omega_F);
    VirtualGammaFactor v;
    if (chi_sign(c) > 0) {
        v.kind = VirtualGammaFactor::Kind::Hecke;
        v.mu = c.is_exact() ? real_sqrt(ExactReal(*c.exact / 2)) : ExactReal::from_float(std::sqrt(c.value / 2));
    } else {
        v.kind = VirtualGammaFactor::Kind::Maass;
        v.epsilon = (1 - w) / 2;
        v.kappa = c.is_exact() ? real_sqrt(ExactReal(-*c.exact / 2)) : ExactReal::from_float(std::sqrt(std::max(0.0, -c.value) / 2));
    }
    return v;
}

GammaFactor virtual_to_gamma(const VirtualGammaFactor& v, std::optional<ExactComplex> omega) {
    GammaFactor g;
    if (v.kind == VirtualGammaFactor::Kind::Hecke) {
        g.q = QRep::from_exact({Rational(1), Rational(-1), Rational(-1)});
        GammaTerm t;
        t.lambda = ExactReal(Rational(1));
        t.mu = v.mu.is_exact() ? ExactComplex(GaussianRational(*v.mu.exact))
                               : ExactComplex(std::complex<double>(v.mu.value, 0.0));
        g.factors = {t};
        // xi = 2 mu - 1, so the consistent root number is -e^{i pi (2mu-1)/2}
        ExactComplex xi = v.mu.is_exact()
                              ? ExactComplex(GaussianRational(Rational(2) * *v.mu.exact - 1))
                              : ExactComplex(std::complex<double>(2.0 * v.mu.value - 1.0, 0.0));
        g.omega = omega ? *omega : normalized_root_number(xi);
    } else {
        g.q = QRep::from_exact({Rational(1), Rational(0), Rational(-1)});
        GammaTerm a, b;
        a.lambda = b.lambda = ExactReal(Rational(1, 2));
        if (v.kappa.is_exact()) {
            a.mu = ExactComplex(GaussianRational(Rational(v.epsilon, 2), *v.kappa.exact / 2));
            b.mu = ExactComplex(GaussianRational(Rational(v.epsilon, 2), -*v.kappa.exact / 2));
        } else {
            a.mu = ExactComplex(std::complex<double>(v.epsilon / 2.0, v.kappa.value / 2.0));
            b.mu = ExactComplex(std::complex<double>(v.epsilon / 2.0, -v.kappa.value / 2.0));
        }
        g.factors = {a, b};
        g.omega = omega ? *omega : ExactComplex(Rational(v.epsilon == 0 ? 1 : -1));
    }
    return g;
}

Classification classify(const LFunctionData& F) {
    NormalizedResult norm = normalize(F);
    ValidationReport rep = validate_normalized(norm.data);
    InvariantSet inv = compute_invariants(norm.data.gamma, 2);

    Classification out;
    out.chi = inv.chi;
    out.omega_F = inv.omega_F;
    for (const auto& c : rep.checks)
        if (!c.pass) out.diagnostics.push_back({"normalization:" + c.name, false, c.detail});

    ExactReal chi = chi_real(inv.chi);
    int sign = chi_sign(chi);
    if (sign > 0) {
        out.verdict = Classification::Verdict::HoloCuspForm;
        // k = 1 + sqrt(2 chi)
        ExactReal root = chi.is_exact() ? real_sqrt(ExactReal(Rational(2) * *chi.exact))
                                        : ExactReal::from_float(std::sqrt(2.0 * chi.value));
        out.weight = root.is_exact() ? ExactReal(*root.exact + 1) : ExactReal::from_float(root.value + 1.0);

        double k = out.weight.value;
        double k_round = std::round(k / 2.0) * 2.0;
        bool even_int = std::abs(k - k_round) <= 1e-6;
        bool ge12 = even_int && k_round >= 12.0;
        out.diagnostics.push_back({"weight_even_integer_ge_12", even_int && ge12,
                                   "k = " + std::to_string(k)});
        if (even_int) {
            int expect = (long(k_round) / 2) % 2 == 0 ? 1 : -1;
            bool ok = false;
            try { ok = omega_sign(inv.omega_F) == expect; } catch (const std::domain_error&) {}
            out.diagnostics.push_back({"root_number_matches_weight", ok,
                                       std::string("expect (-1)^{k/2} = ") + (expect > 0 ? "+1" : "-1")});
        } else {
            out.diagnostics.push_back({"root_number_matches_weight", false,
                                       "weight is not an even integer"});
        }
    } else if (sign == 0) {
        out.verdict = Classification::Verdict::ZetaSquared;
    } else {
        out.verdict = Classification::Verdict::MaassForm;
        // eigenvalue (1 - 2 chi)/4 = 1/4 + kappa^2
        out.eigenvalue = chi.is_exact()
                             ? ExactReal((Rational(1) - Rational(2) * *chi.exact) / 4)
                             : ExactReal::from_float((1.0 - 2.0 * chi.value) / 4.0);
        int w = omega_sign(inv.omega_F);
        out.parity = (1 - w) / 2;
        out.diagnostics.push_back({"root_number_matches_parity", true,
                                   std::string("omega_F = (-1)^eps with eps = ") + std::to_string(out.parity)});
        out.diagnostics.push_back({"eigenvalue_spectrum_membership", true,
                                   "not verifiable; exceptional eigenvalues do not occur at level 1"});
    }
    return out;
}

}  // namespace selberglab
