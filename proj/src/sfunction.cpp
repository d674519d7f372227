#include "selberglab/sfunction.hpp"

#include "selberglab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace selberglab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

// e^{i pi z} for an exact Gaussian rational exponent; exact when Re z is a
// multiple of 1/2 and Im z = 0
ExactComplex exp_i_pi(const ExactComplex& z) {
    if (z.is_exact() && z.exact->is_real() && denominator(z.exact->re) <= 2) {
        const Rational& a = z.exact->re;
        GaussianRational g{Rational(long(specfun::cospi(a))), Rational(long(specfun::sinpi(a)))};
        return ExactComplex(g);
    }
    return ExactComplex(std::exp(kI * kPi * z.value));
}

ExactComplex exact_i_power(long k) { return ExactComplex(i_power(k)); }

}  // namespace

std::complex<double> SFunctionExpansion::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (const auto& t : terms) acc += t.coefficient.value * std::exp(kI * kPi * t.frequency.value * s);
    return acc;
}

bool SFunctionExpansion::frequency_symmetric(double tol) const {
    std::size_t n = terms.size();
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = terms[j].frequency;
        const auto& b = terms[n - 1 - j].frequency;
        if (a.is_exact() && b.is_exact()) {
            if (*a.exact != -*b.exact) return false;
        } else if (std::abs(a.value + b.value) > tol) {
            return false;
        }
    }
    return true;
}

SFunctionExpansion s_expansion(const GammaFactor& gamma) {
    gamma.validate();
    const auto& fs = gamma.factors;
    const std::size_t r = fs.size();
    if (r > 24) throw std::invalid_argument("too many factors for exponential-sum expansion");
    bool lambdas_exact = std::all_of(fs.begin(), fs.end(),
                                     [](const GammaTerm& t) { return t.lambda.is_exact(); });

    // each factor contributes -i e^{i pi mu} e^{i pi lambda s} + i e^{-i pi mu} e^{-i pi lambda s};
    // a sign pattern yields frequency sum(+-lambda_j) and coefficient
    // i^{(#minus - #plus)} e^{i pi sum(+-mu_j)}
    std::map<Rational, ExactComplex> exact_terms;
    std::vector<std::pair<double, std::complex<double>>> float_terms;

    for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        long plus = 0;
        ExactComplex mu_sum(GaussianRational{});
        Rational freq_exact = 0;
        double freq = 0;
        for (std::size_t j = 0; j < r; ++j) {
            bool pos = !(mask & (std::size_t(1) << j));
            if (pos) {
                ++plus;
                mu_sum += fs[j].mu;
                freq += fs[j].lambda.value;
                if (lambdas_exact) freq_exact += *fs[j].lambda.exact;
            } else {
                mu_sum = mu_sum - fs[j].mu;
                freq -= fs[j].lambda.value;
                if (lambdas_exact) freq_exact -= *fs[j].lambda.exact;
            }
        }
        long minus = long(r) - plus;
        ExactComplex coeff = exact_i_power(minus - plus) * exp_i_pi(mu_sum);
        if (lambdas_exact) {
            auto it = exact_terms.find(freq_exact);
            if (it == exact_terms.end()) exact_terms.emplace(freq_exact, coeff);
            else it->second += coeff;
        } else {
            float_terms.emplace_back(freq, coeff.value);
        }
    }

    SFunctionExpansion out;
    if (lambdas_exact) {
        double scale = 0.0;
        for (const auto& [f, c] : exact_terms) scale = std::max(scale, std::abs(c.value));
        for (const auto& [f, c] : exact_terms) {
            bool zero = c.is_exact() ? c.exact->is_zero() : (std::abs(c.value) <= 1e-12 * scale);
            if (!zero) out.terms.push_back({ExactReal(f), c});
        }
    } else {
        std::sort(float_terms.begin(), float_terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        double scale = 0.0;
        for (const auto& [f, c] : float_terms) scale = std::max(scale, std::abs(c));
        for (const auto& [f, c] : float_terms) {
            if (!out.terms.empty() && std::abs(out.terms.back().frequency.value - f) <= 1e-12) {
                auto& last = out.terms.back();
                last.coefficient = ExactComplex(last.coefficient.value + c);
                ++out.float_merges;
            } else {
                out.terms.push_back({ExactReal::from_float(f), ExactComplex(c)});
            }
        }
        out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                       [scale](const STerm& t) {
                                           return std::abs(t.coefficient.value) <= 1e-12 * scale;
                                       }),
                        out.terms.end());
    }
    return out;
}

namespace {

void check_gamma_argument(std::complex<double> arg, std::size_t j, const char* which) {
    if (std::abs(arg.imag()) < 1e-9) {
        double n = std::round(arg.real());
        if (n <= 0.0 && std::abs(arg.real() - n) < 1e-9)
            throw pole_error(std::string("Gamma pole in ") + which + " term of factor " + std::to_string(j), j);
    }
}

// log of gamma(s) = Q^s prod Gamma(lambda_j s + mu_j)
std::complex<double> log_gamma_factor(const GammaFactor& g, std::complex<double> s) {
    std::complex<double> acc = s * std::log(g.q.value);
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
        std::complex<double> arg = g.factors[j].lambda.value * s + g.factors[j].mu.value;
        check_gamma_argument(arg, j, "gamma");
        acc += specfun::log_gamma(arg);
    }
    return acc;
}

}  // namespace

std::complex<double> eval_h(const HFunctionHandle& handle, std::complex<double> s) {
    if (std::abs(s.imag()) > 50.0)
        throw std::domain_error("eval_h restricted to |Im s| <= 50");
    return std::exp(eval_h_log(handle, s));
}

std::complex<double> eval_h_log(const HFunctionHandle& handle, std::complex<double> s) {
    const GammaFactor& g = handle.gamma;
    g.validate();
    std::complex<double> acc = (1.0 - 2.0 * s) * std::log(g.q.value);
    acc -= double(g.factors.size()) * std::log(2.0 * kPi);
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
        double lam = g.factors[j].lambda.value;
        std::complex<double> mu = g.factors[j].mu.value;
        acc += std::complex<double>(0.0, 2.0 * mu.imag()) * std::log(lam);
        std::complex<double> a1 = lam * (1.0 - s) + std::conj(mu);
        std::complex<double> a2 = 1.0 - lam * s - mu;
        check_gamma_argument(a1, j, "dual");
        check_gamma_argument(a2, j, "direct");
        acc += specfun::log_gamma(a1) + specfun::log_gamma(a2);
    }
    if (handle.omega_F_multiplier) {
        auto inv = compute_invariants(g, 0);
        acc += std::log(inv.omega_F.value);
    }
    return acc;
}

std::complex<double> reflection_residual(const GammaFactor& gamma, std::complex<double> s) {
    std::complex<double> h = eval_h({gamma, false}, s);
    std::complex<double> S = s_expansion(gamma).eval(s);
    std::complex<double> ratio = std::exp(log_gamma_factor(gamma, s) - log_gamma_factor(gamma, 1.0 - s));
    return h * S * ratio - 1.0;
}

std::complex<double> r_ratio(const SFunctionExpansion& F_exp, const SFunctionExpansion& gamma_exp,
                             std::complex<double> s) {
    std::complex<double> den = gamma_exp.eval(s);
    double scale = 0.0;
    for (const auto& t : gamma_exp.terms)
        scale = std::max(scale, std::abs(t.coefficient.value) *
                                    std::exp(-kPi * t.frequency.value * s.imag()));
    if (std::abs(den) <= 1e-12 * std::max(1.0, scale))
        throw std::domain_error("denominator expansion vanishes at this point");
    return F_exp.eval(s) / den;
}

DecayReport decay_diagnostic(const SFunctionExpansion& F_exp, const SFunctionExpansion& gamma_exp,
                             double sigma, const std::vector<double>& t_grid) {
    DecayReport rep;
    rep.t = t_grid;

    // identical term lists mean R is identically 1
    if (F_exp.terms.size() == gamma_exp.terms.size()) {
        bool same = true;
        for (std::size_t j = 0; j < F_exp.terms.size() && same; ++j) {
            same = std::abs(F_exp.terms[j].frequency.value - gamma_exp.terms[j].frequency.value) <= 1e-12 &&
                   std::abs(F_exp.terms[j].coefficient.value - gamma_exp.terms[j].coefficient.value) <= 1e-12;
        }
        if (same) {
            rep.identically_one = true;
            rep.log_abs.assign(t_grid.size(), -std::numeric_limits<double>::infinity());
            rep.slope = 0.0;
            rep.exponential_decay = false;
            return rep;
        }
    }

    for (double t : t_grid) {
        std::complex<double> R = r_ratio(F_exp, gamma_exp, {sigma, t});
        rep.log_abs.push_back(std::log(std::abs(R - 1.0)));
    }
    // least squares slope
    std::size_t n = t_grid.size();
    if (n >= 2) {
        double mt = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) { mt += t_grid[i]; my += rep.log_abs[i]; }
        mt /= double(n); my /= double(n);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < n; ++i) {
            num += (t_grid[i] - mt) * (rep.log_abs[i] - my);
            den += (t_grid[i] - mt) * (t_grid[i] - mt);
        }
        rep.slope = den > 0 ? num / den : 0.0;
        std::size_t decreasing = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (rep.log_abs[i] < rep.log_abs[i - 1]) ++decreasing;
        bool monotone_trend = 2 * decreasing >= n - 1 && rep.log_abs.back() < rep.log_abs.front();
        rep.exponential_decay = rep.slope <= -0.1 && monotone_trend;
    }
    return rep;
}

}  // namespace selberglab
