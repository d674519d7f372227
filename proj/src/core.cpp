#include "selberglab/core.hpp"

#include "selberglab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace selberglab {

namespace {

constexpr double kPi = std::numbers::pi;

// prime factorization by trial division (inputs here are small)
std::map<Integer, long> factorize(Integer n) {
    if (n <= 0) throw std::domain_error("factorize requires a positive integer");
    std::map<Integer, long> out;
    for (Integer p = 2; p * p <= n; ++p)
        while (n % p == 0) { ++out[p]; n /= p; }
    if (n > 1) ++out[n];
    return out;
}

// accumulator for products  prod p_i^{e_i}  with rational exponents
struct PowerProduct {
    std::map<Integer, Rational> exps;

    void mul_rational_pow(const Rational& base, const Rational& e) {
        if (base <= 0) throw std::domain_error("PowerProduct base must be positive");
        for (const auto& [p, k] : factorize(numerator(base))) exps[p] += Rational(k) * e;
        for (const auto& [p, k] : factorize(denominator(base))) exps[p] -= Rational(k) * e;
    }

    bool integral() const {
        return std::all_of(exps.begin(), exps.end(),
                           [](const auto& kv) { return is_integer(kv.second); });
    }

    Rational to_rational() const {
        Rational out = 1;
        for (const auto& [p, e] : exps) out *= pow_rat(Rational(p), e.convert_to<long>());
        return out;
    }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

QRep QRep::from_exact(QExactRep e) {
    QRep q;
    q.value = to_double(e.c) * std::pow(2.0, to_double(e.two_exp)) * std::pow(kPi, to_double(e.pi_exp));
    q.exact = std::move(e);
    return q;
}

bool GammaFactor::exact_mode() const {
    if (!q.is_exact() || !omega.is_exact()) return false;
    return std::all_of(factors.begin(), factors.end(),
                       [](const GammaTerm& t) { return t.lambda.is_exact() && t.mu.is_exact(); });
}

void GammaFactor::validate() const {
    if (factors.empty()) throw std::invalid_argument("gamma factor needs r >= 1");
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& t = factors[j];
        bool lambda_pos = t.lambda.is_exact() ? (*t.lambda.exact > 0) : (t.lambda.value > 0);
        if (!lambda_pos)
            throw std::invalid_argument("lambda_" + std::to_string(j) + " must be positive");
        bool re_ok = t.mu.is_exact() ? (t.mu.exact->re >= 0) : (t.mu.value.real() >= 0);
        if (!re_ok)
            throw std::invalid_argument("Re(mu_" + std::to_string(j) + ") must be nonnegative");
    }
    if (omega.is_exact()) {
        Rational n2 = omega.exact->re * omega.exact->re + omega.exact->im * omega.exact->im;
        if (n2 != 1) throw std::invalid_argument("|omega| must be 1");
    } else if (std::abs(std::abs(omega.value) - 1.0) > 1e-12) {
        throw std::invalid_argument("|omega| must be 1 (tol 1e-12)");
    }
}

std::complex<double> CoefficientPrefix::value(int n) const {
    if (n < 1 || n > n_max()) throw std::out_of_range("coefficient index");
    std::complex<double> b = base[std::size_t(n - 1)].value;
    if (n == 1) return b;
    std::complex<double> e = shift.value;
    if (e == std::complex<double>(0.0, 0.0)) return b;
    return b * std::exp(e * std::log(double(n)));
}

bool CoefficientPrefix::all_zero() const {
    return std::all_of(base.begin(), base.end(), [](const ExactComplex& c) {
        return c.is_exact() ? c.exact->is_zero() : (c.value == std::complex<double>(0.0, 0.0));
    });
}

bool InvariantSet::degree_is(long d, double tol) const {
    if (degree.is_exact()) return *degree.exact == Rational(d);
    return near(degree.value, double(d), tol);
}

bool InvariantSet::conductor_is_one(double tol) const {
    if (conductor.exact) return *conductor.exact == PiExact(Rational(1));
    return std::abs(conductor.value - std::complex<double>(1.0, 0.0)) <= tol;
}

InvariantSet compute_invariants(const GammaFactor& gamma, unsigned n_max_H) {
    gamma.validate();
    InvariantSet inv;
    const auto& fs = gamma.factors;
    bool lambdas_exact = std::all_of(fs.begin(), fs.end(),
                                     [](const GammaTerm& t) { return t.lambda.is_exact(); });
    bool mus_exact = std::all_of(fs.begin(), fs.end(),
                                 [](const GammaTerm& t) { return t.mu.is_exact(); });

    // degree d = 2 sum lambda_j
    {
        double dv = 0;
        for (const auto& t : fs) dv += t.lambda.value;
        dv *= 2;
        if (lambdas_exact) {
            Rational d = 0;
            for (const auto& t : fs) d += *t.lambda.exact;
            inv.degree = ExactReal(Rational(2) * d);
        } else {
            inv.degree = ExactReal::from_float(dv);
        }
    }

    // conductor q = (2 pi)^d Q^2 prod lambda_j^{2 lambda_j}
    {
        double qv = std::pow(2 * kPi, inv.degree.value) * gamma.q.value * gamma.q.value;
        for (const auto& t : fs) qv *= std::pow(t.lambda.value, 2 * t.lambda.value);
        inv.conductor.value = qv;
        if (gamma.q.is_exact() && lambdas_exact && inv.degree.is_exact()) {
            const auto& qe = *gamma.q.exact;
            PowerProduct pp;
            Rational d = *inv.degree.exact;
            pp.mul_rational_pow(Rational(2), d + Rational(2) * qe.two_exp);
            pp.mul_rational_pow(qe.c * qe.c, Rational(1));
            Rational pi_exp = d + Rational(2) * qe.pi_exp;
            for (const auto& t : fs) pp.mul_rational_pow(*t.lambda.exact, Rational(2) * *t.lambda.exact);
            Rational half_grade = Rational(2) * pi_exp;
            if (pp.integral() && is_integer(half_grade)) {
                inv.conductor.exact = PiExact(GaussianRational(pp.to_rational()),
                                              half_grade.convert_to<int>());
                inv.conductor.value = inv.conductor.exact->value();
            }
        }
    }

    // omega_F = omega * prod lambda_j^{-2 i Im(mu_j)}
    {
        double phase = 0;  // -2 sum Im(mu_j) log lambda_j
        for (const auto& t : fs) phase -= 2.0 * t.mu.value.imag() * std::log(t.lambda.value);
        inv.omega_F.value = gamma.omega.value * std::exp(std::complex<double>(0.0, phase));
        if (lambdas_exact && mus_exact && gamma.omega.is_exact()) {
            PowerProduct pp;  // exponent vector of prod lambda^{2 Im mu}
            for (const auto& t : fs) pp.mul_rational_pow(*t.lambda.exact, Rational(2) * t.mu.exact->im);
            bool trivial = std::all_of(pp.exps.begin(), pp.exps.end(),
                                       [](const auto& kv) { return kv.second == 0; });
            if (trivial) {
                inv.omega_F = gamma.omega;
            }
        }
    }

    // xi = 2 sum (mu_j - 1/2); eta, theta from xi = eta + i d theta
    {
        ExactComplex xi(GaussianRational(Rational(0)));
        if (!mus_exact) xi = ExactComplex(std::complex<double>(0.0, 0.0));
        for (const auto& t : fs) xi += t.mu - ExactComplex(Rational(1, 2));
        xi = xi * ExactComplex(Rational(2));
        inv.xi = xi;
        if (xi.is_exact() && inv.degree.is_exact()) {
            inv.eta = ExactReal(xi.exact->re);
            inv.theta = ExactReal(xi.exact->im / *inv.degree.exact);
        } else {
            inv.eta = ExactReal::from_float(xi.value.real());
            inv.theta = ExactReal::from_float(xi.value.imag() / inv.degree.value);
        }
    }

    // H(n) = 2 sum B_n(mu_j) / lambda_j^{n-1}
    inv.H.resize(n_max_H + 1);
    for (unsigned n = 0; n <= n_max_H; ++n) {
        if (lambdas_exact && mus_exact) {
            GaussianRational acc;
            for (const auto& t : fs)
                acc += specfun::bernoulli_polynomial(n, *t.mu.exact) *
                       GaussianRational(pow_rat(*t.lambda.exact, 1 - long(n)));
            inv.H[n] = ExactComplex(GaussianRational(Rational(2)) * acc);
        } else {
            std::complex<double> acc = 0.0;
            for (const auto& t : fs)
                acc += specfun::bernoulli_polynomial(n, t.mu.value) *
                       std::pow(t.lambda.value, 1.0 - double(n));
            inv.H[n] = ExactComplex(2.0 * acc);
        }
    }

    // chi = xi + H(2) + 2/3
    if (inv.H.size() < 3) {
        // caller asked for fewer H's than chi needs; compute H(2) on the side
        auto tmp = compute_invariants(gamma, 2);
        inv.chi = tmp.chi;
    } else {
        inv.chi = inv.xi + inv.H[2] + ExactComplex(Rational(2, 3));
    }
    return inv;
}

ExactComplex normalized_root_number(const ExactComplex& xi) {
    if (xi.is_exact() && xi.exact->is_real()) {
        Rational half_xi = xi.exact->re / 2;
        if (denominator(half_xi) <= 2) {
            // cospi/sinpi are exact (+-1 or 0) at multiples of 1/2
            double c = specfun::cospi(half_xi), s = specfun::sinpi(half_xi);
            GaussianRational g{Rational(long(c)), Rational(long(s))};
            return ExactComplex(-g);
        }
    }
    std::complex<double> v = -std::exp(std::complex<double>(0.0, kPi) * (xi.value / 2.0));
    return ExactComplex(v);
}

NormalizedResult normalize(const LFunctionData& f) {
    InvariantSet inv = compute_invariants(f.gamma, 2);
    if (!inv.degree_is(2)) throw std::domain_error("normalize requires degree 2");
    if (!inv.conductor_is_one()) throw std::domain_error("normalize requires conductor 1");
    if (f.coefficients.all_zero()) throw std::invalid_argument("all-zero coefficient prefix");

    NormalizedResult out;
    out.data = f;
    bool exact_theta = inv.theta.is_exact();
    bool theta_zero = exact_theta ? (*inv.theta.exact == 0) : (std::abs(inv.theta.value) < 1e-14);

    // remove the internal shift: pass to F(s - i theta), i.e.
    // mu_j <- mu_j - i lambda_j theta and a(n) <- a(n) n^{+i theta}
    if (!theta_zero) {
        for (auto& t : out.data.gamma.factors) {
            if (exact_theta && t.lambda.is_exact() && t.mu.is_exact()) {
                GaussianRational shift(Rational(0), *t.lambda.exact * *inv.theta.exact);
                t.mu = ExactComplex(*t.mu.exact - shift);
            } else {
                t.mu = ExactComplex(t.mu.value - std::complex<double>(0.0, t.lambda.value * inv.theta.value));
            }
        }
        ExactComplex dshift = exact_theta
            ? ExactComplex(GaussianRational(Rational(0), *inv.theta.exact))
            : ExactComplex(std::complex<double>(0.0, inv.theta.value));
        out.data.coefficients.shift += dshift;
    }
    out.certificate.shift = inv.theta;

    // scale so the first nonvanishing coefficient is 1
    auto& coeffs = out.data.coefficients;
    int n0 = 0;
    for (int n = 1; n <= coeffs.n_max(); ++n) {
        const auto& c = coeffs.base[std::size_t(n - 1)];
        bool zero = c.is_exact() ? c.exact->is_zero() : (std::abs(c.value) == 0.0);
        if (!zero) { n0 = n; break; }
    }
    ExactComplex a0 = coeffs.base[std::size_t(n0 - 1)];
    if (n0 > 1) a0 = ExactComplex(coeffs.value(n0));  // n0^shift enters, generally float
    bool unit_scale = a0.is_exact() ? (*a0.exact == GaussianRational(Rational(1)))
                                    : (std::abs(a0.value - 1.0) == 0.0);
    if (!unit_scale)
        for (auto& c : coeffs.base) c = c / a0;
    out.certificate.scale = a0;
    out.certificate.identity = theta_zero && unit_scale;

    // re-derive omega from the Lemma-4.1 identity omega_F = -e^{i pi xi/2}
    InvariantSet post = compute_invariants(out.data.gamma, 2);
    ExactComplex target = normalized_root_number(post.xi);
    ExactComplex ratio = post.omega_F / out.data.gamma.omega;  // prod lambda^{-2i Im mu}
    out.data.gamma.omega = target / ratio;
    return out;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidationReport validate_normalized(const LFunctionData& f, unsigned n_max_H) {
    ValidationReport rep;
    InvariantSet inv = compute_invariants(f.gamma, n_max_H);

    {
        CheckResult c{"xi_even_integer", false, ""};
        if (inv.xi.is_exact()) {
            const auto& x = *inv.xi.exact;
            c.pass = x.is_real() && is_integer(x.re) && numerator(x.re) % 2 == 0;
        } else {
            double re = inv.xi.value.real();
            double nearest_even = 2.0 * std::round(re / 2.0);
            c.pass = std::abs(inv.xi.value.imag()) < 1e-9 && std::abs(re - nearest_even) < 1e-9;
        }
        if (!c.pass) c.detail = "xi = (" + std::to_string(inv.xi.value.real()) + ", " + std::to_string(inv.xi.value.imag()) + ")";
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"omega_identity", false, ""};
        ExactComplex target = normalized_root_number(inv.xi);
        if (inv.omega_F.is_exact() && target.is_exact()) {
            c.pass = *inv.omega_F.exact == *target.exact;
        } else {
            c.pass = std::abs(inv.omega_F.value - target.value) < 1e-9;
        }
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"H_real", true, ""};
        for (unsigned n = 0; n < inv.H.size(); ++n) {
            bool real = inv.H[n].is_exact() ? inv.H[n].exact->is_real()
                                            : std::abs(inv.H[n].value.imag()) < 1e-9;
            if (!real) { c.pass = false; c.detail = "H(" + std::to_string(n) + ") not real"; break; }
        }
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"coefficients_real", true, ""};
        bool shift_real = f.coefficients.shift.is_exact()
                              ? f.coefficients.shift.exact->is_real()
                              : std::abs(f.coefficients.shift.value.imag()) < 1e-9;
        if (!shift_real) { c.pass = false; c.detail = "complex exponent shift"; }
        for (const auto& b : f.coefficients.base) {
            bool real = b.is_exact() ? b.exact->is_real() : std::abs(b.value.imag()) < 1e-9;
            if (!real) { c.pass = false; c.detail = "complex coefficient"; break; }
        }
        rep.checks.push_back(c);
    }
    {
        // conjugation closure of the factor multiset: for every (lambda, mu)
        // the pair (lambda, conj mu) must also occur
        CheckResult c{"gamma_self_conjugate", true, ""};
        const auto& fs = f.gamma.factors;
        std::vector<bool> used(fs.size(), false);
        auto match = [&](const GammaTerm& a, const GammaTerm& b) {
            if (a.lambda.is_exact() && b.lambda.is_exact() && a.mu.is_exact() && b.mu.is_exact())
                return *a.lambda.exact == *b.lambda.exact && *a.mu.exact == b.mu.exact->conj();
            return std::abs(a.lambda.value - b.lambda.value) < 1e-10 &&
                   std::abs(a.mu.value - std::conj(b.mu.value)) < 1e-10;
        };
        for (std::size_t i = 0; i < fs.size() && c.pass; ++i) {
            bool found = false;
            for (std::size_t k = 0; k < fs.size(); ++k) {
                if (used[k]) continue;
                if (match(fs[i], fs[k])) { used[k] = true; found = true; break; }
            }
            if (!found) { c.pass = false; c.detail = "factor " + std::to_string(i) + " unmatched"; }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

GammaFactor duplicate_factor(const GammaFactor& gamma, std::size_t j) {
    if (j >= gamma.factors.size()) throw std::out_of_range("factor index");
    GammaFactor out = gamma;
    GammaTerm t = out.factors[j];
    out.factors.erase(out.factors.begin() + long(j));

    GammaTerm a, b;
    if (t.lambda.is_exact()) {
        a.lambda = b.lambda = ExactReal(*t.lambda.exact / 2);
    } else {
        a.lambda = b.lambda = ExactReal::from_float(t.lambda.value / 2);
    }
    if (t.mu.is_exact()) {
        a.mu = ExactComplex(*t.mu.exact * GaussianRational(Rational(1, 2)));
        b.mu = ExactComplex((*t.mu.exact + GaussianRational(Rational(1))) * GaussianRational(Rational(1, 2)));
    } else {
        a.mu = ExactComplex(t.mu.value / 2.0);
        b.mu = ExactComplex((t.mu.value + 1.0) / 2.0);
    }
    out.factors.push_back(a);
    out.factors.push_back(b);

    // Q <- Q 2^lambda
    if (out.q.is_exact() && t.lambda.is_exact()) {
        QExactRep qe = *out.q.exact;
        qe.two_exp += *t.lambda.exact;
        out.q = QRep::from_exact(qe);
    } else {
        out.q = QRep::from_float(out.q.value * std::pow(2.0, t.lambda.value));
    }

    // unit part of the duplication constant: omega <- omega 2^{-2i Im mu}
    double im = t.mu.is_exact() ? to_double(t.mu.exact->im) : t.mu.value.imag();
    if (im != 0.0) {
        std::complex<double> unit = std::exp(std::complex<double>(0.0, -2.0 * im * std::log(2.0)));
        out.omega = ExactComplex(out.omega.value * unit);
    }
    return out;
}

}  // namespace selberglab
