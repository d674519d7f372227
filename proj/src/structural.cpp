#include "selberglab/structural.hpp"

#include "selberglab/sfunction.hpp"
#include "selberglab/specfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace selberglab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

using RatPoly = std::vector<Rational>;  // coefficients in powers of s

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    RatPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// binom(c0 + c1 s, n) as a polynomial in s
RatPoly binomial_poly(const Rational& c0, const Rational& c1, int n) {
    RatPoly acc{Rational(1)};
    for (int i = 0; i < n; ++i) {
        RatPoly lin{(c0 - i) / Rational(i + 1), c1 / Rational(i + 1)};
        acc = poly_mul(acc, lin);
    }
    return acc;
}

// (-2i)^{-h} as an exact Gaussian unit times 2^{-h}
GaussianRational neg_two_i_inv_pow(int h) {
    GaussianRational unit = i_power(-h);
    Rational mag = pow_rat(Rational(-2), -long(h));
    return unit * GaussianRational(mag);
}

bool sequence_exact(const StructuralSequence& s) {
    return std::all_of(s.d.begin(), s.d.end(),
                       [](const ExactComplex& v) { return v.is_exact(); });
}

}  // namespace

std::vector<std::vector<Rational>> akn_table(int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
    const std::size_t width = std::size_t(k_max) + 1;
    RatPoly base(width, Rational(0));
    for (int k = 3; k <= k_max; ++k) base[std::size_t(k)] = specfun::generalized_binomial(Rational(1, 2), unsigned(k));

    std::vector<std::vector<Rational>> out;
    RatPoly row(width, Rational(0));
    row[0] = 1;
    out.push_back(row);
    // row nu+1 = row nu * base, truncated at k_max; stops once 3 nu > k_max
    for (int nu = 1; 3 * nu <= k_max; ++nu) {
        RatPoly next(width, Rational(0));
        for (std::size_t i = 0; i < width; ++i) {
            if (out.back()[i] == 0) continue;
            for (std::size_t j = 3; i + j < width; ++j)
                if (base[j] != 0) next[i + j] += out.back()[i] * base[j];
        }
        out.push_back(next);
    }
    return out;
}

ExactComplex stirling_r(const InvariantSet& inv, int nu) {
    if (nu < 0) throw std::invalid_argument("nu must be >= 0");
    if (inv.H.size() < std::size_t(nu) + 2)
        throw std::out_of_range("H table does not reach nu + 1");
    Rational lead = specfun::bernoulli_polynomial(unsigned(nu + 1), Rational(3, 2)) /
                    pow_rat(Rational(2), nu);
    bool exact = std::all_of(inv.H.begin(), inv.H.begin() + nu + 2,
                             [](const ExactComplex& h) { return h.is_exact(); });
    if (exact) {
        GaussianRational acc;
        for (int k = 0; k <= nu + 1; ++k)
            acc += GaussianRational(Rational(binomial_int(unsigned(nu + 1), unsigned(k)))) *
                   inv.H[std::size_t(k)].exact->conj();
        GaussianRational last = *inv.H[std::size_t(nu + 1)].exact;
        if ((nu + 1) % 2) last = -last;
        acc += last;
        return ExactComplex(GaussianRational(lead) - acc * GaussianRational(Rational(1, 2)));
    }
    std::complex<double> acc = 0.0;
    for (int k = 0; k <= nu + 1; ++k)
        acc += to_double(Rational(binomial_int(unsigned(nu + 1), unsigned(k)))) *
               std::conj(inv.H[std::size_t(k)].value);
    acc += ((nu + 1) % 2 ? -1.0 : 1.0) * inv.H[std::size_t(nu + 1)].value;
    return ExactComplex(to_double(lead) - 0.5 * acc);
}

std::vector<ExactComplex> v_coefficients(const std::vector<ExactComplex>& r, int h_max) {
    if (h_max < 0) throw std::invalid_argument("h_max must be >= 0");
    if (r.size() < std::size_t(h_max) + 1)
        throw std::out_of_range("r values do not reach h_max");
    // E = exp(P) with P = sum_nu r_nu/(nu(nu+1)) u^nu via E' = P' E
    std::vector<ExactComplex> p(std::size_t(h_max) + 1), E(std::size_t(h_max) + 1);
    for (int nu = 1; nu <= h_max; ++nu)
        p[std::size_t(nu)] = r[std::size_t(nu)] * ExactComplex(Rational(Integer(1), Integer(nu) * (nu + 1)));
    E[0] = ExactComplex(Rational(1));
    for (int h = 1; h <= h_max; ++h) {
        ExactComplex acc(GaussianRational{});
        for (int nu = 1; nu <= h; ++nu)
            acc += ExactComplex(Rational(nu)) * p[std::size_t(nu)] * E[std::size_t(h - nu)];
        E[std::size_t(h)] = acc * ExactComplex(Rational(1, h));
    }
    return E;
}

std::vector<std::vector<Rational>> factorial_series(int h_max, int l_max) {
    if (h_max < 1 || l_max < h_max)
        throw std::invalid_argument("need l_max >= h_max >= 1");
    const std::size_t width = std::size_t(l_max) + 1;
    // 1/s = -2u/(1 - u/2) as a series in u = 1/z
    RatPoly g1(width, Rational(0));
    for (int j = 1; j <= l_max; ++j) g1[std::size_t(j)] = -pow_rat(Rational(2), 2 - j);
    auto truncate = [width](RatPoly p) { p.resize(width, Rational(0)); return p; };

    // inverse falling factorials F_l(u) = u^l prod_{i=1}^{l-1} 1/(1 - i u)
    std::vector<RatPoly> F(width, RatPoly(width, Rational(0)));
    F[0][0] = 1;
    for (int l = 1; l <= l_max; ++l) {
        RatPoly acc(width, Rational(0));
        acc[std::size_t(l)] = 1;
        for (int i = 1; i < l; ++i) {
            RatPoly geo(width, Rational(0));
            for (int m = 0; m + l <= l_max; ++m) geo[std::size_t(m)] = pow_rat(Rational(i), m);
            acc = truncate(poly_mul(acc, geo));
        }
        F[std::size_t(l)] = acc;
    }

    std::vector<std::vector<Rational>> A(std::size_t(h_max) + 1, std::vector<Rational>(width, Rational(0)));
    RatPoly gh{Rational(1)};
    gh.resize(width, Rational(0));
    for (int h = 1; h <= h_max; ++h) {
        gh = truncate(poly_mul(gh, g1));  // series of 1/s^h
        // triangular solve: match u^l coefficients for l = h..l_max
        for (int l = h; l <= l_max; ++l) {
            Rational rhs = gh[std::size_t(l)];
            for (int lp = h; lp < l; ++lp) rhs -= A[std::size_t(h)][std::size_t(lp)] * F[std::size_t(lp)][std::size_t(l)];
            A[std::size_t(h)][std::size_t(l)] = rhs;  // F_l has unit leading coefficient
        }
    }
    return A;
}

StructuralSequence structural_invariants(const InvariantSet& inv, int l_max) {
    if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
    if (!inv.degree_is(2)) throw std::domain_error("structural invariants need degree 2");
    if (!inv.conductor_is_one()) throw std::domain_error("structural invariants need conductor 1");
    StructuralSequence out;
    out.provenance = StructuralSequence::Provenance::Pipeline;
    out.d.resize(std::size_t(l_max) + 1);
    out.d[0] = ExactComplex(Rational(1));
    if (l_max == 0) return out;

    std::vector<ExactComplex> r(std::size_t(l_max) + 1);
    for (int nu = 1; nu <= l_max; ++nu) r[std::size_t(nu)] = stirling_r(inv, nu);
    auto V = v_coefficients(r, l_max);
    auto A = factorial_series(l_max, l_max);
    for (int l = 1; l <= l_max; ++l) {
        ExactComplex acc(GaussianRational{});
        for (int h = 1; h <= l; ++h)
            acc += ExactComplex(A[std::size_t(h)][std::size_t(l)]) * V[std::size_t(h)];
        out.d[std::size_t(l)] = acc;
    }
    return out;
}

namespace {

// The expansion coefficients sit behind an asymptotic series whose terms decay
// like (chi/z)^l / l!; resolving d_4 to 1e-4 relative for small inputs needs
// samples accurate well past double rounding, so the h-function is evaluated
// in 50-digit floats along the ray.
using hpf = boost::multiprecision::cpp_bin_float_50;
using hpc = boost::multiprecision::cpp_complex_50;

hpf hp_from(const Rational& r) { return hpf(numerator(r)) / hpf(denominator(r)); }

const hpf& hp_pi() {
    static const hpf pi = 4 * atan(hpf(1));
    return pi;
}

// Stirling series after shifting |z| >= 40; branch jumps in the shift terms do
// not matter because callers only exponentiate the result
hpc hp_log_gamma(hpc z) {
    hpc acc = 0;
    while (abs(z) < 40) {
        acc -= log(z);
        z += 1;
    }
    hpc lg = (z - hpf(0.5)) * log(z) - z + log(2 * hp_pi()) / 2;
    hpc zpow = z;
    for (int n = 1; n <= 28; ++n) {
        Rational c = specfun::bernoulli_number(unsigned(2 * n)) / Rational(2 * n * (2 * n - 1));
        lg += hp_from(c) / zpow;
        zpow *= z * z;
    }
    return lg + acc;
}

// g(s) = h_gamma(s) sqrt(2 pi) (4 pi)^{1-2s} / Gamma(3/2 - 2s) on the ray
hpc hp_g_value(const GammaFactor& gf, double t) {
    hpc s(hpf(-1), hpf(t));
    hpf log_q = gf.q.exact ? log(hp_from(gf.q.exact->c)) + hp_from(gf.q.exact->two_exp) * log(hpf(2)) +
                                 hp_from(gf.q.exact->pi_exp) * log(hp_pi())
                           : hpf(std::log(gf.q.value));
    hpc acc = (1 - 2 * s) * log_q;
    acc -= int(gf.factors.size()) * log(2 * hp_pi());
    for (const auto& f : gf.factors) {
        hpf lam = f.lambda.exact ? hp_from(*f.lambda.exact) : hpf(f.lambda.value);
        hpc mu = f.mu.exact ? hpc(hp_from(f.mu.exact->re), hp_from(f.mu.exact->im))
                            : hpc(hpf(f.mu.value.real()), hpf(f.mu.value.imag()));
        acc += hpc(hpf(0), 2 * mu.imag()) * log(lam);
        acc += hp_log_gamma(lam * (1 - s) + conj(mu));
        acc += hp_log_gamma(1 - lam * s - mu);
    }
    acc += log(2 * hp_pi()) / 2 + (1 - 2 * s) * log(4 * hp_pi()) - hp_log_gamma(hpf(1.5) - 2 * s);
    return exp(acc);
}

// Neville extrapolation of (u_k, v_k) to u = 0 over the first n points
hpc neville_origin(const std::vector<hpc>& u_in, const std::vector<hpc>& v_in, std::size_t n) {
    std::vector<hpc> v(v_in.begin(), v_in.begin() + n);
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t k = 0; k + m < n; ++k)
            v[k] = (u_in[k + m] * v[k] - u_in[k] * v[k + 1]) / (u_in[k + m] - u_in[k]);
    return v[0];
}

}  // namespace

StructuralSequence oracle_structural_fit(const GammaFactor& gamma, int l_max, double T) {
    if (T < 10.0) throw std::invalid_argument("T must be >= 10");
    if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
    auto inv = compute_invariants(gamma, 0);
    if (!inv.degree_is(2) || !inv.conductor_is_one())
        throw std::domain_error("oracle fit needs normalized degree-2, conductor-1 data");

    const int n_pts = 10;  // heights T, 2T, ..., 512T
    std::vector<hpc> z(n_pts), g(n_pts);
    for (int k = 0; k < n_pts; ++k) {
        double t = T * std::pow(2.0, double(k));
        g[std::size_t(k)] = hp_g_value(gamma, t);
        z[std::size_t(k)] = hpc(hpf(2.5), -2 * hpf(t));  // 1/2 - 2s at s = -1 + it
    }

    StructuralSequence out;
    out.provenance = StructuralSequence::Provenance::Oracle;
    out.d.resize(std::size_t(l_max) + 1);
    out.spread.resize(std::size_t(l_max) + 1, 0.0);

    std::vector<hpc> falling(n_pts, hpc(1)), partial(n_pts, hpc(0));
    std::vector<hpc> d_fit(std::size_t(l_max) + 1);
    for (int l = 0; l <= l_max; ++l) {
        std::vector<hpc> u(n_pts), v(n_pts);
        for (int k = 0; k < n_pts; ++k) {
            auto ks = std::size_t(k);
            if (l > 0) {
                partial[ks] += d_fit[std::size_t(l - 1)] / falling[ks];
                falling[ks] *= z[ks] - (l - 1);
            }
            v[ks] = (g[ks] - partial[ks]) * falling[ks];
            u[ks] = 1 / (z[ks] - l);
        }
        hpc full = neville_origin(u, v, std::size_t(n_pts));
        hpc drop = neville_origin(u, v, std::size_t(n_pts) - 1);
        d_fit[std::size_t(l)] = full;
        std::complex<double> d(double(full.real()), double(full.imag()));
        out.d[std::size_t(l)] = ExactComplex(d);
        out.spread[std::size_t(l)] = double(hpf(abs(full - drop)));
        if (out.spread[std::size_t(l)] > 0.1 * std::max(std::abs(d), 1e-6))
            out.ill_conditioned = true;
    }
    return out;
}

GaussianRational BPolynomial::coefficient_at(const Rational& s) const {
    GaussianRational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * GaussianRational(s) + *it;
    return acc;
}

PiExact BPolynomial::value_at(const Rational& s) const {
    return PiExact(coefficient_at(s), half_grade);
}

std::complex<double> BPolynomial::value_at(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + it->value();
    return acc * std::pow(kSqrtPi, half_grade);
}

WmTables::WmTables(int m_max) : m_max_(m_max) {
    if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
    auto akn = akn_table(3 * m_max);
    table_.resize(std::size_t(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        auto& per_l = table_[std::size_t(m)];
        per_l.resize(std::size_t(m / 2) + 1);
        for (int l = 0; 2 * l <= m; ++l) {
            auto& per_h = per_l[std::size_t(l)];
            per_h.resize(std::size_t(m - 2 * l) + 1);
            for (int h = 0; 2 * l + h <= m; ++h) {
                const int t = m - 2 * l - h;  // nu + mu + b
                if (t % 2) continue;          // no admissible (nu, mu, b)
                BPolynomial B;
                B.half_grade = h - m;  // every admissible term carries pi^{(h-m)/2}
                std::vector<GaussianRational> coeffs;
                for (int nu = 0; nu <= t; ++nu) {
                    if (std::size_t(nu) >= akn.size()) break;
                    for (int mu = 0; mu + nu <= t; ++mu) {
                        const int b = t - nu - mu;
                        const int k = 3 * nu + b;
                        if (std::size_t(k) >= akn[std::size_t(nu)].size()) continue;
                        const Rational& a = akn[std::size_t(nu)][std::size_t(k)];
                        if (a == 0) continue;
                        const int n = (mu + k) / 2;  // (mu + k) = t + 2 nu is even
                        // Gamma(n + 1/2) = g_n sqrt(pi)
                        Rational g_n(factorial(2 * unsigned(n)),
                                     pow_int(4, unsigned(n)) * factorial(unsigned(n)));
                        Rational mag = a * pow_rat(Rational(-2), n) * g_n *
                                       pow_rat(Rational(-2), -long(h)) *
                                       pow_rat(Rational(4), nu - l) / Rational(factorial(unsigned(nu)));
                        GaussianRational c = GaussianRational(mag) * i_power(n + nu + l);
                        RatPoly p = poly_mul(binomial_poly(Rational(-1, 4) - Rational(l, 2), Rational(-1), mu),
                                             binomial_poly(Rational(1, 2) + 2 * nu - mu - k - l, Rational(-2), h));
                        if (coeffs.size() < p.size()) coeffs.resize(p.size());
                        for (std::size_t i = 0; i < p.size(); ++i)
                            coeffs[i] += c * GaussianRational(p[i]);
                    }
                }
                while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
                B.coeffs = std::move(coeffs);
                per_h[std::size_t(h)] = std::move(B);
            }
        }
    }
}

const BPolynomial& WmTables::B(int m, int l, int h) const {
    static const BPolynomial zero{};
    if (m < 0 || m > m_max_ || l < 0 || h < 0 || 2 * l + h > m) return zero;
    return table_[std::size_t(m)][std::size_t(l)][std::size_t(h)];
}

PiExact WmTables::wm_exact(int m, const Rational& s, const Rational& alpha,
                           const std::vector<Rational>& d) const {
    if (m > m_max_) throw std::out_of_range("m exceeds table size");
    PiExact acc;
    for (int l = 0; 2 * l <= m; ++l) {
        if (std::size_t(l) >= d.size()) break;
        for (int h = 0; 2 * l + h <= m; ++h) {
            const BPolynomial& b = B(m, l, h);
            if (b.is_zero()) continue;
            acc += b.value_at(s) * PiExact(GaussianRational(d[std::size_t(l)] * pow_rat(alpha, h)));
        }
    }
    return acc;
}

std::complex<double> WmTables::wm_eval(int m, std::complex<double> s, std::complex<double> alpha,
                                       const std::vector<std::complex<double>>& d) const {
    if (m > m_max_) throw std::out_of_range("m exceeds table size");
    std::complex<double> acc = 0.0;
    for (int l = 0; 2 * l <= m; ++l) {
        if (std::size_t(l) >= d.size()) break;
        for (int h = 0; 2 * l + h <= m; ++h) {
            const BPolynomial& b = B(m, l, h);
            if (b.is_zero()) continue;
            acc += b.value_at(s) * d[std::size_t(l)] * std::pow(alpha, h);
        }
    }
    return acc;
}

Rational QuadraticForm::eval(const std::vector<Rational>& d) const {
    Rational acc = 0;
    for (int l = 0; l <= N; ++l)
        for (int h = 0; l + h <= N; ++h)
            acc += alpha[std::size_t(l)][std::size_t(h)] * d[std::size_t(l)] * d[std::size_t(h)];
    return acc;
}

std::complex<double> QuadraticForm::eval(const std::vector<std::complex<double>>& d) const {
    std::complex<double> acc = 0.0;
    for (int l = 0; l <= N; ++l)
        for (int h = 0; l + h <= N; ++h)
            acc += to_double(alpha[std::size_t(l)][std::size_t(h)]) * d[std::size_t(l)] * d[std::size_t(h)];
    return acc;
}

QuadraticForm quadratic_form(int N) {
    if (N < 2) throw std::invalid_argument("quadratic form needs N >= 2");
    WmTables tables(2 * N);
    const Rational s(Rational(3, 4) - N);  // s_{2N} = 3/4 - (2N)/2

    // divisor (-4 pi i)^{-N} (1 + (-1)^N binom(2N-1, N))
    GaussianRational div_unit = i_power(-N) * GaussianRational(pow_rat(Rational(-4), -long(N)));
    Rational div_mag = Rational(1) + Rational((N % 2) ? -1 : 1) * Rational(binomial_int(2 * unsigned(N), unsigned(N)) / 2);
    PiExact divisor(div_unit * GaussianRational(div_mag), -2 * N);

    QuadraticForm out;
    out.N = N;
    out.normalization = divisor;
    out.alpha.assign(std::size_t(N) + 1, std::vector<Rational>(std::size_t(N) + 1, Rational(0)));
    for (int l = 0; l <= N; ++l) {
        for (int h = 0; l + h <= N; ++h) {
            PiExact raw = PiExact(neg_two_i_inv_pow(h), -2 * h) * tables.B(2 * N - h, l, h).value_at(s);
            PiExact norm = raw / divisor;
            if (norm.is_zero()) continue;
            if (!norm.is_single_grade() || norm.terms().begin()->first != 0 ||
                !norm.terms().begin()->second.is_real()) {
                throw std::logic_error("quadratic form coefficient not a real rational at (l,h)=(" +
                                       std::to_string(l) + "," + std::to_string(h) +
                                       "); residual pi half-grade " +
                                       std::to_string(norm.terms().begin()->first));
            }
            out.alpha[std::size_t(l)][std::size_t(h)] = norm.terms().begin()->second.re;
        }
    }
    return out;
}

PiValue constraint_residual(const WmTables& tables, const StructuralSequence& d, int M, int p) {
    if (M < 1 || p < 1 || p > 2 * M) throw std::out_of_range("need M >= 1 and 1 <= p <= 2M");
    if (M > tables.m_max()) throw std::out_of_range("M exceeds table size");
    if (d.d.size() < std::size_t(M) + 1) throw std::out_of_range("d sequence does not reach M");
    const Rational sM = Rational(3, 4) - Rational(M, 2);
    const std::complex<double> sMv(to_double(sM), 0.0);
    bool exact = sequence_exact(d);

    PiExact acc_exact;
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> inv_m2pii = 1.0 / std::complex<double>(0.0, -2.0 * kPi);
    for (int h = std::max(M - p, 0); 2 * h <= 2 * M - p; ++h) {
        for (int l = 0; 2 * l <= 2 * (M - h) - p; ++l) {
            const BPolynomial& b = tables.B(M - h, l, p + h - M);
            if (b.is_zero()) continue;
            if (exact) {
                GaussianRational dd = *d.d[std::size_t(l)].exact * *d.d[std::size_t(h)].exact;
                acc_exact += PiExact(neg_two_i_inv_pow(h), -2 * h) * b.value_at(sM) * PiExact(dd);
            }
            acc += std::pow(inv_m2pii, h) * b.value_at(sMv) * d.d[std::size_t(l)].value *
                   d.d[std::size_t(h)].value;
        }
    }
    PiValue out;
    out.value = acc;
    if (exact) {
        out.exact = acc_exact;
        out.value = acc_exact.value();
    }
    return out;
}

StructuralSequence recursive_d(const ExactComplex& d1, int l_max) {
    if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
    StructuralSequence out;
    out.provenance = StructuralSequence::Provenance::Recursion;
    out.d.resize(std::size_t(l_max) + 1);
    out.d[0] = ExactComplex(Rational(1));
    out.d[1] = d1;
    for (int N = 2; N <= l_max; ++N) {
        QuadraticForm q = quadratic_form(N);
        ExactComplex rest(GaussianRational{});
        for (int l = 0; l <= N; ++l) {
            for (int h = 0; l + h <= N; ++h) {
                if ((l == 0 && h == N) || (l == N && h == 0)) continue;
                const Rational& a = q.alpha[std::size_t(l)][std::size_t(h)];
                if (a == 0) continue;
                rest += ExactComplex(a) * out.d[std::size_t(l)] * out.d[std::size_t(h)];
            }
        }
        // alpha_{0,N} + alpha_{N,0} = 1 makes the linear solve trivial
        out.d[std::size_t(N)] = ExactComplex(GaussianRational{}) - rest;
    }
    return out;
}

std::complex<double> twist_residue(const LFunctionData& F, double alpha, int l) {
    if (alpha <= 0) throw std::domain_error("alpha must be positive");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    double n_alpha = alpha * alpha / 4.0;
    double n_round = std::round(n_alpha);
    if (std::abs(n_alpha - n_round) > 1e-9 || n_round < 1.0)
        throw std::domain_error("alpha not in the spectrum: alpha^2/4 is not a positive integer");
    int n = int(n_round);
    if (n > F.coefficients.n_max())
        throw std::domain_error("alpha^2/4 exceeds the stored coefficient prefix");
    std::complex<double> a = F.coefficients.value(n);
    if (std::abs(a) == 0.0) throw std::domain_error("alpha not in the spectrum: a(alpha^2/4) = 0");

    auto inv = compute_invariants(F.gamma, unsigned(l) + 1);
    auto seq = structural_invariants(inv, l);
    std::complex<double> rho = std::exp(std::complex<double>(0.0, kPi / 4)) * std::conj(a) /
                               std::sqrt(alpha);
    rho *= seq.d[std::size_t(l)].value;
    rho *= std::pow(1.0 / std::complex<double>(0.0, -2.0 * kPi), l) * std::pow(alpha, -l);
    return rho;
}

}  // namespace selberglab
