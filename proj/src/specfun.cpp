#include "selberglab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

namespace selberglab::specfun {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0..B_k

// Akiyama-Tanigawa in exact rationals.
void extend_bernoulli(unsigned n) {
    if (g_bernoulli.size() > n) return;
    unsigned upto = std::max<unsigned>(n, 40);
    std::vector<Rational> table;
    std::vector<Rational> row(upto + 1);
    table.reserve(upto + 1);
    for (unsigned m = 0; m <= upto; ++m) {
        row[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        table.push_back(row[0]);  // B_m with B_1 = +1/2 in this scheme
    }
    if (upto >= 1) table[1] = Rational(-1, 2);
    g_bernoulli = std::move(table);
}

}  // namespace

const Rational& bernoulli_number(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(n);
    return g_bernoulli[n];
}

std::vector<Rational> bernoulli_poly_coeffs(unsigned n) {
    std::vector<Rational> c(n + 1);  // c[k] multiplies x^{n-k}
    for (unsigned k = 0; k <= n; ++k) c[k] = Rational(binomial_int(n, k)) * bernoulli_number(k);
    return c;
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    auto c = bernoulli_poly_coeffs(n);
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc = acc * x + c[k];
    return acc;
}

GaussianRational bernoulli_polynomial(unsigned n, const GaussianRational& x) {
    auto c = bernoulli_poly_coeffs(n);
    GaussianRational acc;
    for (unsigned k = 0; k <= n; ++k) acc = acc * x + GaussianRational(c[k]);
    return acc;
}

std::complex<double> bernoulli_polynomial(unsigned n, std::complex<double> x) {
    auto c = bernoulli_poly_coeffs(n);
    std::complex<double> acc = 0.0;
    for (unsigned k = 0; k <= n; ++k) acc = acc * x + to_double(c[k]);
    return acc;
}

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::complex<double> log_gamma_lanczos(std::complex<double> s) {
    // valid for Re(s) >= 1/2
    const double log_sqrt_2pi = 0.91893853320467274178;
    std::complex<double> acc = kLanczosCoeff[0];
    for (int i = 1; i < 15; ++i) acc += kLanczosCoeff[i] / (s - 1.0 + double(i));
    std::complex<double> t = s + (kLanczosG - 0.5);
    return log_sqrt_2pi + (s - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
        throw std::domain_error("log_gamma pole at nonpositive integer");
    if (s.real() >= 0.5) return log_gamma_lanczos(s);
    // reflection: log Gamma(s) = log(pi) - log sin(pi s) - log Gamma(1-s),
    // with log sin evaluated overflow-free for large |Im s|.
    const double pi = std::numbers::pi;
    std::complex<double> ls;  // log sin(pi s)
    double t = s.imag();
    if (std::abs(t) > 20.0) {
        // sin(pi s) = (e^{i pi s} - e^{-i pi s}) / (2i); keep the dominant exponential
        std::complex<double> ipis(-pi * t, pi * s.real());
        if (t > 0) {
            ls = -ipis + std::log(-(1.0 - std::exp(2.0 * ipis)) / std::complex<double>(0.0, 2.0));
        } else {
            ls = ipis + std::log((1.0 - std::exp(-2.0 * ipis)) / std::complex<double>(0.0, 2.0));
        }
    } else {
        ls = std::log(std::sin(pi * s));
    }
    std::complex<double> out = std::log(pi) - ls - log_gamma_lanczos(1.0 - s);
    return out;
}

PiExact gamma_half_integer(long n) {
    Rational r;
    if (n >= 0) {
        r = Rational(factorial(2 * unsigned(n)), pow_int(4, unsigned(n)) * factorial(unsigned(n)));
    } else {
        // Gamma(n+1/2) Gamma(1/2-n) = pi / sin(pi(n+1/2)) = (-1)^n pi
        long m = -n;
        Rational g_pos(factorial(2 * unsigned(m)), pow_int(4, unsigned(m)) * factorial(unsigned(m)));
        r = Rational(1) / g_pos;  // pi/(g_pos sqrt(pi)) = sqrt(pi)/g_pos
        if (m % 2 == 1) r = -r;
    }
    return PiExact(GaussianRational(r), 1);
}

Rational generalized_binomial(const Rational& x, unsigned n) {
    Rational acc = 1;
    for (unsigned k = 0; k < n; ++k) acc *= (x - Rational(k)) / Rational(k + 1);
    return acc;
}

std::complex<double> generalized_binomial(std::complex<double> x, unsigned n) {
    std::complex<double> acc = 1.0;
    for (unsigned k = 0; k < n; ++k) acc *= (x - double(k)) / double(k + 1);
    return acc;
}

double inv_gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 0.5) {
        if (x > 171.0) return 0.0;  // 1/Gamma underflows
        return 1.0 / std::tgamma(x);
    }
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    return std::tgamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
}

std::complex<double> eval_mittag_leffler(double beta, std::complex<double> w) {
    std::complex<double> sum = 0.0;
    std::complex<double> wpow = 1.0;  // (-w)^l
    double running_max = 0.0;
    const int cap = 500;
    for (int l = 0; l < cap; ++l) {
        double ig = inv_gamma_real(double(l) + beta);
        std::complex<double> term = wpow * ig;
        sum += term;
        running_max = std::max(running_max, std::abs(sum));
        // the series starts at l = -floor(beta) for nonpositive integer offsets,
        // so never truncate before a nonzero partial sum has appeared
        if (l > 2 && running_max > 0.0 && std::abs(term) <= 1e-16 * running_max && std::abs(wpow) * inv_gamma_real(double(l) + 1.0 + beta) * std::abs(w) <= 1e-16 * running_max)
            break;
        wpow *= -w;
    }
    return sum;
}

namespace {

// reduce x mod 2 into [0,2)
Rational mod2(const Rational& x) {
    Integer n = numerator(x), d = denominator(x);
    Integer twoD = 2 * d;
    Integer m = n % twoD;
    if (m < 0) m += twoD;
    return Rational(m, d);
}

}  // namespace

double cospi(const Rational& x) {
    Rational r = mod2(x);  // in [0,2)
    Rational half(1, 2);
    if (denominator(r) <= 2) {
        Rational q = r / half;  // integer 0..3
        long k = q.convert_to<long>();
        switch (k) {
            case 0: return 1.0;
            case 1: return 0.0;
            case 2: return -1.0;
            default: return 0.0;
        }
    }
    return std::cos(std::numbers::pi * to_double(r));
}

double sinpi(const Rational& x) {
    Rational r = mod2(x);
    Rational half(1, 2);
    if (denominator(r) <= 2) {
        long k = (r / half).convert_to<long>();
        switch (k) {
            case 0: return 0.0;
            case 1: return 1.0;
            case 2: return 0.0;
            default: return -1.0;
        }
    }
    return std::sin(std::numbers::pi * to_double(r));
}

}  // namespace selberglab::specfun
