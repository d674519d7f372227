#include "selberglab/period.hpp"

#include "selberglab/catalog.hpp"

#include <cmath>
#include <numbers>

namespace selberglab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRelTail = 1e-12;

double tail_bound_at(double y, double c_growth, int n) {
    double decay = std::exp(-kTwoPi * y);
    return std::pow(double(n), c_growth) * std::exp(-kTwoPi * y * double(n)) / (1.0 - decay);
}

}  // namespace

void QExpansion::validate() const {
    for (int n = 1; n <= n_max(); ++n) {
        if (std::abs(c[std::size_t(n) - 1]) > std::pow(double(n), c_growth))
            throw std::invalid_argument("growth bound violated at n = " + std::to_string(n));
    }
}

std::vector<Integer> delta_tau(int n_max) { return ramanujan_tau(n_max); }

QExpansion delta_expansion(int n_max) {
    QExpansion q;
    q.lambda = {11.0 / 2.0, 0.0};
    q.c_growth = 6.0;
    for (const Integer& t : delta_tau(n_max)) q.c.emplace_back(t.convert_to<double>(), 0.0);
    q.validate();
    return q;
}

QExpansion divisor_expansion(int n_max) {
    QExpansion q;
    q.lambda = {0.0, 0.0};
    q.c_growth = 1.0;
    for (const Integer& d : divisor_counts(n_max)) q.c.emplace_back(d.convert_to<double>(), 0.0);
    q.validate();
    return q;
}

std::complex<double> eval_f(const QExpansion& q, std::complex<double> z, PeriodPoint* info) {
    if (z.imag() <= 0.0) throw std::domain_error("eval_f requires Im z > 0");
    q.validate();
    const std::complex<double> e1 = std::exp(std::complex<double>(0.0, kTwoPi) * z);
    std::complex<double> en = 1.0, acc = 0.0;
    for (int n = 1; n <= q.n_max(); ++n) {
        en *= e1;
        acc += q.c[std::size_t(n) - 1] * en;
    }
    double bound = q.finite ? 0.0 : tail_bound_at(z.imag(), q.c_growth, q.n_max());
    double scale = kRelTail * std::abs(acc);
    if (bound > scale) {
        int need = q.n_max();
        while (need < 1 << 20 && tail_bound_at(z.imag(), q.c_growth, need) > scale) ++need;
        throw insufficient_coefficients(need);
    }
    if (info) {
        info->z = z;
        info->truncation = q.n_max();
        info->tail_bound = bound;
    }
    return acc;
}

std::complex<double> eval_psi(const QExpansion& q, std::complex<double> z) {
    std::complex<double> inv = -1.0 / z;  // Im(-1/z) = Im z / |z|^2 > 0
    return eval_f(q, z) - std::pow(z, -2.0 * q.lambda - 1.0) * eval_f(q, inv);
}

std::complex<double> three_term_residual(const QExpansion& q, std::complex<double> lambda,
                                         std::complex<double> z) {
    auto psi = [&](std::complex<double> w) {
        return eval_f(q, w) - std::pow(w, -2.0 * lambda - 1.0) * eval_f(q, -1.0 / w);
    };
    std::complex<double> zp1 = z + 1.0;
    return psi(z) - psi(zp1) - std::pow(zp1, -2.0 * lambda - 1.0) * psi(z / zp1);
}

double mean_square(const QExpansion& q, double y) {
    if (y <= 0.0) throw std::domain_error("mean_square requires y > 0");
    double acc = 0.0;
    for (int n = 1; n <= q.n_max(); ++n)
        acc += std::norm(q.c[std::size_t(n) - 1]) * std::exp(-2.0 * kTwoPi * y * double(n));
    return acc;
}

}  // namespace selberglab
