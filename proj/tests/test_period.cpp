#include <doctest.h>

#include "selberglab/period.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace selberglab;

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

QExpansion random_expansion(int n_max, cplx lambda, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    QExpansion q;
    q.lambda = lambda;
    q.c_growth = 0.0;
    q.c.emplace_back(1.0, 0.0);  // pin c(1) so the partial sums stay away from zero
    for (int n = 2; n <= n_max; ++n) q.c.emplace_back(dist(rng), 0.0);
    return q;
}

std::vector<cplx> grid_points() {
    std::vector<cplx> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            pts.emplace_back(-0.4 + 0.2 * i, 0.3 + 1.7 * j / 4.0);
    return pts;
}

double psi_scale(const QExpansion& q, cplx lambda, cplx z) {
    auto psi = [&](cplx w) {
        return eval_f(q, w) - std::pow(w, -2.0 * lambda - 1.0) * eval_f(q, -1.0 / w);
    };
    cplx zp1 = z + 1.0;
    return std::max({std::abs(psi(z)), std::abs(psi(zp1)),
                     std::abs(std::pow(zp1, -2.0 * lambda - 1.0) * psi(z / zp1)),
                     std::abs(eval_f(q, z))});
}

}  // namespace

TEST_CASE("tau coefficients") {
    auto tau = delta_tau(5);
    CHECK(tau[0] == 1);
    CHECK(tau[1] == -24);
    CHECK(tau[2] == 252);
    CHECK(tau[3] == -1472);
    CHECK(tau[4] == 4830);
}

TEST_CASE("q-expansion evaluation") {
    auto q = delta_expansion(256);

    // 1-periodicity
    cplx z(0.3, 0.8);
    CHECK(std::abs(eval_f(q, z + 1.0) - eval_f(q, z)) < 1e-12 * std::abs(eval_f(q, z)));

    // value at i: positive, consistent across truncation lengths
    PeriodPoint info;
    cplx fi = eval_f(q, {0.0, 1.0}, &info);
    CHECK(fi.real() > 0.0);
    CHECK(std::abs(fi.imag()) < 1e-15 * fi.real());
    CHECK(info.truncation == 256);
    CHECK(info.tail_bound <= 1e-12 * std::abs(fi));
    cplx fi_long = eval_f(delta_expansion(400), {0.0, 1.0});
    CHECK(std::abs(fi - fi_long) < 1e-12 * std::abs(fi));

    // divisor coefficients with lambda = 0: real on the imaginary axis
    auto d = divisor_expansion(256);
    for (double y : {0.4, 1.0, 2.5}) {
        cplx v = eval_f(d, {0.0, y});
        CHECK(std::abs(v.imag()) < 1e-14 * std::abs(v));
    }

    CHECK_THROWS_AS(eval_f(q, {0.0, -1.0}), std::domain_error);

    // too short a prefix at low height: the error carries a length estimate that
    // converges once the partial sum stabilizes
    int need = 5;
    bool ok = false;
    for (int round = 0; round < 5 && !ok; ++round) {
        try {
            eval_f(delta_expansion(need), {0.0, 0.05});
            ok = true;
        } catch (const insufficient_coefficients& e) {
            CHECK(e.required_n_max > need);
            need = e.required_n_max;
        }
    }
    CHECK(ok);
    CHECK(need > 5);

    // growth bound enforcement
    QExpansion bad;
    bad.c = {cplx(10.0, 0.0)};
    bad.c_growth = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("period function") {
    // single-term expansion: psi is the definition verbatim
    QExpansion one;
    one.c = {cplx(1.0, 0.0)};
    one.lambda = {0.7, 0.0};
    one.c_growth = 0.0;
    one.finite = true;
    cplx z(0.2, 1.1);
    cplx expected = std::exp(cplx(0.0, kTwoPi) * z) -
                    std::pow(z, -2.0 * one.lambda - 1.0) *
                        std::exp(cplx(0.0, kTwoPi) * (-1.0 / z));
    CHECK(std::abs(eval_psi(one, z) - expected) < 1e-15);

    // z = i is fixed by z -> -1/z, so psi(i) = f(i) (1 - i^{-2 lambda - 1})
    auto r = random_expansion(64, {0.7, 0.0}, 1u);
    cplx i{0.0, 1.0};
    cplx fi = eval_f(r, i);
    CHECK(std::abs(eval_psi(r, i) - fi * (1.0 - std::pow(i, -2.0 * r.lambda - 1.0))) <
          1e-13 * std::abs(fi));

    // weight-12 modularity: psi vanishes for the cusp-form expansion
    auto q = delta_expansion(256);
    for (cplx pt : {cplx(0.0, 1.0), cplx(0.5, 1.5), cplx(-0.4, 0.8)}) {
        CAPTURE(pt);
        CHECK(std::abs(eval_psi(q, pt)) <= 1e-9 * std::abs(eval_f(q, pt)));
    }
    for (cplx pt : grid_points()) {
        CAPTURE(pt);
        CHECK(std::abs(eval_psi(q, pt)) <= 1e-9 * std::abs(eval_f(q, pt)));
    }
}

TEST_CASE("three-term functional equation") {
    auto q = delta_expansion(256);
    cplx z(0.3, 0.7);
    CHECK(std::abs(three_term_residual(q, q.lambda, z)) <=
          1e-9 * psi_scale(q, q.lambda, z));

    // the identity only needs 1-periodicity, not modularity
    auto r = random_expansion(64, {0.7, 0.0}, 2u);
    CHECK(std::abs(three_term_residual(r, r.lambda, {0.0, 1.0})) <=
          1e-9 * psi_scale(r, r.lambda, {0.0, 1.0}));

    auto d = divisor_expansion(256);
    for (cplx pt : grid_points()) {
        CAPTURE(pt);
        CHECK(std::abs(three_term_residual(q, q.lambda, pt)) <= 1e-9 * psi_scale(q, q.lambda, pt));
        CHECK(std::abs(three_term_residual(d, d.lambda, pt)) <= 1e-9 * psi_scale(d, d.lambda, pt));
        CHECK(std::abs(three_term_residual(r, r.lambda, pt)) <= 1e-9 * psi_scale(r, r.lambda, pt));
    }
}

TEST_CASE("branch coherence on the upper half-plane") {
    std::mt19937 rng(3u);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.05, 5.0);
    const cplx lambdas[] = {{0.0, 0.0}, {0.5, 0.0}, {5.5, 0.0}, {0.0, 2.0}};
    for (int t = 0; t < 100; ++t) {
        cplx z(re(rng), im(rng));
        for (cplx lam : lambdas) {
            cplx e = -2.0 * lam - 1.0;
            cplx lhs = std::pow(z, e);
            cplx rhs = std::pow(z + 1.0, e) * std::pow(z / (z + 1.0), e);
            CAPTURE(z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
    }
}

TEST_CASE("growth toward the real line") {
    // a series with the real line as natural boundary cannot have bounded mean
    // square as y drops to 0; pointwise |f(iy)| is no witness (cusp forms decay
    // on the imaginary axis), so the guard is the L^2 average over a period
    auto q = delta_expansion(600);
    auto d = divisor_expansion(600);
    double prev_q = 0.0, prev_d = 0.0;
    for (double y : {0.5, 0.25, 0.125}) {
        double mq = mean_square(q, y), md = mean_square(d, y);
        CHECK(mq > prev_q);
        CHECK(md > prev_d);
        prev_q = mq;
        prev_d = md;
    }
}
