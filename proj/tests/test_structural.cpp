#include <doctest.h>

#include "selberglab/catalog.hpp"
#include "selberglab/specfun.hpp"
#include "selberglab/structural.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

using namespace selberglab;

namespace {

StructuralSequence entry_pipeline(const char* name, int l_max) {
    auto e = load_entry(name);
    auto inv = compute_invariants(e.data.gamma, unsigned(l_max) + 4);
    return structural_invariants(inv, l_max);
}

Rational real_part(const ExactComplex& v) {
    REQUIRE(v.is_exact());
    REQUIRE(v.exact->is_real());
    return v.exact->re;
}

StructuralSequence from_rationals(std::vector<Rational> d) {
    StructuralSequence s;
    for (auto& x : d) s.d.emplace_back(GaussianRational(x));
    return s;
}

}  // namespace

TEST_CASE("power series of the square-root remainder") {
    auto a = akn_table(9);
    CHECK(a[0][0] == Rational(1));
    CHECK(a[1][3] == Rational(1, 16));
    CHECK(a[1][4] == specfun::generalized_binomial(Rational(1, 2), 4));
    CHECK(a[2][6] == Rational(1, 256));  // square of the leading term
    for (std::size_t nu = 0; nu < a.size(); ++nu)
        for (std::size_t k = 0; k < 3 * nu; ++k) CHECK(a[nu][k] == 0);
}

TEST_CASE("stirling coefficients") {
    auto z = load_entry("zeta_squared");
    auto inv = compute_invariants(z.data.gamma, 4);
    CHECK(real_part(stirling_r(inv, 1)) == Rational(1, 8));

    // -r_1 = 13/24 + xi + H(2) on the weight-12 data
    auto r = load_entry("ramanujan_normalized");
    auto rinv = compute_invariants(r.data.gamma, 4);
    Rational expected = Rational(13, 24) + rinv.xi.exact->re + rinv.H[2].exact->re;
    CHECK(real_part(stirling_r(rinv, 1)) == -expected);

    // Hecke parameter mu: r_1 = -(2 mu^2 - 1/8)
    auto h = load_entry("hecke(7/2)");
    auto hinv = compute_invariants(h.data.gamma, 4);
    CHECK(real_part(stirling_r(hinv, 1)) == Rational(-195, 8));

    CHECK_THROWS_AS(stirling_r(compute_invariants(z.data.gamma, 2), 2), std::out_of_range);
}

TEST_CASE("series-exponential coefficients") {
    auto r = load_entry("ramanujan_normalized");
    auto inv = compute_invariants(r.data.gamma, 5);
    std::vector<ExactComplex> rv(4, ExactComplex(Rational(0)));
    for (int nu = 1; nu <= 3; ++nu) rv[std::size_t(nu)] = stirling_r(inv, nu);
    auto V = v_coefficients(rv, 3);
    Rational r1 = real_part(rv[1]), r2 = real_part(rv[2]);
    CHECK(real_part(V[0]) == Rational(1));
    CHECK(real_part(V[1]) == r1 / 2);
    CHECK(real_part(V[2]) == r2 / 6 + r1 * r1 / 8);

    std::vector<ExactComplex> zero(5, ExactComplex(Rational(0)));
    auto VZ = v_coefficients(zero, 4);
    for (int h = 1; h <= 4; ++h) CHECK(VZ[std::size_t(h)].exact->is_zero());
}

TEST_CASE("factorial series coefficients") {
    auto A = factorial_series(6, 6);
    CHECK(A[1][1] == Rational(-2));
    CHECK(A[1][2] == Rational(-1));
    for (int h = 1; h <= 6; ++h)
        for (int l = 0; l < h; ++l) CHECK(A[std::size_t(h)][std::size_t(l)] == 0);

    // both sides of the expansion agree up to a z^{-(l_max+1)} tail
    for (int h : {1, 2}) {
        std::vector<double> res;
        for (double zr : {50.0, 100.0, 200.0}) {
            std::complex<double> z(zr, 0.0), s = (0.5 - z) / 2.0;
            std::complex<double> rhs = 0.0, fall = 1.0;
            for (int l = 0; l <= 6; ++l) {
                rhs += to_double(A[std::size_t(h)][std::size_t(l)]) / fall;
                fall *= z - double(l);
            }
            res.push_back(std::abs(std::pow(s, -h) - rhs));
        }
        CHECK(res[0] > res[1]);
        CHECK(res[1] > res[2]);
        CHECK(res[0] / res[2] > 500.0);  // ~4^7 for a seventh-order tail
    }
}

TEST_CASE("pipeline structural invariants") {
    auto z = entry_pipeline("zeta_squared", 3);
    CHECK(real_part(z.d[0]) == Rational(1));
    CHECK(real_part(z.d[1]) == Rational(-1, 8));

    auto r = entry_pipeline("ramanujan_normalized", 1);
    CHECK(real_part(r.d[1]) == Rational(483, 8));

    // d_1 = chi - 1/8 across the catalog families
    for (const char* name : {"hecke(7/2)", "maass(1,3/2)", "hecke(2)"}) {
        auto e = load_entry(name);
        auto inv = compute_invariants(e.data.gamma, 5);
        auto seq = structural_invariants(inv, 1);
        CHECK(real_part(seq.d[1]) == inv.chi.exact->re - Rational(1, 8));
    }

    // degree / conductor guards
    GammaFactor bad;
    bad.q = QRep::from_exact({Rational(1), Rational(0), Rational(0)});
    bad.omega = ExactComplex(Rational(1));
    bad.factors.push_back({ExactReal(Rational(1, 2)), ExactComplex(Rational(0))});
    CHECK_THROWS_AS(structural_invariants(compute_invariants(bad, 4), 2), std::domain_error);
}

TEST_CASE("oracle fit matches the exact pipeline") {
    auto r = load_entry("ramanujan_normalized");
    auto fit = oracle_structural_fit(r.data.gamma, 1, 20.0);
    CHECK(std::abs(fit.d[0].value - 1.0) < 1e-6);
    CHECK(std::abs(fit.d[1].value - 483.0 / 8.0) < 1e-4 * 483.0 / 8.0);
    CHECK_FALSE(fit.ill_conditioned);

    auto m = load_entry("maass(0,2)");
    auto mfit = oracle_structural_fit(m.data.gamma, 1, 20.0);
    CHECK(std::abs(mfit.d[1].value - (-8.125)) < 1e-4 * 8.125);

    CHECK_THROWS_AS(oracle_structural_fit(r.data.gamma, 1, 5.0), std::invalid_argument);
}

TEST_CASE("oracle agreement over the virtual-factor grids") {
    const char* grid[] = {"hecke(1/2)", "hecke(1)",     "hecke(3/2)", "hecke(2)",
                          "hecke(5/2)", "hecke(3)",     "hecke(7/2)", "hecke(4)",
                          "hecke(9/2)", "hecke(5)",     "maass(0,0)", "maass(1,1/2)",
                          "maass(0,1)", "maass(1,3/2)", "maass(0,2)", "maass(1,5/2)",
                          "maass(0,3)", "maass(1,7/2)", "maass(0,4)", "maass(1,9/2)"};
    for (const char* name : grid) {
        CAPTURE(name);
        auto e = load_entry(name);
        auto inv = compute_invariants(e.data.gamma, 8);
        auto pipe = structural_invariants(inv, 4);
        auto fit = oracle_structural_fit(e.data.gamma, 4, 20.0);
        for (int l = 0; l <= 4; ++l) {
            CAPTURE(l);
            double scale = std::max(1.0, std::abs(pipe.d[std::size_t(l)].value));
            CHECK(std::abs(fit.d[std::size_t(l)].value - pipe.d[std::size_t(l)].value) <=
                  1e-4 * scale);
        }
        CHECK_FALSE(fit.ill_conditioned);
    }
}

TEST_CASE("bilinear coefficient tables") {
    WmTables tables(10);

    // W_0 is the constant 1
    CHECK(tables.B(0, 0, 0).value_at(Rational(7, 3)) == PiExact(Rational(1)));
    std::vector<std::complex<double>> d = {1.0, -0.125};
    CHECK(std::abs(tables.wm_eval(0, {0.3, 1.7}, {2.0, 0.0}, d) - 1.0) < 1e-15);

    for (int N = 1; N <= 5; ++N) {
        const Rational sN = Rational(3, 4) - N;  // s_{2N}
        // B_N(s_{2N}, 0, N) = (-2)^{-N} C(2N-1, N)
        Rational expected = pow_rat(Rational(-2), -N) * Rational(binomial_int(2 * unsigned(N), unsigned(N)) / 2);
        CHECK(tables.B(N, 0, N).value_at(sN) == PiExact(expected));
        // B_{2N}(s_{2N}, N, 0) = (-4 pi i)^{-N}
        PiExact expected2(i_power(-N) * GaussianRational(pow_rat(Rational(-4), -N)), -2 * N);
        CHECK(tables.B(2 * N, N, 0).value_at(sN) == expected2);
    }

    // outside the support the zero polynomial comes back
    CHECK(tables.B(3, 2, 0).is_zero());
    CHECK(tables.B(2, 0, 1).is_zero());  // odd residual index

    // exact and float evaluation agree
    std::vector<Rational> dr = {Rational(1), Rational(-1, 8), Rational(9, 128), Rational(-75, 1024)};
    std::vector<std::complex<double>> dv = {1.0, -0.125, 9.0 / 128.0, -75.0 / 1024.0};
    for (int m = 0; m <= 6; ++m) {
        auto exact = tables.wm_exact(m, Rational(-1, 4), Rational(2), dr);
        auto val = tables.wm_eval(m, {-0.25, 0.0}, {2.0, 0.0}, dv);
        CHECK(std::abs(exact.value() - val) < 1e-9 * std::max(1.0, std::abs(val)));
    }
}

TEST_CASE("universal quadratic forms") {
    for (int N = 2; N <= 5; ++N) {
        auto q = quadratic_form(N);  // construction itself asserts real coefficients
        CHECK(q.alpha[0][std::size_t(N)] + q.alpha[std::size_t(N)][0] == Rational(1));
    }
    CHECK_THROWS_AS(quadratic_form(1), std::invalid_argument);

    // Q_N vanishes identically on structural sequences
    auto h = entry_pipeline("hecke(1/2)", 4);
    auto z = entry_pipeline("zeta_squared", 4);
    for (int N = 2; N <= 4; ++N) {
        auto q = quadratic_form(N);
        std::vector<Rational> dh, dz;
        for (int l = 0; l <= N; ++l) {
            dh.push_back(real_part(h.d[std::size_t(l)]));
            dz.push_back(real_part(z.d[std::size_t(l)]));
        }
        CHECK(q.eval(dh) == 0);
        CHECK(q.eval(dz) == 0);
    }
}

TEST_CASE("constraint residuals") {
    WmTables tables(6);
    auto z = entry_pipeline("zeta_squared", 6);
    for (int M = 1; M <= 6; ++M)
        for (int p = 1; p <= 2 * M; ++p) {
            CAPTURE(M);
            CAPTURE(p);
            auto res = constraint_residual(tables, z, M, p);
            REQUIRE(res.exact.has_value());
            CHECK(res.exact->is_zero());
        }

    // chi = 1/8 makes every d_l vanish and the constraints trivially hold
    auto flat = entry_pipeline("hecke(1/4)", 2);
    for (int l = 1; l <= 2; ++l) CHECK(flat.d[std::size_t(l)].exact->is_zero());
    CHECK(constraint_residual(tables, flat, 2, 2).exact->is_zero());

    // (M, p) = (2N, 2N) reproduces the raw quadratic form on arbitrary data
    std::vector<Rational> arbitrary = {Rational(1), Rational(1, 3), Rational(-2, 5),
                                       Rational(7, 11), Rational(-1, 7)};
    auto seq = from_rationals(arbitrary);
    WmTables big(4);
    auto res = constraint_residual(big, seq, 4, 4);
    auto q = quadratic_form(2);
    PiExact expected = q.normalization * PiExact(q.eval(arbitrary));
    CHECK(*res.exact == expected);
    CHECK_FALSE(res.exact->is_zero());

    CHECK_THROWS_AS(constraint_residual(tables, z, 2, 5), std::out_of_range);
    CHECK_THROWS_AS(constraint_residual(tables, z, 0, 1), std::out_of_range);
}

TEST_CASE("recursion from the eigenweight alone") {
    for (const char* name : {"zeta_squared", "ramanujan_normalized", "maass(0,2)"}) {
        CAPTURE(name);
        auto pipe = entry_pipeline(name, 5);
        auto rec = recursive_d(pipe.d[1], 5);
        for (int l = 0; l <= 5; ++l)
            CHECK(*rec.d[std::size_t(l)].exact == *pipe.d[std::size_t(l)].exact);
    }

    // d_1 = 0 forces the whole tail to zero
    auto zero = recursive_d(ExactComplex(Rational(0)), 4);
    for (int l = 1; l <= 4; ++l) CHECK(zero.d[std::size_t(l)].exact->is_zero());

    // the sequence is a function of d_1 only
    auto a = recursive_d(ExactComplex(Rational(483, 8)), 3);
    auto b = entry_pipeline("ramanujan_normalized", 3);
    CHECK(*a.d[3].exact == *b.d[3].exact);
}

TEST_CASE("maass sequences ignore the parity datum") {
    auto even = entry_pipeline("maass(0,2)", 4);
    auto odd = entry_pipeline("maass(1,2)", 4);
    for (int l = 0; l <= 4; ++l) CHECK(*even.d[std::size_t(l)].exact == *odd.d[std::size_t(l)].exact);
}

TEST_CASE("d_2 is a degree-4 polynomial in the hecke parameter") {
    auto d2_at = [](const Rational& mu) {
        auto e = load_entry(("hecke(" + to_string(mu) + ")").c_str());
        auto inv = compute_invariants(e.data.gamma, 6);
        return to_double(real_part(structural_invariants(inv, 2).d[2]));
    };
    std::vector<double> mus = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    std::vector<double> vals;
    for (double m : mus) vals.push_back(d2_at(Rational(int(2 * m), 2)));
    auto predict = [&](double x) {
        double acc = 0;
        for (std::size_t i = 0; i < mus.size(); ++i) {
            double w = vals[i];
            for (std::size_t j = 0; j < mus.size(); ++j)
                if (j != i) w *= (x - mus[j]) / (mus[i] - mus[j]);
            acc += w;
        }
        return acc;
    };
    // degree 4 < 6 interpolation nodes, so held-out parameters are reproduced
    for (double held : {3.5, 4.0, 4.5}) {
        double actual = d2_at(Rational(int(2 * held), 2));
        CHECK(std::abs(predict(held) - actual) <= 1e-9 * std::max(1.0, std::abs(actual)));
    }
}

TEST_CASE("twist residues") {
    auto z = load_entry("zeta_squared");

    // alpha = 2 hits n = 1 with a(1) = 1
    auto rho0 = twist_residue(z.data, 2.0, 0);
    CHECK(std::abs(rho0 - std::complex<double>(0.5, 0.5)) < 1e-12);

    // ratio rho_l / rho_0 = d_l (-2 pi i alpha)^{-l}
    auto pipe = entry_pipeline("zeta_squared", 2);
    for (int l : {1, 2}) {
        auto rho = twist_residue(z.data, 2.0, l);
        std::complex<double> expected =
            rho0 * pipe.d[std::size_t(l)].value *
            std::pow(std::complex<double>(0.0, -4.0 * std::numbers::pi), -l);
        CHECK(std::abs(rho - expected) < 1e-12 * std::abs(expected));
    }

    // spectrum membership
    CHECK_THROWS_AS(twist_residue(z.data, 3.0, 0), std::domain_error);       // 9/4 not integral
    CHECK_THROWS_AS(twist_residue(z.data, 1000.0, 0), std::domain_error);    // beyond the prefix
    CHECK_NOTHROW(twist_residue(z.data, 2.0 * std::sqrt(2.0), 0));           // n = 2, a(2) = 2

    // residue relation at M = 2, alpha = 2
    WmTables tables(2);
    std::complex<double> sM(3.0 / 4.0 - 1.0, 0.0);
    std::vector<std::complex<double>> dv;
    for (auto& dd : pipe.d) dv.push_back(dd.value);
    std::complex<double> acc = 0.0;
    for (int m = 1; m <= 2; ++m)
        acc += tables.wm_eval(m, sM, {2.0, 0.0}, dv) * twist_residue(z.data, 2.0, 2 - m);
    CHECK(std::abs(acc) < 1e-14);
}
