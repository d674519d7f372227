#include "selberglab/cli.hpp"

#include "selberglab/catalog.hpp"
#include "selberglab/classifier.hpp"
#include "selberglab/period.hpp"
#include "selberglab/sfunction.hpp"
#include "selberglab/structural.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace selberglab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr double kTolReflection = 1e-10;
constexpr double kTolOracle = 1e-4;
constexpr double kTolDuplication = 1e-10;
constexpr double kTolQuadraticFloat = 1e-8;
constexpr double kTolPeriod = 1e-9;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json j_rational(const Rational& r) { return to_string(r); }

ordered_json j_exact_real(const ExactReal& v) {
    ordered_json j;
    j["provenance"] = v.is_exact() ? "exact" : "float";
    if (v.is_exact()) j["exact"] = j_rational(*v.exact);
    j["value"] = v.value;
    return j;
}

ordered_json j_exact_complex(const ExactComplex& v) {
    ordered_json j;
    j["provenance"] = v.is_exact() ? "exact" : "float";
    if (v.is_exact()) {
        j["re"] = j_rational(v.exact->re);
        j["im"] = j_rational(v.exact->im);
    }
    j["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
    return j;
}

ordered_json j_pi_value(const PiValue& v) {
    ordered_json j;
    j["provenance"] = v.exact.has_value() ? "exact" : "float";
    if (v.exact) {
        ordered_json terms = ordered_json::array();
        for (const auto& [g, c] : v.exact->terms())
            terms.push_back({{"pi_half_grade", g},
                             {"re", j_rational(c.re)},
                             {"im", j_rational(c.im)}});
        j["terms"] = terms;
    }
    j["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
    return j;
}

ordered_json j_checks(const std::vector<CheckResult>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

void add_check(std::vector<CheckResult>& checks, std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string resolve_mode(const CommandRequest& req) {
    std::string mode = req.mode;
    if (mode.empty()) {
        const char* env = std::getenv("SELBERGLAB_MODE");
        mode = env ? env : "exact";
    }
    if (mode != "exact" && mode != "float")
        throw input_error("mode must be 'exact' or 'float', got '" + mode + "'");
    return mode;
}

LFunctionData to_float_mode(LFunctionData f) {
    f.gamma.q = QRep::from_float(f.gamma.q.value);
    f.gamma.omega = ExactComplex(f.gamma.omega.value);
    for (auto& t : f.gamma.factors) {
        t.lambda = ExactReal::from_float(t.lambda.value);
        t.mu = ExactComplex(t.mu.value);
    }
    for (auto& c : f.coefficients.base) c = ExactComplex(c.value);
    f.coefficients.shift = ExactComplex(f.coefficients.shift.value);
    return f;
}

LFunctionData load_input(const CommandRequest& req, const std::string& mode) {
    LFunctionData data;
    if (req.input.empty()) throw input_error("no input given");
    if (req.input_is_path) {
        std::ifstream in(req.input);
        if (!in) throw input_error("cannot open input file '" + req.input + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        data = parse_gamma_json(buf.str());
    } else {
        data = load_entry(req.input).data;
    }
    if (mode == "float") data = to_float_mode(data);
    return data;
}

bool rel_close(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool exact_or_close(const ExactComplex& a, const ExactComplex& b, double tol) {
    if (a.is_exact() && b.is_exact()) return *a.exact == *b.exact;
    return rel_close(a.value, b.value, tol);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string fmt(cplx z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

// ---------------------------------------------------------------------------

ordered_json cmd_invariants(const LFunctionData& data, std::vector<CheckResult>&) {
    auto inv = compute_invariants(data.gamma, 4);
    ordered_json out;
    out["degree"] = j_exact_real(inv.degree);
    out["conductor"] = j_pi_value(inv.conductor);
    out["omega_F"] = j_exact_complex(inv.omega_F);
    out["xi"] = j_exact_complex(inv.xi);
    out["eta"] = j_exact_real(inv.eta);
    out["theta"] = j_exact_real(inv.theta);
    ordered_json hs = ordered_json::array();
    for (const auto& h : inv.H) hs.push_back(j_exact_complex(h));
    out["H"] = hs;
    out["chi"] = j_exact_complex(inv.chi);
    return out;
}

const char* verdict_name(Classification::Verdict v) {
    switch (v) {
        case Classification::Verdict::HoloCuspForm: return "holomorphic_cusp_form";
        case Classification::Verdict::ZetaSquared: return "zeta_squared";
        default: return "maass_form";
    }
}

ordered_json cmd_classify(const LFunctionData& data, std::vector<CheckResult>& checks) {
    Classification c = classify(data);
    ordered_json out;
    out["verdict"] = verdict_name(c.verdict);
    if (c.verdict == Classification::Verdict::HoloCuspForm) out["weight"] = j_exact_real(c.weight);
    if (c.verdict == Classification::Verdict::MaassForm) {
        out["eigenvalue"] = j_exact_real(c.eigenvalue);
        out["parity"] = c.parity;
    }
    out["chi"] = j_exact_complex(c.chi);
    out["omega_F"] = j_exact_complex(c.omega_F);
    out["diagnostics"] = j_checks(c.diagnostics);
    checks = c.diagnostics;
    return out;
}

ordered_json cmd_structural(const LFunctionData& data, const CommandRequest& req,
                            std::vector<CheckResult>& checks) {
    if (req.l_max < 1 || req.l_max > 12) throw input_error("l_max must be in [1, 12]");
    auto inv = compute_invariants(data.gamma, unsigned(req.l_max) + 4);
    auto pipe = structural_invariants(inv, req.l_max);
    int l_oracle = std::min(req.l_max, 4);
    auto fit = oracle_structural_fit(data.gamma, l_oracle, req.T);
    auto rec = recursive_d(pipe.d[1], req.l_max);

    ordered_json rows = ordered_json::array();
    for (int l = 0; l <= req.l_max; ++l) {
        ordered_json row;
        row["l"] = l;
        row["pipeline"] = j_exact_complex(pipe.d[std::size_t(l)]);
        row["recursion"] = j_exact_complex(rec.d[std::size_t(l)]);
        if (l <= l_oracle) {
            row["oracle"] = {{"re", fit.d[std::size_t(l)].value.real()},
                             {"im", fit.d[std::size_t(l)].value.imag()},
                             {"spread", fit.spread[std::size_t(l)]}};
            bool agree = rel_close(fit.d[std::size_t(l)].value, pipe.d[std::size_t(l)].value,
                                   kTolOracle);
            add_check(checks, "oracle_agreement_l" + std::to_string(l), agree,
                      "pipeline " + fmt(pipe.d[std::size_t(l)].value) + " vs oracle " +
                          fmt(fit.d[std::size_t(l)].value));
        }
        bool match = exact_or_close(rec.d[std::size_t(l)], pipe.d[std::size_t(l)], kTolDuplication);
        add_check(checks, "recursion_match_l" + std::to_string(l), match,
                  match ? "sequences agree" : "recursion diverges from pipeline");
        rows.push_back(row);
    }
    add_check(checks, "oracle_conditioning", !fit.ill_conditioned,
              fit.ill_conditioned ? "extraction spread exceeds 10% of a coefficient"
                                  : "spreads within bounds");
    ordered_json out;
    out["T"] = req.T;
    out["l_max"] = req.l_max;
    out["d"] = rows;
    return out;
}

ordered_json cmd_verify_quadratic(const LFunctionData& data, const CommandRequest& req,
                                  std::vector<CheckResult>& checks) {
    if (req.N < 2 || req.N > 8) throw input_error("N must be in [2, 8]");
    auto inv = compute_invariants(data.gamma, unsigned(req.N) + 4);
    auto seq = structural_invariants(inv, req.N);
    auto q = quadratic_form(req.N);

    bool all_exact = std::all_of(seq.d.begin(), seq.d.end(), [](const ExactComplex& v) {
        return v.is_exact() && v.exact->is_real();
    });
    ordered_json out;
    out["N"] = req.N;
    out["normalization"] = j_pi_value({q.normalization, q.normalization.value()});
    if (all_exact) {
        std::vector<Rational> d;
        for (const auto& v : seq.d) d.push_back(v.exact->re);
        Rational res = q.eval(d);
        out["residual"] = {{"provenance", "exact"}, {"exact", j_rational(res)}, {"value", to_double(res)}};
        add_check(checks, "quadratic_form_zero", res == 0,
                  res == 0 ? "exact zero" : "nonzero exact residual " + to_string(res));
    } else {
        std::vector<cplx> d;
        for (const auto& v : seq.d) d.push_back(v.value);
        cplx res = q.eval(d);
        double max_term = 0.0;
        for (int l = 0; l + 0 <= req.N; ++l)
            for (int h = 0; l + h <= req.N; ++h)
                max_term = std::max(max_term,
                                    std::abs(to_double(q.alpha[std::size_t(l)][std::size_t(h)]) *
                                             d[std::size_t(l)] * d[std::size_t(h)]));
        out["residual"] = {{"provenance", "float"}, {"value", {{"re", res.real()}, {"im", res.imag()}}}};
        out["max_term"] = max_term;
        add_check(checks, "quadratic_form_zero", std::abs(res) <= kTolQuadraticFloat * max_term,
                  "residual " + fmt(res) + " against scale " + fmt(max_term));
    }
    return out;
}

ordered_json cmd_verify_identity(const LFunctionData& data, std::vector<CheckResult>& checks) {
    const GammaFactor& gamma = data.gamma;
    ordered_json out;

    // reflection identity on a fixed random sample
    std::mt19937 rng(12345u);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(1.0, 20.0);
    double worst = 0.0;
    int sampled = 0;
    for (int k = 0; k < 200 && sampled < 100; ++k) {
        cplx s(re(rng), (k % 2 ? 1.0 : -1.0) * im(rng));
        try {
            worst = std::max(worst, std::abs(reflection_residual(gamma, s)));
            ++sampled;
        } catch (const pole_error&) {
            continue;  // resample away from Gamma poles
        }
    }
    out["reflection_max_residual"] = worst;
    add_check(checks, "reflection_identity", sampled == 100 && worst <= kTolReflection,
              "max |residual| " + fmt(worst) + " over " + std::to_string(sampled) + " points");

    // S-expansion frequency symmetry
    auto S = s_expansion(gamma);
    add_check(checks, "s_frequency_symmetry", S.frequency_symmetric(),
              std::to_string(S.terms.size()) + " terms");

    // invariance under factor duplication
    GammaFactor dup = duplicate_factor(gamma, 0);
    auto inv_a = compute_invariants(gamma, 8);  // H depth covers the d_4 pipeline below
    auto inv_b = compute_invariants(dup, 8);
    bool inv_ok = exact_or_close(inv_a.chi, inv_b.chi, kTolDuplication) &&
                  exact_or_close(inv_a.xi, inv_b.xi, kTolDuplication) &&
                  exact_or_close(inv_a.omega_F, inv_b.omega_F, kTolDuplication);
    for (std::size_t n = 0; n <= 4 && inv_ok; ++n)
        inv_ok = exact_or_close(inv_a.H[n], inv_b.H[n], kTolDuplication);
    add_check(checks, "duplication_invariants", inv_ok,
              inv_ok ? "chi, xi, omega_F, H(0..4) preserved" : "invariant drift under duplication");

    if (inv_a.degree_is(2) && inv_a.conductor_is_one()) {
        auto da = structural_invariants(inv_a, 4);
        auto db = structural_invariants(inv_b, 4);
        bool d_ok = true;
        for (std::size_t l = 0; l <= 4 && d_ok; ++l)
            d_ok = exact_or_close(da.d[l], db.d[l], kTolDuplication);
        add_check(checks, "duplication_structural", d_ok,
                  d_ok ? "d_0..d_4 preserved" : "structural sequence drift");
    }

    double worst_h = 0.0;
    for (int k = 1; k <= 10; ++k) {
        cplx s(-0.8 + 0.17 * k, 2.0 + 1.3 * k);
        cplx ha = eval_h({gamma, false}, s), hb = eval_h({dup, false}, s);
        worst_h = std::max(worst_h, std::abs(ha - hb) / std::max(1e-300, std::abs(ha)));
    }
    out["duplication_h_max_residual"] = worst_h;
    add_check(checks, "duplication_h_values", worst_h <= kTolDuplication,
              "max relative drift " + fmt(worst_h) + " over 10 points");
    return out;
}

QExpansion effective_expansion(const LFunctionData& data) {
    switch (data.coefficients.kind) {
        case CoefficientPrefix::Kind::Ramanujan: return delta_expansion(256);
        case CoefficientPrefix::Kind::ZetaSquared: return divisor_expansion(256);
        default: break;
    }
    if (data.coefficients.all_zero()) throw input_error("period-check needs nonzero coefficients");
    Classification c = classify(data);
    cplx lambda = c.verdict == Classification::Verdict::HoloCuspForm
                      ? cplx((c.weight.value - 1.0) / 2.0, 0.0)
                      : cplx(0.0, std::sqrt(std::max(0.0, c.eigenvalue.value - 0.25)));
    QExpansion q;
    q.lambda = lambda;
    double growth = 0.0;
    for (int n = 1; n <= data.coefficients.n_max(); ++n) {
        cplx cn = data.coefficients.value(n) * std::pow(cplx(double(n), 0.0), lambda);
        q.c.push_back(cn);
        if (n > 1 && std::abs(cn) > 1.0)
            growth = std::max(growth, std::log(std::abs(cn)) / std::log(double(n)));
    }
    q.c_growth = growth + 1.0;
    return q;
}

ordered_json cmd_period_check(const LFunctionData& data, std::vector<CheckResult>& checks) {
    QExpansion q = effective_expansion(data);
    bool cusp_form = data.coefficients.kind == CoefficientPrefix::Kind::Ramanujan;

    double worst_three = 0.0, worst_mod = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            cplx z(-0.4 + 0.2 * i, 0.3 + 1.7 * j / 4.0);
            auto psi = [&](cplx w) {
                return eval_f(q, w) - std::pow(w, -2.0 * q.lambda - 1.0) * eval_f(q, -1.0 / w);
            };
            cplx zp1 = z + 1.0;
            double scale = std::max({std::abs(psi(z)), std::abs(psi(zp1)),
                                     std::abs(std::pow(zp1, -2.0 * q.lambda - 1.0) * psi(z / zp1)),
                                     std::abs(eval_f(q, z))});
            worst_three = std::max(worst_three,
                                   std::abs(three_term_residual(q, q.lambda, z)) / scale);
            if (cusp_form)
                worst_mod = std::max(worst_mod, std::abs(psi(z)) / std::abs(eval_f(q, z)));
        }
    }
    ordered_json out;
    out["grid"] = "x in [-0.4, 0.4], y in [0.3, 2], 5x5";
    out["three_term_max_relative"] = worst_three;
    add_check(checks, "three_term_identity", worst_three <= kTolPeriod,
              "max relative residual " + fmt(worst_three));
    if (cusp_form) {
        out["modularity_max_relative"] = worst_mod;
        add_check(checks, "modularity", worst_mod <= kTolPeriod,
                  "max |psi|/|f| " + fmt(worst_mod));
    }
    return out;
}

std::vector<Rational> parse_grid(const std::string& grid) {
    if (grid.empty()) throw input_error("sweep needs --grid");
    std::vector<Rational> pts;
    if (grid.find(',') != std::string::npos || grid.find(':') == std::string::npos) {
        std::stringstream ss(grid);
        std::string tok;
        while (std::getline(ss, tok, ',')) pts.push_back(rational_from_string(tok));
    } else {
        std::stringstream ss(grid);
        std::string a, b, n;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n))
            throw input_error("grid must be 'a:b:n' or 'p1,p2,...'");
        Rational lo = rational_from_string(a), hi = rational_from_string(b);
        long count = std::stol(n);
        if (count < 1) throw input_error("grid count must be >= 1");
        if (count == 1) {
            pts.push_back(lo);
        } else {
            Rational step = (hi - lo) / (count - 1);
            for (long k = 0; k < count; ++k) pts.push_back(lo + step * k);
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

ordered_json cmd_sweep(const CommandRequest& req, const std::string& mode,
                       std::vector<CheckResult>& checks) {
    if (req.family != "hecke" && req.family != "maass")
        throw input_error("sweep family must be 'hecke' or 'maass'");
    auto pts = parse_grid(req.grid);

    ordered_json rows = ordered_json::array();
    for (const Rational& p : pts) {
        std::vector<std::string> names;
        if (req.family == "hecke") {
            names.push_back("hecke(" + to_string(p) + ")");
        } else {
            names.push_back("maass(0," + to_string(p) + ")");
            names.push_back("maass(1," + to_string(p) + ")");
        }
        for (const std::string& name : names) {
            LFunctionData data = load_entry(name).data;
            if (mode == "float") data = to_float_mode(data);
            auto inv = compute_invariants(data.gamma, 8);
            auto seq = structural_invariants(inv, 4);

            ordered_json row;
            row["entry"] = name;
            row["chi"] = j_exact_complex(inv.chi);
            row["omega_F"] = j_exact_complex(inv.omega_F);
            row["d1"] = j_exact_complex(seq.d[1]);

            ExactComplex expected_d1 = inv.chi - ExactComplex(Rational(1, 8));
            bool d1_ok = exact_or_close(seq.d[1], expected_d1, kTolDuplication);
            add_check(checks, name + ":d1_identity", d1_ok,
                      d1_ok ? "d1 = chi - 1/8" : "d1 != chi - 1/8");

            for (int N = 2; N <= 4; ++N) {
                auto q = quadratic_form(N);
                bool ok;
                std::string detail;
                if (std::all_of(seq.d.begin(), seq.d.end(), [](const ExactComplex& v) {
                        return v.is_exact() && v.exact->is_real();
                    })) {
                    std::vector<Rational> d;
                    for (const auto& v : seq.d) d.push_back(v.exact->re);
                    Rational res = q.eval(d);
                    ok = res == 0;
                    detail = ok ? "exact zero" : "residual " + to_string(res);
                } else {
                    std::vector<cplx> d;
                    for (const auto& v : seq.d) d.push_back(v.value);
                    cplx res = q.eval(d);
                    double max_term = 1e-300;
                    for (int l = 0; l <= N; ++l)
                        for (int h = 0; l + h <= N; ++h)
                            max_term = std::max(
                                max_term, std::abs(to_double(q.alpha[std::size_t(l)][std::size_t(h)]) *
                                                   d[std::size_t(l)] * d[std::size_t(h)]));
                    ok = std::abs(res) <= kTolQuadraticFloat * max_term;
                    detail = "residual " + fmt(res);
                }
                add_check(checks, name + ":Q" + std::to_string(N), ok, detail);
            }
            rows.push_back(row);
        }
    }
    ordered_json out;
    out["family"] = req.family;
    out["points"] = rows;
    return out;
}

}  // namespace

RunResult run(const CommandRequest& request) {
    ordered_json report;
    report["subcommand"] = request.subcommand;
    report["input"] = request.input;
    try {
        std::string mode = resolve_mode(request);
        report["mode"] = mode;
        report["tolerances"] = {{"reflection", kTolReflection},
                                {"oracle", kTolOracle},
                                {"duplication", kTolDuplication},
                                {"quadratic_float", kTolQuadraticFloat},
                                {"period", kTolPeriod}};

        std::vector<CheckResult> checks;
        ordered_json result;
        const std::string& sub = request.subcommand;
        if (sub == "sweep") {
            result = cmd_sweep(request, mode, checks);
        } else {
            LFunctionData data = load_input(request, mode);
            if (sub == "invariants") result = cmd_invariants(data, checks);
            else if (sub == "classify") result = cmd_classify(data, checks);
            else if (sub == "structural") result = cmd_structural(data, request, checks);
            else if (sub == "verify-quadratic") result = cmd_verify_quadratic(data, request, checks);
            else if (sub == "verify-identity") result = cmd_verify_identity(data, checks);
            else if (sub == "period-check") result = cmd_period_check(data, checks);
            else throw input_error("unknown subcommand '" + sub + "'");
        }

        bool all_pass = std::all_of(checks.begin(), checks.end(),
                                    [](const CheckResult& c) { return c.pass; });
        report["result"] = result;
        report["checks"] = j_checks(checks);
        report["pass"] = all_pass;
        return {all_pass ? 0 : 1, report.dump(2) + "\n"};
    } catch (const std::exception& e) {
        report["error"] = e.what();
        return {2, report.dump(2) + "\n"};
    }
}

}  // namespace selberglab::cli
