#include "selberglab/catalog.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace selberglab {

using json = nlohmann::ordered_json;

std::vector<Integer> divisor_counts(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<Integer> d(std::size_t(n_max), 0);
    for (int a = 1; a <= n_max; ++a)
        for (int n = a; n <= n_max; n += a) ++d[std::size_t(n - 1)];
    return d;
}

std::vector<Integer> ramanujan_tau(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const std::size_t len = std::size_t(n_max);  // degrees 0..n_max-1
    // Euler product via the pentagonal-number series
    std::vector<Integer> E(len, 0);
    for (long k = 0;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= long(len) && g2 >= long(len)) break;
        Integer s = (k % 2 == 0) ? 1 : -1;
        if (g1 < long(len)) E[std::size_t(g1)] += s;
        if (g2 < long(len) && k > 0) E[std::size_t(g2)] += s;
    }
    auto mul = [len](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> c(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j + i < len; ++j)
                if (b[j] != 0) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    auto E2 = mul(E, E), E4 = mul(E2, E2), E8 = mul(E4, E4), E16 = mul(E8, E8);
    auto E24 = mul(E16, E8);
    // tau(n) = [q^{n-1}] E^24
    return E24;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw std::invalid_argument(path + ": " + msg);
}

bool looks_float(const std::string& s) {
    return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
           s.find('E') != std::string::npos;
}

ExactReal parse_real(const json& j, const std::string& path) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (looks_float(s)) return ExactReal::from_float(std::stod(s));
        try {
            return ExactReal(rational_from_string(s));
        } catch (const std::exception&) {
            fail(path, "not a rational string: '" + s + "'");
        }
    }
    if (j.is_number_integer()) return ExactReal(Rational(j.get<long>()));
    if (j.is_number()) return ExactReal::from_float(j.get<double>());
    fail(path, "expected rational string or number");
}

ExactComplex parse_complex(const json& j, const std::string& path) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im")) fail(path, "complex value needs re and im");
        ExactReal re = parse_real(j.at("re"), path + ".re");
        ExactReal im = parse_real(j.at("im"), path + ".im");
        if (re.is_exact() && im.is_exact())
            return ExactComplex(GaussianRational(*re.exact, *im.exact));
        return ExactComplex(std::complex<double>(re.value, im.value));
    }
    ExactReal re = parse_real(j, path);
    if (re.is_exact()) return ExactComplex(GaussianRational(*re.exact));
    return ExactComplex(std::complex<double>(re.value, 0.0));
}

QRep parse_q(const json& j, const std::string& path) {
    if (j.is_object()) {
        QExactRep q;
        if (j.contains("rational")) {
            ExactReal c = parse_real(j.at("rational"), path + ".rational");
            if (!c.is_exact()) fail(path + ".rational", "must be exact");
            q.c = *c.exact;
        }
        auto exp_field = [&](const char* name, Rational& out) {
            if (!j.contains(name)) return;
            ExactReal e = parse_real(j.at(name), path + "." + name);
            if (!e.is_exact()) fail(path + "." + std::string(name), "must be exact");
            out = *e.exact;
        };
        exp_field("two_exp", q.two_exp);
        exp_field("pi_exp", q.pi_exp);
        if (q.c <= 0) fail(path + ".rational", "Q must be positive");
        return QRep::from_exact(q);
    }
    if (j.is_number()) {
        double v = j.get<double>();
        if (v <= 0) fail(path, "Q must be positive");
        return QRep::from_float(v);
    }
    fail(path, "expected object or number");
}

CoefficientPrefix parse_coefficients(const json& j, const std::string& path) {
    CoefficientPrefix c;
    if (!j.is_object()) fail(path, "expected object");
    std::string kind = j.value("kind", "list");
    int n_max = j.value("n_max", 0);
    if (kind == "zeta_squared") {
        c.kind = CoefficientPrefix::Kind::ZetaSquared;
        if (n_max < 1) n_max = 32;
        for (const auto& d : divisor_counts(n_max)) c.base.emplace_back(Rational(d));
    } else if (kind == "ramanujan") {
        c.kind = CoefficientPrefix::Kind::Ramanujan;
        if (n_max < 1) n_max = 32;
        for (const auto& t : ramanujan_tau(n_max)) c.base.emplace_back(Rational(t));
        c.shift = ExactComplex(GaussianRational(Rational(-11, 2)));
    } else if (kind == "list") {
        c.kind = CoefficientPrefix::Kind::List;
        if (!j.contains("values") || !j.at("values").is_array())
            fail(path + ".values", "list kind needs a values array");
        std::size_t i = 0;
        for (const auto& v : j.at("values"))
            c.base.push_back(parse_complex(v, path + ".values[" + std::to_string(i++) + "]"));
        if (n_max > 0 && std::size_t(n_max) != c.base.size())
            fail(path + ".n_max", "does not match values length");
        if (j.contains("shift")) c.shift = parse_complex(j.at("shift"), path + ".shift");
    } else {
        fail(path + ".kind", "unknown kind '" + kind + "'");
    }
    if (c.base.empty()) fail(path, "empty coefficient prefix");
    return c;
}

json real_to_json(const ExactReal& r) {
    if (r.is_exact()) return to_string(*r.exact);
    return r.value;
}

json complex_to_json(const ExactComplex& c) {
    json out;
    if (c.is_exact()) {
        out["re"] = to_string(c.exact->re);
        out["im"] = to_string(c.exact->im);
    } else {
        out["re"] = c.value.real();
        out["im"] = c.value.imag();
    }
    return out;
}

json exp_to_json(const Rational& e) {
    if (is_integer(e)) return e.convert_to<long>();
    return to_string(e);
}

}  // namespace

LFunctionData parse_gamma_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("document root must be an object");

    LFunctionData f;
    if (!doc.contains("Q")) fail("Q", "missing");
    f.gamma.q = parse_q(doc.at("Q"), "Q");
    if (!doc.contains("omega")) fail("omega", "missing");
    f.gamma.omega = parse_complex(doc.at("omega"), "omega");
    if (!doc.contains("factors") || !doc.at("factors").is_array() || doc.at("factors").empty())
        fail("factors", "need a nonempty array");
    std::size_t i = 0;
    for (const auto& fj : doc.at("factors")) {
        std::string p = "factors[" + std::to_string(i++) + "]";
        if (!fj.is_object()) fail(p, "expected object");
        GammaTerm t;
        t.lambda = parse_real(fj.at("lambda"), p + ".lambda");
        bool pos = t.lambda.is_exact() ? (*t.lambda.exact > 0) : (t.lambda.value > 0);
        if (!pos) fail(p + ".lambda", "must be positive");
        t.mu = parse_complex(fj.at("mu"), p + ".mu");
        bool re_ok = t.mu.is_exact() ? (t.mu.exact->re >= 0) : (t.mu.value.real() >= 0);
        if (!re_ok) fail(p + ".mu.re", "must be nonnegative");
        f.gamma.factors.push_back(t);
    }
    if (doc.contains("coefficients"))
        f.coefficients = parse_coefficients(doc.at("coefficients"), "coefficients");
    else
        f.coefficients.base = {ExactComplex(Rational(1))};
    f.pole_order = doc.value("pole_order", 0);
    if (f.pole_order < 0) fail("pole_order", "must be nonnegative");
    try {
        f.gamma.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("gamma: ") + e.what());
    }
    return f;
}

std::string serialize_gamma(const LFunctionData& f) {
    json doc;
    if (f.gamma.q.is_exact()) {
        const auto& q = *f.gamma.q.exact;
        doc["Q"] = {{"rational", to_string(q.c)},
                    {"two_exp", exp_to_json(q.two_exp)},
                    {"pi_exp", exp_to_json(q.pi_exp)}};
    } else {
        doc["Q"] = f.gamma.q.value;
    }
    doc["omega"] = complex_to_json(f.gamma.omega);
    doc["factors"] = json::array();
    for (const auto& t : f.gamma.factors)
        doc["factors"].push_back({{"lambda", real_to_json(t.lambda)}, {"mu", complex_to_json(t.mu)}});
    json coeffs;
    switch (f.coefficients.kind) {
        case CoefficientPrefix::Kind::ZetaSquared: coeffs["kind"] = "zeta_squared"; break;
        case CoefficientPrefix::Kind::Ramanujan: coeffs["kind"] = "ramanujan"; break;
        default: coeffs["kind"] = "list"; break;
    }
    coeffs["n_max"] = f.coefficients.n_max();
    if (f.coefficients.kind == CoefficientPrefix::Kind::List) {
        coeffs["values"] = json::array();
        for (const auto& c : f.coefficients.base) coeffs["values"].push_back(complex_to_json(c));
        bool shift_zero = f.coefficients.shift.is_exact()
                              ? f.coefficients.shift.exact->is_zero()
                              : f.coefficients.shift.value == std::complex<double>(0.0, 0.0);
        if (!shift_zero) coeffs["shift"] = complex_to_json(f.coefficients.shift);
    }
    doc["coefficients"] = coeffs;
    doc["pole_order"] = f.pole_order;
    return doc.dump(2);
}

namespace {

ExactReal parse_param(const std::string& s) {
    if (looks_float(s)) return ExactReal::from_float(std::stod(s));
    return ExactReal(rational_from_string(s));
}

Rational square_of(const ExactReal& x) { return *x.exact * *x.exact; }

void self_test(const CatalogEntry& e) {
    auto inv = compute_invariants(e.data.gamma, 2);
    auto agree = [](const ExactComplex& got, const ExactComplex& want) {
        if (got.is_exact() && want.is_exact()) return *got.exact == *want.exact;
        return std::abs(got.value - want.value) < 1e-9;
    };
    if (!agree(inv.chi, e.expected_chi) || !agree(inv.xi, e.expected_xi) ||
        !agree(inv.omega_F, e.expected_omega_F))
        throw std::logic_error("catalog entry '" + e.name + "' fails its stored invariants");
    auto cls = classify(e.data);
    if (cls.verdict != e.expected_verdict)
        throw std::logic_error("catalog entry '" + e.name + "' fails its stored classification");
    // Lemma-4.1 shape is assertable whenever xi lands on an even integer
    bool xi_even = inv.xi.is_exact()
                       ? (inv.xi.exact->is_real() && is_integer(inv.xi.exact->re) &&
                          numerator(inv.xi.exact->re) % 2 == 0)
                       : (std::abs(inv.xi.value.imag()) < 1e-9 &&
                          std::abs(inv.xi.value.real() - 2.0 * std::round(inv.xi.value.real() / 2.0)) < 1e-9);
    if (xi_even && !validate_normalized(e.data).all_pass())
        throw std::logic_error("catalog entry '" + e.name + "' fails normalization checks");
}

}  // namespace

CatalogEntry load_entry(const std::string& name, int n_max) {
    CatalogEntry e;
    e.name = name;
    if (name == "zeta_squared") {
        e.data.gamma.q = QRep::from_exact({Rational(1), Rational(0), Rational(-1)});
        e.data.gamma.omega = ExactComplex(Rational(1));
        GammaTerm t;
        t.lambda = ExactReal(Rational(1, 2));
        t.mu = ExactComplex(GaussianRational{});
        e.data.gamma.factors = {t, t};
        e.data.coefficients.kind = CoefficientPrefix::Kind::ZetaSquared;
        for (const auto& d : divisor_counts(n_max)) e.data.coefficients.base.emplace_back(Rational(d));
        e.data.pole_order = 2;
        e.expected_chi = ExactComplex(Rational(0));
        e.expected_xi = ExactComplex(Rational(-2));
        e.expected_omega_F = ExactComplex(Rational(1));
        e.expected_verdict = Classification::Verdict::ZetaSquared;
    } else if (name == "ramanujan_normalized") {
        VirtualGammaFactor v;
        v.kind = VirtualGammaFactor::Kind::Hecke;
        v.mu = ExactReal(Rational(11, 2));
        e.data.gamma = virtual_to_gamma(v);
        e.data.coefficients.kind = CoefficientPrefix::Kind::Ramanujan;
        for (const auto& t : ramanujan_tau(n_max)) e.data.coefficients.base.emplace_back(Rational(t));
        e.data.coefficients.shift = ExactComplex(GaussianRational(Rational(-11, 2)));
        e.expected_chi = ExactComplex(Rational(121, 2));
        e.expected_xi = ExactComplex(Rational(10));
        e.expected_omega_F = ExactComplex(Rational(1));
        e.expected_verdict = Classification::Verdict::HoloCuspForm;
    } else if (name.rfind("hecke(", 0) == 0 && name.back() == ')') {
        ExactReal mu = parse_param(name.substr(6, name.size() - 7));
        bool pos = mu.is_exact() ? (*mu.exact > 0) : (mu.value > 0);
        if (!pos) throw std::invalid_argument("hecke parameter must be positive");
        VirtualGammaFactor v;
        v.kind = VirtualGammaFactor::Kind::Hecke;
        v.mu = mu;
        e.data.gamma = virtual_to_gamma(v);
        e.data.coefficients.base = {ExactComplex(Rational(1))};
        if (mu.is_exact()) {
            e.expected_chi = ExactComplex(GaussianRational(Rational(2) * square_of(mu)));
            e.expected_xi = ExactComplex(GaussianRational(Rational(2) * *mu.exact - 1));
        } else {
            e.expected_chi = ExactComplex(std::complex<double>(2.0 * mu.value * mu.value, 0.0));
            e.expected_xi = ExactComplex(std::complex<double>(2.0 * mu.value - 1.0, 0.0));
        }
        e.expected_omega_F = e.data.gamma.omega;
        e.expected_verdict = Classification::Verdict::HoloCuspForm;
    } else if (name.rfind("maass(", 0) == 0 && name.back() == ')') {
        std::string args = name.substr(6, name.size() - 7);
        auto comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("maass needs (eps,kappa)");
        int eps = std::stoi(args.substr(0, comma));
        if (eps != 0 && eps != 1) throw std::invalid_argument("maass parity must be 0 or 1");
        ExactReal kappa = parse_param(args.substr(comma + 1));
        bool nonneg = kappa.is_exact() ? (*kappa.exact >= 0) : (kappa.value >= 0);
        if (!nonneg) throw std::invalid_argument("maass kappa must be nonnegative");
        VirtualGammaFactor v;
        v.kind = VirtualGammaFactor::Kind::Maass;
        v.epsilon = eps;
        v.kappa = kappa;
        e.data.gamma = virtual_to_gamma(v);
        e.data.coefficients.base = {ExactComplex(Rational(1))};
        if (kappa.is_exact()) {
            e.expected_chi = ExactComplex(GaussianRational(Rational(-2) * square_of(kappa)));
        } else {
            e.expected_chi = ExactComplex(std::complex<double>(-2.0 * kappa.value * kappa.value, 0.0));
        }
        e.expected_xi = ExactComplex(Rational(2 * (eps - 1)));
        e.expected_omega_F = ExactComplex(Rational(eps == 0 ? 1 : -1));
        bool zero = kappa.is_exact() ? (*kappa.exact == 0) : (kappa.value == 0.0);
        e.expected_verdict = zero ? Classification::Verdict::ZetaSquared
                                  : Classification::Verdict::MaassForm;
    } else {
        throw std::invalid_argument("unknown catalog entry '" + name + "'");
    }
    self_test(e);
    return e;
}

}  // namespace selberglab
