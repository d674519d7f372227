#include "selberglab/catalog.hpp"
#include "selberglab/classifier.hpp"
#include "selberglab/cli.hpp"
#include "selberglab/period.hpp"
#include "selberglab/specfun.hpp"
#include "selberglab/structural.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

namespace py = pybind11;
using namespace selberglab;

namespace {

LFunctionData resolve(const std::string& input) {
    if (!input.empty() && (input.front() == '{' || input.front() == '['))
        return parse_gamma_json(input);
    return load_entry(input).data;
}

py::dict check_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "invariants and classification of degree-2, conductor-1 functional equations";

    m.def(
        "run",
        [](const std::string& subcommand, const std::string& input, const std::string& mode,
           bool input_is_path, int l_max, int N, double T, const std::string& family,
           const std::string& grid) {
            cli::CommandRequest req;
            req.subcommand = subcommand;
            req.input = input;
            req.input_is_path = input_is_path;
            req.mode = mode;
            req.l_max = l_max;
            req.N = N;
            req.T = T;
            req.family = family;
            req.grid = grid;
            auto res = cli::run(req);
            return py::make_tuple(res.exit_code, res.report);
        },
        py::arg("subcommand"), py::arg("input") = "", py::arg("mode") = "exact",
        py::arg("input_is_path") = false, py::arg("l_max") = 8, py::arg("N") = 3,
        py::arg("T") = 20.0, py::arg("family") = "", py::arg("grid") = "",
        "execute a batch command; returns (exit_code, json_report)");

    m.def(
        "chi",
        [](const std::string& input) {
            return compute_invariants(resolve(input).gamma, 2).chi.value;
        },
        py::arg("input"), "eigenweight of a catalog entry or JSON document");

    m.def(
        "structural",
        [](const std::string& input, int l_max) {
            auto inv = compute_invariants(resolve(input).gamma, unsigned(l_max) + 4);
            auto seq = structural_invariants(inv, l_max);
            std::vector<std::complex<double>> out;
            for (const auto& d : seq.d) out.push_back(d.value);
            return out;
        },
        py::arg("input"), py::arg("l_max") = 4, "structural sequence d_0..d_l_max");

    m.def(
        "classify",
        [](const std::string& input) {
            Classification c = classify(resolve(input));
            py::dict d;
            switch (c.verdict) {
                case Classification::Verdict::HoloCuspForm:
                    d["verdict"] = "holomorphic_cusp_form";
                    d["weight"] = c.weight.value;
                    break;
                case Classification::Verdict::ZetaSquared:
                    d["verdict"] = "zeta_squared";
                    break;
                case Classification::Verdict::MaassForm:
                    d["verdict"] = "maass_form";
                    d["eigenvalue"] = c.eigenvalue.value;
                    d["parity"] = c.parity;
                    break;
            }
            d["chi"] = c.chi.value;
            d["omega_F"] = c.omega_F.value;
            py::list diags;
            for (const auto& diag : c.diagnostics) diags.append(check_dict(diag));
            d["diagnostics"] = diags;
            return d;
        },
        py::arg("input"), "Theorem-style verdict with consistency diagnostics");

    m.def(
        "delta_tau",
        [](int n_max) {
            py::list out;
            for (const Integer& t : delta_tau(n_max)) out.append(py::int_(py::str(t.str())));
            return out;
        },
        py::arg("n_max"), "cusp-form coefficients tau(1..n_max) as exact integers");

    m.def(
        "mittag_leffler",
        [](double beta, std::complex<double> w) { return specfun::eval_mittag_leffler(beta, w); },
        py::arg("beta"), py::arg("w"), "entire series sum (-w)^l / Gamma(l + beta)");

    m.def(
        "serialize",
        [](const std::string& input) { return serialize_gamma(resolve(input)); },
        py::arg("input"), "canonical JSON document for an entry");
}
